// cfk: torsion invariants of knot Floer complexes from the command line.

#include "cfk/commands.hpp"
#include "cfk/errors.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <thread>

namespace {

void emit(const cfk::RunReport& r, bool json)
{
    std::cout << (json ? r.render_json() : r.render_text());
    std::cout.flush();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cfk: torsion lower bounds for rational unknotting"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    int p = 0, q = 0;
    std::string file_a, file_b, out;
    std::string emit_complex;
    std::function<cfk::RunReport()> run;

    auto* torus = app.add_subcommand("torus", "Closed forms, staircase pipeline and k(p,q) for T(p,q)");
    torus->add_option("p", p)->required();
    torus->add_option("q", q)->required();
    torus->add_option("--emit-complex", emit_complex, "Write the staircase complex as JSON");
    torus->callback([&] {
        run = [&] {
            std::optional<std::filesystem::path> path;
            if (!emit_complex.empty()) path = emit_complex;
            return cfk::cmd_torus(p, q, path);
        };
    });

    auto* invariants = app.add_subcommand("invariants", "Homology and torsion sequences of a complex file");
    invariants->add_option("file", file_a)->required();
    invariants->callback([&] { run = [&] { return cfk::cmd_invariants(file_a); }; });

    auto* distance = app.add_subcommand("distance", "Pair lower bound between two complexes");
    distance->add_option("a", file_a)->required();
    distance->add_option("b", file_b)->required();
    distance->callback([&] { run = [&] { return cfk::cmd_distance(file_a, file_b); }; });

    auto* tensor = app.add_subcommand("tensor", "Tensor product (connected sum) of two knot complexes");
    tensor->add_option("a", file_a)->required();
    tensor->add_option("b", file_b)->required();
    tensor->add_option("out", out)->required();
    tensor->callback([&] { run = [&] { return cfk::cmd_tensor(file_a, file_b, out); }; });

    auto* kpq = app.add_subcommand("kpq", "Upper bound k(p,q) with its recursion trace");
    kpq->add_option("p", p)->required();
    kpq->add_option("q", q)->required();
    kpq->callback([&] { run = [&] { return cfk::cmd_kpq(p, q); }; });

    cfk::ObstructOptions obstruct_opts;
    std::string name, table, qfile;
    int tau = 0;
    auto* obstruct = app.add_subcommand("obstruct", "(1+qt)-divisibility test on Q_K - t^tau");
    obstruct->add_option("name", name, "Knot of the bundled table (all when omitted)");
    obstruct->add_option("--table", table, "Knot table JSON");
    auto* tau_opt = obstruct->add_option("--tau", tau);
    auto* qfile_opt = obstruct->add_option("--qfile", qfile, "Poincare polynomial JSON [{q,t,c}, ...]");
    qfile_opt->needs(tau_opt);
    obstruct->callback([&] {
        if (!name.empty()) obstruct_opts.name = name;
        if (!table.empty()) obstruct_opts.table = table;
        if (tau_opt->count() > 0) obstruct_opts.tau = tau;
        if (!qfile.empty()) obstruct_opts.qfile = qfile;
        run = [&] { return cfk::cmd_obstruct(obstruct_opts); };
    });

    auto* validate = app.add_subcommand("validate", "Check ids, gradings and d^2 = 0");
    validate->add_option("file", file_a)->required();
    validate->callback([&] { run = [&] { return cfk::cmd_validate(file_a); }; });

    int pmax = 30, qmax = 30;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    bool full = false;
    auto* sweep = app.add_subcommand("sweep", "Check torus identities on the coprime grid");
    sweep->add_option("pmax", pmax, "Largest p")->capture_default_str();
    sweep->add_option("qmax", qmax, "Largest q")->capture_default_str();
    sweep->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--full", full, "Print every grid cell");
    sweep->callback([&] { run = [&] { return cfk::cmd_sweep(pmax, qmax, jobs, full); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cfk::RunReport r = run();
        r.command.assign(argv, argv + argc);
        r.command.front() = "cfk";
        emit(r, json);
        return r.exit_code;
    } catch (const cfk::Error& e) {
        std::cerr << "cfk: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "cfk: internal error: " << e.what() << "\n";
        return 3;
    }
}
