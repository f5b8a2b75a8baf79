#include "cfk/commands.hpp"

#include "cfk/complex_io.hpp"
#include "cfk/errors.hpp"
#include "cfk/obstruction.hpp"
#include "cfk/torsion.hpp"
#include "cfk/torus.hpp"
#include "cfk/unknotting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#ifndef CFK_DEFAULT_DATA_DIR
#define CFK_DEFAULT_DATA_DIR "data"
#endif

namespace cfk {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

fs::path data_dir()
{
    if (const char* env = std::getenv("CFK_DATA_DIR"); env && *env) return env;
    return CFK_DEFAULT_DATA_DIR;
}

fs::path default_knot_table()
{
    return data_dir() / "hfk_table_v1.json";
}

namespace {

template <typename T>
std::string join(const std::vector<T>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string sign_str(int s)
{
    return s > 0 ? "+1" : s < 0 ? "-1" : "";
}

ojson decomp_json(const ModuleDecomp& d)
{
    return {{"free_rank", d.free_rank}, {"torsion", d.torsion.entries()}};
}

ojson trace_json(const KpqResult& k)
{
    ojson trace = ojson::array();
    for (const auto& e : k.trace) trace.push_back({{"p", e.p}, {"q", e.q}, {"i", e.i}, {"j", e.j}, {"sign", e.sign}});
    return trace;
}

Table trace_table(const KpqResult& k)
{
    Table t{"k(p,q) trace", {"step", "p", "q", "i", "j", "sign"}, {}};
    for (std::size_t s = 0; s < k.trace.size(); ++s) {
        const auto& e = k.trace[s];
        const bool terminal = s + 1 == k.trace.size();
        t.rows.push_back({std::to_string(s), std::to_string(e.p), std::to_string(e.q),
                          terminal ? "" : std::to_string(e.i), terminal ? "" : std::to_string(e.j),
                          sign_str(e.sign)});
    }
    return t;
}

struct LoadedComplex {
    FreeComplexUW complex;
    InputDigest digest;
};

LoadedComplex load_checked(const fs::path& file)
{
    const auto text = read_text_file(file);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(file.string() + ": " + e.what());
    }
    LoadedComplex out{complex_from_json(j), {file.filename().string(), fnv1a64_hex(text)}};
    const auto report = validate(out.complex);
    if (!report.ok()) {
        std::string msg = file.string() + " is not a valid complex: " + report.issues.front().message;
        if (report.issues.size() > 1) msg += " (+" + std::to_string(report.issues.size() - 1) + " more)";
        throw DomainError(msg);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

RunReport cmd_torus(int p, int q, const std::optional<fs::path>& emit_complex)
{
    RunReport r;
    const auto s = alexander_quotient(p, q);
    const auto closed = closed_form_invariants(s.b_vec);
    const auto complex = staircase_complex(s);
    const auto inv = invariants_of(complex);
    const auto k = kpq(p, q);

    r.tables.push_back({torus_name(p, q) + " staircase",
                        {"field", "value"},
                        {{"a_vec", join(s.a_vec)},
                         {"b_vec", join(s.b_vec)},
                         {"generators", std::to_string(complex.size())}}});
    r.tables.push_back({"torsion invariants",
                        {"invariant", "closed-form", "pipeline"},
                        {{"t_q", std::to_string(closed.tq), std::to_string(inv.tq)},
                         {"t_q'", std::to_string(closed.tq_prime), std::to_string(inv.tq_prime)},
                         {"n_seq (w=0)", "", to_string(inv.n_seq)},
                         {"m_seq (w=u)", "", to_string(inv.m_seq)}}});
    r.tables.push_back({"rational unknotting bound", {"quantity", "value"}, {{"k(p,q)", std::to_string(k.k)}}});
    r.tables.push_back(trace_table(k));

    if (inv.tq != p - 1) r.warnings.push_back("pipeline t_q differs from p-1");
    if (closed.tq != inv.tq || closed.tq_prime != inv.tq_prime)
        r.warnings.push_back("closed-form and pipeline invariants disagree");
    if (closed.tq_prime > k.k) r.warnings.push_back("t_q' exceeds k(p,q)");

    r.results["p"] = p;
    r.results["q"] = q;
    r.results["a_vec"] = s.a_vec;
    r.results["b_vec"] = s.b_vec;
    r.results["closed_form"] = {{"tq", closed.tq}, {"tq_prime", closed.tq_prime}};
    r.results["pipeline"] = {{"tq", inv.tq},
                             {"tq_prime", inv.tq_prime},
                             {"n_seq", inv.n_seq.entries()},
                             {"m_seq", inv.m_seq.entries()}};
    r.results["kpq"] = {{"k", k.k}, {"trace", trace_json(k)}};

    if (emit_complex) {
        const auto text = dump_canonical(to_json(complex));
        write_text_file(*emit_complex, text);
        r.results["emitted"] = {{"path", emit_complex->filename().string()}, {"fnv1a64", fnv1a64_hex(text)}};
        r.tables.push_back({"output", {"file", "fnv1a64"}, {{emit_complex->filename().string(), fnv1a64_hex(text)}}});
    }
    return r;
}

RunReport cmd_invariants(const fs::path& file)
{
    RunReport r;
    const auto in = load_checked(file);
    r.inputs.push_back(in.digest);
    const auto& c = in.complex;
    const auto inv = torsion_sequences(c);
    const bool struct_w0 = structure_check(inv.homology_w0, c.components, c.markings);
    const bool struct_wu = structure_check(inv.homology_wu, c.components, c.markings);

    r.tables.push_back({"complex",
                        {"field", "value"},
                        {{"name", c.name},
                         {"generators", std::to_string(c.size())},
                         {"components", std::to_string(c.components)},
                         {"markings", std::to_string(c.markings)}}});
    r.tables.push_back({"homology (pipeline)",
                        {"specialization", "module", "structure_check"},
                        {{"w=0", to_string(inv.homology_w0), struct_w0 ? "pass" : "fail"},
                         {"w=u", to_string(inv.homology_wu), struct_wu ? "pass" : "fail"}}});
    r.tables.push_back({"torsion invariants (pipeline)",
                        {"invariant", "value"},
                        {{"n_seq", to_string(inv.n_seq)},
                         {"m_seq", to_string(inv.m_seq)},
                         {"t_q", std::to_string(inv.tq)},
                         {"t_q'", std::to_string(inv.tq_prime)}}});
    if (!struct_w0 || !struct_wu)
        r.warnings.push_back("homology does not have the expected free rank / multiplicity structure");

    r.results["name"] = c.name;
    r.results["generators"] = c.size();
    r.results["components"] = c.components;
    r.results["markings"] = c.markings;
    r.results["homology_w0"] = decomp_json(inv.homology_w0);
    r.results["homology_wu"] = decomp_json(inv.homology_wu);
    r.results["structure_check"] = {{"w0", struct_w0}, {"wu", struct_wu}};
    r.results["n_seq"] = inv.n_seq.entries();
    r.results["m_seq"] = inv.m_seq.entries();
    r.results["tq"] = inv.tq;
    r.results["tq_prime"] = inv.tq_prime;
    return r;
}

RunReport cmd_distance(const fs::path& a, const fs::path& b)
{
    RunReport r;
    const auto ca = load_checked(a);
    const auto cb = load_checked(b);
    r.inputs.push_back(ca.digest);
    r.inputs.push_back(cb.digest);
    const auto ia = torsion_sequences(ca.complex);
    const auto ib = torsion_sequences(cb.complex);
    const int ka = ca.complex.components, kb = cb.complex.components;
    const int dn = pair_lower_bound(ia.n_seq, ib.n_seq, ka, kb);
    const int dm = pair_lower_bound(ia.m_seq, ib.m_seq, ka, kb);

    r.tables.push_back({"sequences (pipeline)",
                        {"complex", "components", "n_seq", "m_seq"},
                        {{ca.complex.name, std::to_string(ka), to_string(ia.n_seq), to_string(ia.m_seq)},
                         {cb.complex.name, std::to_string(kb), to_string(ib.n_seq), to_string(ib.m_seq)}}});
    r.tables.push_back({"pair lower bounds",
                        {"bound", "value", "bounds"},
                        {{"t_q(K,K')", std::to_string(dn), "OR-distance (and PR-distance)"},
                         {"t_q'(K,K')", std::to_string(dm), "rational distance"}}});
    r.results["a"] = {{"name", ca.complex.name}, {"components", ka}, {"n_seq", ia.n_seq.entries()}, {"m_seq", ia.m_seq.entries()}};
    r.results["b"] = {{"name", cb.complex.name}, {"components", kb}, {"n_seq", ib.n_seq.entries()}, {"m_seq", ib.m_seq.entries()}};
    r.results["tq_distance"] = dn;
    r.results["tq_prime_distance"] = dm;
    return r;
}

RunReport cmd_tensor(const fs::path& a, const fs::path& b, const fs::path& out)
{
    RunReport r;
    const auto ca = load_checked(a);
    const auto cb = load_checked(b);
    r.inputs.push_back(ca.digest);
    r.inputs.push_back(cb.digest);
    const auto t = tensor(ca.complex, cb.complex);
    const auto text = dump_canonical(to_json(t));
    write_text_file(out, text);
    r.tables.push_back({"tensor product",
                        {"field", "value"},
                        {{"name", t.name},
                         {"generators", std::to_string(t.size())},
                         {"output", out.filename().string()},
                         {"fnv1a64", fnv1a64_hex(text)}}});
    r.results["name"] = t.name;
    r.results["generators"] = t.size();
    r.results["output"] = {{"path", out.filename().string()}, {"fnv1a64", fnv1a64_hex(text)}};
    return r;
}

RunReport cmd_kpq(int p, int q)
{
    RunReport r;
    const auto k = kpq(p, q);
    r.tables.push_back({"rational unknotting bound", {"quantity", "value"}, {{"k(p,q)", std::to_string(k.k)}}});
    r.tables.push_back(trace_table(k));
    r.results["p"] = p;
    r.results["q"] = q;
    r.results["k"] = k.k;
    r.results["trace"] = trace_json(k);
    return r;
}

RunReport cmd_obstruct(const ObstructOptions& opts)
{
    RunReport r;
    std::vector<KnotTableRow> rows;
    if (opts.qfile) {
        if (!opts.tau) throw DomainError("--qfile needs --tau");
        const auto text = read_text_file(*opts.qfile);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(opts.qfile->string() + ": " + e.what());
        }
        r.inputs.push_back({opts.qfile->filename().string(), fnv1a64_hex(text)});
        const std::string name = opts.name.value_or(opts.qfile->stem().string());
        rows.push_back({name, *opts.tau, make_qpoly(name, laurent_from_json(j))});
    } else {
        const auto table = opts.table.value_or(default_knot_table());
        r.inputs.push_back({table.filename().string(), fnv1a64_hex(read_text_file(table))});
        rows = load_knot_table(table);
        if (opts.name) {
            auto it = std::find_if(rows.begin(), rows.end(), [&](const KnotTableRow& k) { return k.name == *opts.name; });
            if (it == rows.end()) throw DomainError("knot " + *opts.name + " is not in " + table.string());
            rows = {*it};
        }
        if (opts.tau) rows.front().tau = *opts.tau;
    }

    Table t{"(1+qt)-divisibility obstruction", {"knot", "tau", "thin", "verdict", "Q - t^tau", "quotient"}, {}};
    ojson knots = ojson::array();
    for (const auto& row : rows) {
        const auto res = prr_obstruction(row.q, row.tau);
        const bool thin = is_thin(row.q);
        t.rows.push_back({row.name, std::to_string(row.tau), thin ? "yes" : "no",
                          std::string(to_string(res.verdict)), to_string(res.difference),
                          res.quotient ? to_string(*res.quotient) : "-"});
        ojson k;
        k["name"] = row.name;
        k["tau"] = row.tau;
        k["thin"] = thin;
        k["verdict"] = to_string(res.verdict);
        k["certifies_tq_at_least_2"] = res.verdict != Verdict::Passes;
        k["quotient"] = res.quotient ? to_json(*res.quotient) : ojson(nullptr);
        knots.push_back(std::move(k));
    }
    r.tables.push_back(std::move(t));
    r.tables.push_back({"reading", {"verdict", "meaning"},
                        {{"FAILS_*", "t_q(K) >= 2, so K is not unknotted by one orientation-preserving replacement"},
                         {"PASSES", "no conclusion"}}});
    r.results["knots"] = std::move(knots);
    return r;
}

RunReport cmd_validate(const fs::path& file)
{
    RunReport r;
    const auto text = read_text_file(file);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(file.string() + ": " + e.what());
    }
    r.inputs.push_back({file.filename().string(), fnv1a64_hex(text)});
    const auto c = complex_from_json(j);
    const auto report = validate(c);
    Table t{"validation of " + c.name, {"issue"}, {}};
    ojson issues = ojson::array();
    for (const auto& issue : report.issues) {
        t.rows.push_back({issue.message});
        issues.push_back(issue.message);
    }
    if (report.ok()) t.rows.push_back({"valid"});
    r.tables.push_back(std::move(t));
    r.results["name"] = c.name;
    r.results["valid"] = report.ok();
    r.results["issues"] = std::move(issues);
    r.exit_code = report.ok() ? 0 : 1;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

struct SweepCell {
    int p = 0;
    int q = 0;
    std::vector<int> b_vec;
    ClosedFormInvariants closed;
    int pipeline_tq = 0;
    int pipeline_tq_prime = 0;
    int k = 0;
    std::vector<std::string> violations;
    std::string error;
};

SweepCell evaluate_cell(int p, int q)
{
    SweepCell cell;
    cell.p = p;
    cell.q = q;
    try {
        const auto s = alexander_quotient(p, q); // also checks trailing (p-1, 1) and b_i <= p-1
        cell.b_vec = s.b_vec;
        cell.closed = closed_form_invariants(s.b_vec);
        const auto inv = invariants_of(staircase_complex(s));
        cell.pipeline_tq = inv.tq;
        cell.pipeline_tq_prime = inv.tq_prime;
        cell.k = kpq(p, q).k;
    } catch (const Error& e) {
        cell.error = e.what();
        cell.violations.push_back(std::string("error: ") + e.what());
        return cell;
    }
    auto& v = cell.violations;
    if (cell.pipeline_tq != p - 1) v.push_back("pipeline t_q != p-1");
    if (cell.closed.tq != p - 1) v.push_back("closed-form t_q != p-1");
    if (cell.closed.tq_prime != cell.pipeline_tq_prime) v.push_back("closed-form t_q' != pipeline t_q'");
    if (cell.closed.tq_prime > cell.k) v.push_back("t_q' > k(p,q)");
    if (cell.k > p / 2) v.push_back("k(p,q) > floor(p/2)");
    if (q % p == 1 && cell.closed.tq_prime != p / 2) v.push_back("t_q'(T(p,pn+1)) != floor(p/2)");
    if (q % p == 1 && cell.k != p / 2) v.push_back("k(p,pn+1) != floor(p/2)");
    return cell;
}

} // namespace

RunReport cmd_sweep(int pmax, int qmax, unsigned jobs, bool full_table)
{
    if (pmax < 2 || qmax < 3) throw DomainError("sweep needs pmax >= 2 and qmax >= 3");
    std::vector<std::pair<int, int>> grid;
    for (int p = 2; p <= pmax; ++p)
        for (int q = p + 1; q <= qmax; ++q)
            if (std::gcd(p, q) == 1) grid.emplace_back(p, q);

    std::vector<SweepCell> cells(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++)
            cells[i] = evaluate_cell(grid[i].first, grid[i].second);
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    RunReport r;
    Table violations{"violations", {"p", "q", "violation"}, {}};
    Table notes{"pairs with t_q' < k(p,q)", {"p", "q", "t_q'", "k(p,q)"}, {}};
    Table all{"grid", {"p", "q", "t_q(cf)", "t_q(pipe)", "t_q'(cf)", "t_q'(pipe)", "k(p,q)"}, {}};
    ojson jcells = ojson::array();
    std::size_t n_violations = 0;
    for (const auto& c : cells) {
        for (const auto& v : c.violations) {
            violations.rows.push_back({std::to_string(c.p), std::to_string(c.q), v});
            ++n_violations;
        }
        if (c.error.empty() && c.closed.tq_prime != c.k)
            notes.rows.push_back({std::to_string(c.p), std::to_string(c.q), std::to_string(c.closed.tq_prime),
                                  std::to_string(c.k)});
        all.rows.push_back({std::to_string(c.p), std::to_string(c.q), std::to_string(c.closed.tq),
                            std::to_string(c.pipeline_tq), std::to_string(c.closed.tq_prime),
                            std::to_string(c.pipeline_tq_prime), std::to_string(c.k)});
        ojson jc;
        jc["p"] = c.p;
        jc["q"] = c.q;
        jc["closed_form"] = {{"tq", c.closed.tq}, {"tq_prime", c.closed.tq_prime}};
        jc["pipeline"] = {{"tq", c.pipeline_tq}, {"tq_prime", c.pipeline_tq_prime}};
        jc["k"] = c.k;
        jc["violations"] = c.violations;
        jcells.push_back(std::move(jc));
    }
    r.tables.push_back({"sweep",
                        {"quantity", "value"},
                        {{"pmax", std::to_string(pmax)},
                         {"qmax", std::to_string(qmax)},
                         {"coprime pairs", std::to_string(cells.size())},
                         {"violations", std::to_string(n_violations)},
                         {"pairs with t_q' < k", std::to_string(notes.rows.size())}}});
    if (full_table) r.tables.push_back(std::move(all));
    if (!violations.rows.empty()) r.tables.push_back(std::move(violations));
    if (!notes.rows.empty()) r.tables.push_back(std::move(notes));

    r.results["pmax"] = pmax;
    r.results["qmax"] = qmax;
    r.results["pairs"] = cells.size();
    r.results["violations"] = n_violations;
    r.results["cells"] = std::move(jcells);
    r.exit_code = n_violations == 0 ? 0 : 1;
    return r;
}

} // namespace cfk
