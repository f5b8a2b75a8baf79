// Acceptance gate: one PASS/FAIL line per criterion. With arguments, runs only
// the named criteria (e.g. `acceptance AC1 AC5`). Exit status 1 if any fails.

#include "cfk/chain_complex.hpp"
#include "cfk/homology.hpp"
#include "cfk/obstruction.hpp"
#include "cfk/torsion.hpp"
#include "cfk/torus.hpp"
#include "cfk/unknotting.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cfk;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double time_limit_s;
    std::function<Outcome()> run;
};

std::vector<std::pair<int, int>> coprime_grid(int pmax, int qmax)
{
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p <= pmax; ++p)
        for (int q = p + 1; q <= qmax; ++q)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

std::string pq(int p, int q) { return "T(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

Outcome ac1_torus_sweep()
{
    const auto grid = coprime_grid(30, 30);
    std::size_t tq_ok = 0, tqp_ok = 0;
    std::string first_tq, first_tqp;
    for (auto [p, q] : grid) {
        const auto s = alexander_quotient(p, q);
        const auto inv = invariants_of(staircase_complex(s));
        const auto cf = closed_form_invariants(s.b_vec);
        if (inv.tq == p - 1)
            ++tq_ok;
        else if (first_tq.empty())
            first_tq = pq(p, q) + " tq=" + std::to_string(inv.tq);
        if (inv.tq_prime == cf.tq_prime)
            ++tqp_ok;
        else if (first_tqp.empty())
            first_tqp = pq(p, q) + " closed-form " + std::to_string(cf.tq_prime) + " vs pipeline " +
                        std::to_string(inv.tq_prime);
    }
    std::ostringstream os;
    os << "pipeline tq = p-1 on " << tq_ok << "/" << grid.size() << "; pipeline tq' = closed-form tq' on "
       << tqp_ok << "/" << grid.size();
    if (!first_tq.empty()) os << "; first tq mismatch " << first_tq;
    if (!first_tqp.empty()) os << "; first tq' mismatch " << first_tqp;
    return {tq_ok == grid.size() && tqp_ok == grid.size(), os.str()};
}

Outcome ac2_pn1_family()
{
    int checked = 0;
    for (int p = 2; p <= 12; ++p)
        for (int n = 1; n <= 3; ++n) {
            const auto s = alexander_quotient(p, p * n + 1);
            const auto cf = closed_form_invariants(s.b_vec);
            const auto inv = invariants_of(staircase_complex(s));
            if (cf.tq_prime != p / 2 || inv.tq_prime != p / 2)
                return {false, pq(p, p * n + 1) + ": closed-form " + std::to_string(cf.tq_prime) + ", pipeline " +
                                   std::to_string(inv.tq_prime) + ", expected " + std::to_string(p / 2)};
            ++checked;
        }
    return {true, std::to_string(checked) + " knots, closed form and pipeline both floor(p/2)"};
}

Outcome ac3_kpq_suite()
{
    std::size_t pairs = 0;
    for (auto [p, q] : coprime_grid(200, 200)) {
        ++pairs;
        if (kpq(p, q).k > p / 2) return {false, "k > floor(p/2) at " + pq(p, q)};
    }
    for (int p = 2; p <= 20; ++p)
        for (int n = 1; n <= 5; ++n)
            if (kpq(p, p * n + 1).k != p / 2) return {false, "k(p,pn+1) != floor(p/2) at " + pq(p, p * n + 1)};
    for (int p = 3; p <= 21; p += 2)
        for (int n = 1; n <= 5; ++n)
            if (kpq(p, p * n + 2).k != 1) return {false, "k(p,pn+2) != 1 at " + pq(p, p * n + 2)};
    std::size_t small = 0;
    for (auto [p, q] : coprime_grid(30, 30)) {
        const auto s = alexander_quotient(p, q);
        const int k = kpq(p, q).k;
        const int cf = closed_form_invariants(s.b_vec).tq_prime;
        const int pipe = invariants_of(staircase_complex(s)).tq_prime;
        if (cf > k || pipe > k) return {false, "tq' > k at " + pq(p, q)};
        ++small;
    }
    return {true, "k <= floor(p/2) on " + std::to_string(pairs) + " pairs; families exact; tq' <= k on " +
                      std::to_string(small) + " pairs (closed form and pipeline)"};
}

Outcome ac4_kunneth()
{
    constexpr int kPairs = 20;
    constexpr int kMaxP = 7;
    constexpr int kMaxQ = 20;
    cfk::testing::Rng rng(2024);
    std::vector<std::pair<int, int>> knots;
    for (auto [p, q] : coprime_grid(kMaxP, kMaxQ)) knots.emplace_back(p, q);
    std::size_t largest = 0;
    for (int i = 0; i < kPairs; ++i) {
        const auto [p1, q1] = knots[static_cast<std::size_t>(cfk::testing::uniform(rng, 0, int(knots.size()) - 1))];
        const auto [p2, q2] = knots[static_cast<std::size_t>(cfk::testing::uniform(rng, 0, int(knots.size()) - 1))];
        const auto a = staircase_complex(alexander_quotient(p1, q1));
        const auto b = staircase_complex(alexander_quotient(p2, q2));
        const auto ia = invariants_of(a), ib = invariants_of(b);
        const auto t = tensor(a, b);
        largest = std::max(largest, t.size());
        const auto it = invariants_of(t);
        if (it.tq != std::max(ia.tq, ib.tq) || it.tq_prime != std::max(ia.tq_prime, ib.tq_prime))
            return {false, pq(p1, q1) + " # " + pq(p2, q2) + ": tensor (" + std::to_string(it.tq) + "," +
                               std::to_string(it.tq_prime) + ")"};
    }
    return {true, std::to_string(kPairs) + " pairs with p <= " + std::to_string(kMaxP) + ", q <= " +
                      std::to_string(kMaxQ) + "; largest tensor " + std::to_string(largest) + " generators"};
}

Outcome ac5_obstruction_table()
{
    const auto rows = load_knot_table(std::filesystem::path(CFK_TEST_DATA_DIR) / "hfk_table_v1.json");
    const std::set<std::string> fails{"10_128", "10_139", "10_152", "10_154", "10_161"};
    const std::set<std::string> passes{"9_46", "10_140", "10_145", "10_153"};
    const std::set<std::string> thin_expected{"9_46", "10_140"};
    std::set<std::string> got_fail, got_pass, thin;
    for (const auto& r : rows) {
        const auto v = prr_obstruction(r.q, r.tau).verdict;
        (v == Verdict::FailsDivisibility ? got_fail : got_pass).insert(r.name);
        if (v == Verdict::FailsPositivity) return {false, r.name + " fails positivity"};
        if (is_thin(r.q)) thin.insert(r.name);
    }
    const bool ok = rows.size() == 9 && got_fail == fails && got_pass == passes && thin == thin_expected;
    return {ok, std::to_string(got_fail.size()) + " FAILS_DIVISIBILITY, " + std::to_string(got_pass.size()) +
                    " PASSES, " + std::to_string(thin.size()) + " thin"};
}

Outcome ac6_oracle_gate()
{
    constexpr int kComplexes = 100;
    cfk::testing::Rng rng(6);
    std::size_t checks = 0;
    for (int i = 0; i < kComplexes; ++i) {
        const auto c = cfk::testing::random_complex(rng, 20);
        if (!validate(c).ok()) return {false, "generator produced an invalid complex"};
        for (auto mode : {CoeffMode::WZero, CoeffMode::WEqualsU}) {
            const auto s = specialize(c, mode);
            const auto h = homology(s);
            for (std::size_t n = 1; n <= 6; ++n) {
                std::size_t expect = h.free_rank * n;
                for (int e : h.torsion.entries()) expect += 2 * std::min<std::size_t>(e, n);
                const auto got = truncated_dimension(s, n);
                ++checks;
                if (got != expect)
                    return {false, "complex " + std::to_string(i) + " (" + c.name + ") mode " +
                                       std::string(to_string(mode)) + " n=" + std::to_string(n) + ": " +
                                       std::to_string(got) + " != " + std::to_string(expect)};
            }
        }
    }
    return {true, std::to_string(kComplexes) + " complexes, " + std::to_string(checks) + " exact comparisons"};
}

Outcome ac7_snf_properties()
{
    constexpr int kMatrices = 200;
    auto run_once = [] {
        cfk::testing::Rng rng(7);
        std::vector<SnfResult> out;
        std::vector<MatrixU> inputs;
        for (int i = 0; i < kMatrices; ++i) {
            const auto rows = static_cast<std::size_t>(cfk::testing::uniform(rng, 1, 6));
            const auto cols = static_cast<std::size_t>(cfk::testing::uniform(rng, 1, 6));
            inputs.push_back(cfk::testing::random_matrix(rng, rows, cols, 4));
            out.push_back(snf(inputs.back()));
        }
        return std::pair{inputs, out};
    };
    const auto [inputs, first] = run_once();
    const auto [inputs2, second] = run_once();
    for (int i = 0; i < kMatrices; ++i) {
        const auto& m = inputs[static_cast<std::size_t>(i)];
        const auto& r = first[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k + 1 < r.diag.size(); ++k)
            if (!divides(r.diag[k], r.diag[k + 1])) return {false, "divisibility fails on matrix " + std::to_string(i)};
        const auto d = r.p * m * r.q;
        for (std::size_t row = 0; row < d.rows(); ++row)
            for (std::size_t col = 0; col < d.cols(); ++col) {
                const PolyU want = (row == col && row < r.diag.size()) ? r.diag[row] : PolyU{};
                if (!(d.at(row, col) == want)) return {false, "P*M*Q != D on matrix " + std::to_string(i)};
            }
        const auto& again = second[static_cast<std::size_t>(i)];
        if (!(again.diag == r.diag && again.p == r.p && again.q == r.q))
            return {false, "nondeterministic result on matrix " + std::to_string(i)};
    }
    return {true, std::to_string(kMatrices) + " matrices up to 6x6, degree <= 4"};
}

Outcome ac8_named_values()
{
    const auto t34 = invariants_of(staircase_complex(alexander_quotient(3, 4)));
    const auto t35 = invariants_of(staircase_complex(alexander_quotient(3, 5)));
    const auto t23 = invariants_of(staircase_complex(alexander_quotient(2, 3)));
    const int dn = pair_lower_bound(t23.n_seq, t34.n_seq, 1, 1);
    const int dm = pair_lower_bound(t23.m_seq, t34.m_seq, 1, 1);
    std::ostringstream os;
    os << "tq(T3,4)=" << t34.tq << " tq(T3,5)=" << t35.tq << " tq'(T3,4)=" << t34.tq_prime
       << " tq'(T3,5)=" << t35.tq_prime << " pair bound T2,3/T3,4 = " << dn << "," << dm;
    const bool ok = t34.tq == 2 && t35.tq == 2 && t34.tq_prime == 1 && t35.tq_prime == 1 && dn == 1 && dm == 1;
    return {ok, os.str()};
}

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {"AC1", "torus identity sweep, coprime p < q <= 30", 120.0, ac1_torus_sweep},
        {"AC2", "tq'(T(p,pn+1)) = floor(p/2), p <= 12, n <= 3", 60.0, ac2_pn1_family},
        {"AC3", "k(p,q) suite", 10.0, ac3_kpq_suite},
        {"AC4", "tensor invariants are the max of the factors", 60.0, ac4_kunneth},
        {"AC5", "obstruction verdicts on the bundled table", 1.0, ac5_obstruction_table},
        {"AC6", "truncation oracle gate", 60.0, ac6_oracle_gate},
        {"AC7", "Smith normal form properties", 60.0, ac7_snf_properties},
        {"AC8", "named regression values", 10.0, ac8_named_values},
    };

    std::set<std::string> selected(argv + 1, argv + argc);
    bool all_pass = true;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.time_limit_s;
        const bool pass = out.pass && in_time;
        all_pass = all_pass && pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << secs << " s, limit "
             << c.time_limit_s << " s" << (in_time ? "" : ", TOO SLOW") << "]  " << out.detail;
        std::cout << line.str() << "\n";
    }
    return all_pass ? 0 : 1;
}
