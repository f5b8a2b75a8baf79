#include "cfk/obstruction.hpp"

#include "cfk/complex_io.hpp"
#include "cfk/errors.hpp"

#include <algorithm>
#include <set>

namespace cfk {

QPoly make_qpoly(std::string knot_name, LaurentQT poly)
{
    if (poly.is_zero()) throw DomainError("Poincare polynomial of " + knot_name + " is zero");
    for (const auto& t : poly.terms())
        if (t.c <= 0)
            throw DomainError("Poincare polynomial of " + knot_name + " has a non-positive coefficient");
    return {std::move(knot_name), std::move(poly)};
}

bool is_thin(const QPoly& q)
{
    std::set<long> diagonals;
    for (const auto& t : q.poly.terms()) diagonals.insert(static_cast<long>(t.t) - t.q);
    return diagonals.size() <= 1;
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Passes: return "PASSES";
    case Verdict::FailsDivisibility: return "FAILS_DIVISIBILITY";
    case Verdict::FailsPositivity: return "FAILS_POSITIVITY";
    }
    return "?";
}

ObstructionResult prr_obstruction(const QPoly& q, int tau)
{
    ObstructionResult out;
    out.difference = q.poly - LaurentQT::monomial(0, tau);
    out.quotient = div_one_plus_qt(out.difference);
    if (!out.quotient) {
        out.verdict = Verdict::FailsDivisibility;
        return out;
    }
    const auto terms = out.quotient->terms();
    const bool nonnegative =
        std::all_of(terms.begin(), terms.end(), [](const LaurentTerm& t) { return t.c >= 0; });
    out.verdict = nonnegative ? Verdict::Passes : Verdict::FailsPositivity;
    return out;
}

void check_reduced(const ReducedComplexDesc& d)
{
    const auto& v = d.pairs;
    if (v.size() % 2 != 1) throw DomainError("reduced complex needs an odd number of generators");
    if (v[0].second != 0) throw DomainError("reduced complex needs mu_0 = 0");
    for (std::size_t i = 1; i + 1 < v.size(); i += 2) {
        if (v[i + 1].second != v[i].second - 1)
            throw DomainError("reduced complex needs mu_(i+1) = mu_i - 1 for odd i");
        if (v[i].first <= v[i + 1].first)
            throw DomainError("reduced complex needs s_i > s_(i+1) for odd i");
    }
}

TauTq reduced_tau_tq(const ReducedComplexDesc& d)
{
    check_reduced(d);
    TauTq out{d.pairs[0].first, 0};
    for (std::size_t i = 1; i + 1 < d.pairs.size(); i += 2)
        out.tq = std::max(out.tq, d.pairs[i].first - d.pairs[i + 1].first);
    return out;
}

QPoly q_from_reduced(const ReducedComplexDesc& d, std::string knot_name)
{
    check_reduced(d);
    LaurentQT poly;
    for (const auto& [s, mu] : d.pairs) poly.add_term(mu, s, 1);
    return make_qpoly(std::move(knot_name), std::move(poly));
}

std::vector<KnotTableRow> load_knot_table(const std::filesystem::path& path)
{
    const auto j = read_json_file(path);
    if (!j.is_array()) throw ParseError(path.string() + ": knot table must be a JSON array");
    std::vector<KnotTableRow> rows;
    std::set<std::string> names;
    for (const auto& row : j) {
        if (!row.is_object() || row.size() != 3 || !row.contains("name") || !row.contains("tau") ||
            !row.contains("Q"))
            throw ParseError(path.string() + ": rows must be {\"name\", \"tau\", \"Q\"}");
        if (!row["name"].is_string() || !row["tau"].is_number_integer())
            throw ParseError(path.string() + ": bad name or tau");
        KnotTableRow r;
        r.name = row["name"].get<std::string>();
        const auto tau = row["tau"].get<std::int64_t>();
        if (tau < std::numeric_limits<int>::min() || tau > std::numeric_limits<int>::max())
            throw ParseError(path.string() + ": tau out of range");
        r.tau = static_cast<int>(tau);
        if (!names.insert(r.name).second) throw ParseError(path.string() + ": duplicate knot " + r.name);
        try {
            r.q = make_qpoly(r.name, laurent_from_json(row["Q"]));
        } catch (const DomainError& e) {
            throw ParseError(path.string() + ": " + e.what());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace cfk
