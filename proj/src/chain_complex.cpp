#include "cfk/chain_complex.hpp"

#include "cfk/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace cfk {

std::string_view to_string(CoeffMode mode)
{
    return mode == CoeffMode::WZero ? "w=0" : "w=u";
}

std::size_t FreeComplexUW::add_generator(Generator g)
{
    generators.push_back(std::move(g));
    differential.emplace_back();
    return generators.size() - 1;
}

void FreeComplexUW::add_arrow(std::size_t source, std::size_t target, const PolyUW& coeff)
{
    auto& row = differential.at(source);
    auto it = std::lower_bound(row.begin(), row.end(), target,
                               [](const TermUW& t, std::size_t v) { return t.target < v; });
    if (it != row.end() && it->target == target) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) row.erase(it);
    } else if (!coeff.is_zero()) {
        row.insert(it, TermUW{target, coeff});
    }
}

std::size_t ValidationReport::count(ValidationIssue::Kind kind) const
{
    return static_cast<std::size_t>(std::count_if(
        issues.begin(), issues.end(), [kind](const ValidationIssue& i) { return i.kind == kind; }));
}

namespace {

using Kind = ValidationIssue::Kind;

template <typename Poly>
std::map<std::size_t, Poly> apply_d(const std::vector<std::vector<Term<Poly>>>& d,
                                    const std::vector<Term<Poly>>& chain)
{
    std::map<std::size_t, Poly> out;
    for (const auto& t : chain) {
        if (t.target >= d.size()) continue;
        for (const auto& s : d[t.target]) out[s.target] += t.coeff * s.coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

template <typename Poly>
void check_d_squared(const std::vector<Generator>& gens,
                     const std::vector<std::vector<Term<Poly>>>& d,
                     std::vector<ValidationIssue>& issues, std::string_view ring)
{
    for (std::size_t x = 0; x < d.size(); ++x) {
        for (const auto& [y, coeff] : apply_d(d, d[x])) {
            std::ostringstream os;
            os << "d^2(" << gens[x].id << ") has coefficient " << to_string(coeff) << " on "
               << gens[y].id << " over " << ring;
            issues.push_back({Kind::DSquaredNonzero, os.str()});
        }
    }
}

template <typename Poly>
bool dangling(const std::vector<Generator>& gens, const std::vector<std::vector<Term<Poly>>>& d,
              std::vector<ValidationIssue>& issues)
{
    bool bad = d.size() != gens.size();
    if (bad) issues.push_back({Kind::DanglingTarget, "differential and generator list differ in length"});
    for (std::size_t x = 0; x < d.size(); ++x)
        for (const auto& t : d[x])
            if (t.target >= gens.size()) {
                issues.push_back({Kind::DanglingTarget, "term targets missing generator index " +
                                                            std::to_string(t.target)});
                bad = true;
            }
    return bad;
}

void check_ids(const std::vector<Generator>& gens, std::vector<ValidationIssue>& issues)
{
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& g : gens)
        if (++seen[g.id] == 2) issues.push_back({Kind::DuplicateId, "duplicate generator id " + g.id});
}

void check_counts(int components, int markings, std::vector<ValidationIssue>& issues)
{
    if (components < 1) issues.push_back({Kind::BadCounts, "components must be positive"});
    if (markings < components)
        issues.push_back({Kind::BadCounts, "markings must be at least the number of components"});
}

FreeComplexU specialize_unchecked(const FreeComplexUW& c, CoeffMode mode)
{
    FreeComplexU out;
    out.name = c.name;
    out.components = c.components;
    out.markings = c.markings;
    out.mode = mode;
    out.generators = c.generators;
    out.differential.resize(c.size());
    for (std::size_t x = 0; x < c.size(); ++x) {
        for (const auto& t : c.differential[x]) {
            PolyU p;
            for (const auto& m : t.coeff.terms()) {
                if (mode == CoeffMode::WZero) {
                    if (m.w_exp == 0) p += PolyU::monomial(m.u_exp);
                } else {
                    p += PolyU::monomial(checked::add(m.u_exp, m.w_exp));
                }
            }
            if (!p.is_zero()) out.differential[x].push_back({t.target, std::move(p)});
        }
    }
    return out;
}

} // namespace

ValidationReport validate(const FreeComplexUW& c)
{
    ValidationReport report;
    auto& issues = report.issues;
    check_ids(c.generators, issues);
    check_counts(c.components, c.markings, issues);
    if (dangling(c.generators, c.differential, issues)) return report;

    for (std::size_t x = 0; x < c.size(); ++x) {
        const auto& gx = c.generators[x];
        for (const auto& t : c.differential[x]) {
            const auto& gy = c.generators[t.target];
            for (const auto& m : t.coeff.terms()) {
                const long maslov = static_cast<long>(gy.maslov) - 2L * m.u_exp;
                const long alex = static_cast<long>(gy.alexander) - m.u_exp + m.w_exp;
                if (maslov != gx.maslov - 1L || alex != gx.alexander) {
                    std::ostringstream os;
                    os << "term " << to_string(PolyUW::monomial(m.u_exp, m.w_exp)) << "*" << gy.id
                       << " in d(" << gx.id << ") has gradings (" << maslov << ", " << alex
                       << "), expected (" << gx.maslov - 1L << ", " << gx.alexander << ")";
                    issues.push_back({Kind::GradingMismatch, os.str()});
                }
            }
        }
    }

    if (c.components == 1) {
        check_d_squared(c.generators, c.differential, issues, "F2[u,w]");
    } else {
        // Link complexes: only the specialized complexes are required to be chain complexes.
        for (auto mode : {CoeffMode::WZero, CoeffMode::WEqualsU}) {
            auto s = specialize_unchecked(c, mode);
            check_d_squared(s.generators, s.differential, issues,
                            std::string("F2[u] (") + std::string(to_string(mode)) + ")");
        }
    }
    return report;
}

ValidationReport validate(const FreeComplexU& c)
{
    ValidationReport report;
    auto& issues = report.issues;
    check_ids(c.generators, issues);
    check_counts(c.components, c.markings, issues);
    if (dangling(c.generators, c.differential, issues)) return report;

    if (c.mode == CoeffMode::WZero) {
        for (std::size_t x = 0; x < c.size(); ++x) {
            const auto& gx = c.generators[x];
            for (const auto& t : c.differential[x]) {
                const auto& gy = c.generators[t.target];
                for (std::size_t a : t.coeff.exponents()) {
                    const long maslov = static_cast<long>(gy.maslov) - 2L * static_cast<long>(a);
                    const long alex = static_cast<long>(gy.alexander) - static_cast<long>(a);
                    if (maslov != gx.maslov - 1L || alex != gx.alexander)
                        issues.push_back({Kind::GradingMismatch,
                                          "term u^" + std::to_string(a) + "*" + gy.id + " in d(" +
                                              gx.id + ") breaks the u-gradings"});
                }
            }
        }
    }
    check_d_squared(c.generators, c.differential, issues, "F2[u]");
    return report;
}

FreeComplexU specialize(const FreeComplexUW& c, CoeffMode mode)
{
    auto out = specialize_unchecked(c, mode);
    std::vector<ValidationIssue> issues;
    check_d_squared(out.generators, out.differential, issues, "F2[u]");
    if (!issues.empty())
        throw DomainError("specialization " + std::string(to_string(mode)) + " of " + c.name +
                          " is not a chain complex: " + issues.front().message);
    return out;
}

FreeComplexUW tensor(const FreeComplexUW& a, const FreeComplexUW& b)
{
    if (a.components != 1 || b.components != 1)
        throw DomainError("tensor product is implemented for knot complexes only");

    FreeComplexUW out;
    out.name = a.name + "#" + b.name;
    out.components = 1;
    out.markings = 1;
    const std::size_t nb = b.size();
    out.generators.reserve(a.size() * nb);
    for (const auto& x : a.generators)
        for (const auto& y : b.generators)
            out.add_generator({x.id + kTensorSeparator + y.id, checked::add(x.maslov, y.maslov),
                               checked::add(x.alexander, y.alexander)});

    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            const std::size_t src = i * nb + j;
            for (const auto& t : a.differential[i]) out.add_arrow(src, t.target * nb + j, t.coeff);
            for (const auto& t : b.differential[j]) out.add_arrow(src, i * nb + t.target, t.coeff);
        }
    }
    return out;
}

FreeComplexUW unknot_complex()
{
    FreeComplexUW c;
    c.name = "U";
    c.add_generator({"x0", 0, 0});
    return c;
}

} // namespace cfk
