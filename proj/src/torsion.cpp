#include "cfk/torsion.hpp"

#include "cfk/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace cfk {

TorsionSequence::TorsionSequence(std::vector<int> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] <= 0) throw DomainError("torsion exponents must be positive");
        if (i > 0 && entries_[i] > entries_[i - 1])
            throw DomainError("torsion sequence must be non-increasing");
    }
}

TorsionSequence TorsionSequence::from_unsorted(std::vector<int> entries)
{
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return TorsionSequence(std::move(entries));
}

TorsionSequence TorsionSequence::minus(int ell) const
{
    if (ell < 0) throw DomainError("cannot subtract a negative amount from a torsion sequence");
    std::vector<int> out;
    for (int n : entries_)
        if (n > ell) out.push_back(n - ell);
    return TorsionSequence(std::move(out));
}

TorsionSequence TorsionSequence::repeated(std::size_t copies) const
{
    std::vector<int> out;
    out.reserve(entries_.size() * copies);
    for (int n : entries_) out.insert(out.end(), copies, n);
    return TorsionSequence(std::move(out));
}

bool dominates(const TorsionSequence& a, const TorsionSequence& b)
{
    if (a.size() < b.size()) return false;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (a.entries()[i] < b.entries()[i]) return false;
    return true;
}

int distance(const TorsionSequence& a, const TorsionSequence& b)
{
    // ell = max(a_1, b_1) empties both shifted sequences, so the search is finite.
    const int bound = std::max(a.leading(), b.leading());
    for (int ell = 0; ell < bound; ++ell)
        if (dominates(a, b.minus(ell)) && dominates(b, a.minus(ell))) return ell;
    return bound;
}

std::string to_string(const TorsionSequence& n)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n.entries()[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

TorsionSequence collapse_markings(const TorsionSequence& t, int components, int markings)
{
    if (components < 1 || markings < components || markings - components > 30)
        throw DomainError("invalid component/marking counts");
    const std::size_t block = std::size_t{1} << (markings - components);
    if (block == 1) return t;
    std::vector<int> out;
    const auto& e = t.entries();
    for (std::size_t i = 0; i < e.size();) {
        std::size_t j = i;
        while (j < e.size() && e[j] == e[i]) ++j;
        if ((j - i) % block != 0)
            throw DomainError("torsion multiplicities are not compatible with the markings");
        out.insert(out.end(), (j - i) / block, e[i]);
        i = j;
    }
    return TorsionSequence(std::move(out));
}

KnotInvariants torsion_sequences(const FreeComplexUW& c)
{
    KnotInvariants inv;
    inv.homology_w0 = homology(specialize(c, CoeffMode::WZero));
    inv.homology_wu = homology(specialize(c, CoeffMode::WEqualsU));
    inv.n_seq = collapse_markings(inv.homology_w0.torsion, c.components, c.markings);
    inv.m_seq = collapse_markings(inv.homology_wu.torsion, c.components, c.markings);
    inv.tq = inv.n_seq.leading();
    inv.tq_prime = inv.m_seq.leading();
    return inv;
}

KnotInvariants invariants_of(const FreeComplexUW& c)
{
    if (c.components != 1)
        throw DomainError("torsion invariants are computed for knots (components = 1) only");
    return torsion_sequences(c);
}

int pair_lower_bound(const TorsionSequence& n_k, const TorsionSequence& n_kp, int components_k,
                     int components_kp)
{
    constexpr int kMaxComponents = 20;
    if (components_k < 1 || components_kp < 1)
        throw DomainError("component counts must be positive");
    if (components_k > kMaxComponents || components_kp > kMaxComponents)
        throw OverflowError("component count too large for 2-power scaling");
    return distance(n_k.repeated(std::size_t{1} << components_kp),
                    n_kp.repeated(std::size_t{1} << components_k));
}

bool structure_check(const ModuleDecomp& d, int components, int markings)
{
    if (components < 1 || markings < components || markings > 62) return false;
    if (d.free_rank != (std::size_t{1} << (markings - 1))) return false;
    const std::size_t block = std::size_t{1} << (markings - components);
    std::map<int, std::size_t> multiplicity;
    for (int n : d.torsion.entries()) ++multiplicity[n];
    for (const auto& [order, count] : multiplicity)
        if (count % block != 0) return false;
    return true;
}

} // namespace cfk
