#include "cfk/homology.hpp"

#include "cfk/errors.hpp"

#include "snf_engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cfk {

namespace {

// Sparse vector over F2[u], sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, PolyU>>;

void check_degree(const PolyU& p)
{
    if (p.degree() > kMaxReductionDegree)
        throw InternalError("kernel reduction exceeded the intermediate degree cap");
}

// a*x + b*y
SparseVec combine(const PolyU& a, const SparseVec& x, const PolyU& b, const SparseVec& y)
{
    SparseVec out;
    out.reserve(x.size() + y.size());
    auto push = [&out](std::size_t idx, PolyU v) {
        if (v.is_zero()) return;
        check_degree(v);
        out.emplace_back(idx, std::move(v));
    };
    std::size_t i = 0, j = 0;
    const bool ax = !a.is_zero(), by = !b.is_zero();
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            if (ax) push(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            if (by) push(y[j].first, b * y[j].second);
            ++j;
        } else {
            PolyU v;
            if (ax) v += a * x[i].second;
            if (by) v += b * y[j].second;
            push(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec unit_vector(std::size_t i)
{
    return {{i, PolyU::one()}};
}

void require_chain_complex(const FreeComplexU& c)
{
    for (std::size_t x = 0; x < c.size(); ++x) {
        std::map<std::size_t, PolyU> dd;
        for (const auto& t : c.differential[x]) {
            if (t.target >= c.size()) throw DomainError("differential targets a missing generator");
            for (const auto& s : c.differential[t.target]) dd[s.target] += t.coeff * s.coeff;
        }
        for (const auto& [y, v] : dd)
            if (!v.is_zero())
                throw DomainError("d^2 != 0 on " + c.generators[x].id + " in " + c.name);
    }
}

} // namespace

ModuleDecomp homology(const FreeComplexU& c)
{
    require_chain_complex(c);
    const std::size_t n = c.size();

    // (1) Column echelon reduction D*V = E, keyed on the last nonzero row of each
    // column. Vinv is kept row-wise so the inverse row operations stay sparse.
    std::vector<SparseVec> work(n), v(n), vinv(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& t : c.differential[j]) work[j].emplace_back(t.target, t.coeff);
        v[j] = unit_vector(j);
        vinv[j] = unit_vector(j);
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(n, kNone);
    const PolyU one = PolyU::one();

    for (std::size_t j = 0; j < n; ++j) {
        while (!work[j].empty()) {
            const std::size_t r = work[j].back().first;
            const std::size_t p = owner[r];
            if (p == kNone) {
                owner[r] = j;
                break;
            }
            const PolyU a = work[j].back().second;
            const PolyU b = work[p].back().second;
            auto [f, rem] = divrem(a, b);
            if (rem.is_zero()) {
                work[j] = combine(one, work[j], f, work[p]);
                v[j] = combine(one, v[j], f, v[p]);
                vinv[p] = combine(f, vinv[j], one, vinv[p]);
                continue;
            }
            // Unimodular 2x2 step replacing (col_j, col_p) so that col_p carries
            // gcd(a, b) in row r and col_j vanishes there.
            const Bezout bz = xgcd(a, b);
            const PolyU ag = divrem(a, bz.g).quot;
            const PolyU bg = divrem(b, bz.g).quot;
            auto new_j = combine(bg, work[j], ag, work[p]);
            auto new_p = combine(bz.s, work[j], bz.t, work[p]);
            work[j] = std::move(new_j);
            work[p] = std::move(new_p);
            auto nv_j = combine(bg, v[j], ag, v[p]);
            auto nv_p = combine(bz.s, v[j], bz.t, v[p]);
            v[j] = std::move(nv_j);
            v[p] = std::move(nv_p);
            auto ni_j = combine(bz.t, vinv[j], bz.s, vinv[p]);
            auto ni_p = combine(ag, vinv[j], bg, vinv[p]);
            vinv[j] = std::move(ni_j);
            vinv[p] = std::move(ni_p);
        }
    }

    std::vector<std::size_t> kernel;
    for (std::size_t j = 0; j < n; ++j)
        if (work[j].empty()) kernel.push_back(j);

    // (2) Coordinates of each boundary d(x_j) in the kernel basis {V e_k}:
    // R = (Vinv * D) restricted to kernel rows.
    std::vector<std::vector<std::pair<std::size_t, PolyU>>> d_rows(n);
    std::vector<std::size_t> image_cols;
    std::vector<std::size_t> image_pos(n, kNone);
    for (std::size_t j = 0; j < n; ++j) {
        if (c.differential[j].empty()) continue;
        image_pos[j] = image_cols.size();
        image_cols.push_back(j);
        for (const auto& t : c.differential[j]) d_rows[t.target].emplace_back(j, t.coeff);
    }

    std::vector<std::map<std::size_t, PolyU>> rel(kernel.size()); // rel[k][image col]
    for (std::size_t k = 0; k < kernel.size(); ++k) {
        auto& row = rel[k];
        for (const auto& [i, coeff] : vinv[kernel[k]])
            for (const auto& [j, dij] : d_rows[i]) row[image_pos[j]] += coeff * dij;
        std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    }

    // Exact membership check: sum_k R[k][j] * V e_k == d(x_j).
    std::vector<SparseVec> rebuilt(image_cols.size());
    for (std::size_t k = 0; k < kernel.size(); ++k)
        for (const auto& [jj, coeff] : rel[k])
            rebuilt[jj] = combine(one, rebuilt[jj], coeff, v[kernel[k]]);
    for (std::size_t jj = 0; jj < image_cols.size(); ++jj) {
        SparseVec expected;
        for (const auto& t : c.differential[image_cols[jj]]) expected.emplace_back(t.target, t.coeff);
        if (rebuilt[jj] != expected)
            throw InternalError("boundary of " + c.generators[image_cols[jj]].id +
                                " is not expressed by the kernel basis");
    }

    // (3) Invariant factors of the relation matrix.
    detail::SnfEngine engine(kernel.size(), image_cols.size(), false);
    for (std::size_t k = 0; k < kernel.size(); ++k)
        for (auto& [jj, coeff] : rel[k]) engine.set(k, jj, std::move(coeff));
    const auto diag = engine.run();

    std::vector<int> torsion;
    for (const auto& d : diag) {
        if (!d.is_monomial())
            throw DomainError("homology of " + c.name + " has torsion F2[u]/(" + to_string(d) +
                              "), which is not u-primary");
        const std::size_t e = d.lowest_exponent();
        if (e > 0) torsion.push_back(static_cast<int>(e));
    }
    ModuleDecomp out;
    out.free_rank = kernel.size() - diag.size();
    out.torsion = TorsionSequence::from_unsorted(std::move(torsion));
    return out;
}

std::string to_string(const ModuleDecomp& d)
{
    std::ostringstream os;
    os << "F[u]^" << d.free_rank;
    for (int n : d.torsion.entries()) os << " + F[u]/(u^" << n << ")";
    return os.str();
}

} // namespace cfk
