#include "snf_engine.hpp"

#include "cfk/errors.hpp"

#include <algorithm>

namespace cfk {

MatrixU MatrixU::identity(std::size_t n)
{
    MatrixU m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PolyU::one();
    return m;
}

MatrixU operator*(const MatrixU& a, const MatrixU& b)
{
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
    MatrixU out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const PolyU& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const PolyU& y = b.at(k, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

namespace detail {

SnfEngine::SnfEngine(std::size_t rows, std::size_t cols, bool track_transforms)
    : rows_(rows), cols_(cols), row_entries_(rows), col_rows_(cols), track_(track_transforms)
{
    if (track_) {
        p_rows_.assign(rows, std::vector<PolyU>(rows));
        for (std::size_t i = 0; i < rows; ++i) p_rows_[i][i] = PolyU::one();
        q_cols_.assign(cols, std::vector<PolyU>(cols));
        for (std::size_t j = 0; j < cols; ++j) q_cols_[j][j] = PolyU::one();
    }
}

void SnfEngine::set(std::size_t r, std::size_t c, PolyU value)
{
    auto& row = row_entries_.at(r);
    if (value.is_zero()) {
        row.erase(c);
        col_rows_.at(c).erase(r);
    } else {
        row[c] = std::move(value);
        col_rows_.at(c).insert(r);
    }
}

void SnfEngine::add_entry(std::size_t r, std::size_t c, const PolyU& delta)
{
    if (delta.is_zero()) return;
    auto& row = row_entries_[r];
    auto [it, inserted] = row.try_emplace(c, delta);
    if (inserted) {
        col_rows_[c].insert(r);
    } else {
        it->second += delta;
        if (it->second.is_zero()) {
            row.erase(it);
            col_rows_[c].erase(r);
            return;
        }
    }
    if (it->second.degree() > kMaxReductionDegree)
        throw InternalError("Smith reduction exceeded the intermediate degree cap");
}

void SnfEngine::row_axpy(std::size_t dst, const PolyU& f, std::size_t src)
{
    if (f.is_zero()) return;
    for (const auto& [c, v] : row_entries_[src]) add_entry(dst, c, f * v);
    if (track_) {
        auto& pd = p_rows_[dst];
        const auto& ps = p_rows_[src];
        for (std::size_t k = 0; k < rows_; ++k)
            if (!ps[k].is_zero()) pd[k] += f * ps[k];
    }
}

void SnfEngine::col_axpy(std::size_t dst, const PolyU& f, std::size_t src)
{
    if (f.is_zero()) return;
    const std::vector<std::size_t> rows(col_rows_[src].begin(), col_rows_[src].end());
    for (std::size_t r : rows) add_entry(r, dst, f * row_entries_[r].at(src));
    if (track_) {
        auto& qd = q_cols_[dst];
        const auto& qs = q_cols_[src];
        for (std::size_t k = 0; k < cols_; ++k)
            if (!qs[k].is_zero()) qd[k] += f * qs[k];
    }
}

std::optional<SnfEngine::Pivot> SnfEngine::min_degree_entry() const
{
    std::optional<Pivot> best;
    long best_degree = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& [c, v] : row_entries_[r]) {
            const long d = v.degree();
            if (!best || d < best_degree) {
                best = Pivot{r, c};
                best_degree = d;
                if (d == 0) return best;
            }
        }
    }
    return best;
}

bool SnfEngine::eliminate(const Pivot& piv)
{
    const PolyU pv = row_entries_[piv.row].at(piv.col);
    bool clean = true;

    const std::vector<std::size_t> rows(col_rows_[piv.col].begin(), col_rows_[piv.col].end());
    for (std::size_t i : rows) {
        if (i == piv.row) continue;
        auto [q, rem] = divrem(row_entries_[i].at(piv.col), pv);
        row_axpy(i, q, piv.row);
        if (!rem.is_zero()) clean = false;
    }

    std::vector<std::size_t> cols;
    for (const auto& kv : row_entries_[piv.row]) cols.push_back(kv.first);
    for (std::size_t j : cols) {
        if (j == piv.col) continue;
        auto [q, rem] = divrem(row_entries_[piv.row].at(j), pv);
        col_axpy(j, q, piv.col);
        if (!rem.is_zero()) clean = false;
    }
    return clean;
}

std::optional<std::size_t> SnfEngine::undivisible_row(const Pivot& piv) const
{
    const PolyU& pv = row_entries_[piv.row].at(piv.col);
    if (pv.is_one()) return std::nullopt;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r == piv.row) continue;
        for (const auto& [c, v] : row_entries_[r])
            if (!divides(pv, v)) return r;
    }
    return std::nullopt;
}

std::vector<PolyU> SnfEngine::run()
{
    std::vector<PolyU> diag;
    while (auto found = min_degree_entry()) {
        Pivot cur = *found;
        for (;;) {
            if (!eliminate(cur)) {
                cur = *min_degree_entry();
                continue;
            }
            if (auto r = undivisible_row(cur)) {
                row_axpy(cur.row, PolyU::one(), *r);
                continue;
            }
            break;
        }
        diag.push_back(row_entries_[cur.row].at(cur.col));
        pivots_.push_back(cur);
        row_entries_[cur.row].erase(cur.col);
        col_rows_[cur.col].erase(cur.row);
    }
    return diag;
}

MatrixU SnfEngine::p() const
{
    if (!track_) throw InternalError("transforms were not tracked");
    std::vector<std::size_t> order;
    std::vector<bool> used(rows_, false);
    for (const auto& pv : pivots_) {
        order.push_back(pv.row);
        used[pv.row] = true;
    }
    for (std::size_t r = 0; r < rows_; ++r)
        if (!used[r]) order.push_back(r);
    MatrixU out(rows_, rows_);
    for (std::size_t k = 0; k < rows_; ++k)
        for (std::size_t j = 0; j < rows_; ++j) out.at(k, j) = p_rows_[order[k]][j];
    return out;
}

MatrixU SnfEngine::q() const
{
    if (!track_) throw InternalError("transforms were not tracked");
    std::vector<std::size_t> order;
    std::vector<bool> used(cols_, false);
    for (const auto& pv : pivots_) {
        order.push_back(pv.col);
        used[pv.col] = true;
    }
    for (std::size_t c = 0; c < cols_; ++c)
        if (!used[c]) order.push_back(c);
    MatrixU out(cols_, cols_);
    for (std::size_t k = 0; k < cols_; ++k)
        for (std::size_t i = 0; i < cols_; ++i) out.at(i, k) = q_cols_[order[k]][i];
    return out;
}

} // namespace detail

SnfResult snf(const MatrixU& m)
{
    detail::SnfEngine engine(m.rows(), m.cols(), true);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) engine.set(r, c, m.at(r, c));
    SnfResult out;
    out.diag = engine.run();
    out.p = engine.p();
    out.q = engine.q();
    return out;
}

std::vector<PolyU> invariant_factors(const MatrixU& m)
{
    detail::SnfEngine engine(m.rows(), m.cols(), false);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) engine.set(r, c, m.at(r, c));
    return engine.run();
}

} // namespace cfk
