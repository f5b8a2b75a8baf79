#pragma once

// Sparse Smith normal form over F2[u], shared by snf() and homology().

#include "cfk/homology.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cfk::detail {

class SnfEngine {
public:
    SnfEngine(std::size_t rows, std::size_t cols, bool track_transforms);

    void set(std::size_t r, std::size_t c, PolyU value);

    // Runs the reduction; returns the diagonal in pivot order.
    std::vector<PolyU> run();

    // Valid after run() when transforms are tracked; rows/columns are permuted
    // so the k-th pivot lands at (k, k).
    MatrixU p() const;
    MatrixU q() const;

private:
    struct Pivot {
        std::size_t row;
        std::size_t col;
    };

    void add_entry(std::size_t r, std::size_t c, const PolyU& delta);
    void row_axpy(std::size_t dst, const PolyU& f, std::size_t src);
    void col_axpy(std::size_t dst, const PolyU& f, std::size_t src);
    std::optional<Pivot> min_degree_entry() const;
    // Clears the pivot's row and column; false if a nonzero remainder was left.
    bool eliminate(const Pivot& piv);
    // First entry outside the pivot's row/column not divisible by the pivot.
    std::optional<std::size_t> undivisible_row(const Pivot& piv) const;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::map<std::size_t, PolyU>> row_entries_;
    std::vector<std::set<std::size_t>> col_rows_;
    std::vector<Pivot> pivots_;

    bool track_;
    std::vector<std::vector<PolyU>> p_rows_; // row-major P
    std::vector<std::vector<PolyU>> q_cols_; // column-major Q
};

} // namespace cfk::detail
