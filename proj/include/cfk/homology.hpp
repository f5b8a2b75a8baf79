#pragma once

// Homology of free chain complexes over the PID F2[u].

#include "cfk/algebra.hpp"
#include "cfk/chain_complex.hpp"
#include "cfk/torsion_sequence.hpp"

#include <cstddef>
#include <vector>

namespace cfk {

// Intermediate degrees above this abort a reduction.
inline constexpr long kMaxReductionDegree = 1'000'000;

class MatrixU {
public:
    MatrixU() = default;
    MatrixU(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static MatrixU identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    PolyU& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
    const PolyU& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

    friend MatrixU operator*(const MatrixU& a, const MatrixU& b);
    friend bool operator==(const MatrixU&, const MatrixU&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<PolyU> entries_;
};

// p * m * q places diag[0], diag[1], ... on the main diagonal and zero
// elsewhere, with diag[i] | diag[i+1] and every diag[i] nonzero.
struct SnfResult {
    std::vector<PolyU> diag;
    MatrixU p;
    MatrixU q;
};

// Pivot rule: a nonzero entry of minimal degree in the active submatrix, ties
// broken by row-major scan order.
SnfResult snf(const MatrixU& m);

// Invariant factors only; no transforms are tracked.
std::vector<PolyU> invariant_factors(const MatrixU& m);

struct ModuleDecomp {
    std::size_t free_rank = 0;
    TorsionSequence torsion;

    friend bool operator==(const ModuleDecomp&, const ModuleDecomp&) = default;
};

// ker d / im d as an (ungraded) F2[u]-module. Throws DomainError if d^2 != 0
// or if the module has torsion that is not u-primary.
ModuleDecomp homology(const FreeComplexU& c);

// dim over F2 of the homology of c (x) F2[u]/(u^n), by plain linear algebra
// over F2 on the n * size() dimensional truncation.
std::size_t truncated_dimension(const FreeComplexU& c, std::size_t n);

std::string to_string(const ModuleDecomp& d);

} // namespace cfk
