#pragma once

// Random inputs for property tests. Everything is seeded, so failures
// reproduce exactly.

#include "cfk/chain_complex.hpp"
#include "cfk/homology.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cfk::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

PolyU random_poly_u(Rng& rng, int max_degree);
PolyUW random_poly_uw(Rng& rng, int max_exp, int max_terms);

// rows x cols with roughly `density` nonzero entries of degree <= max_degree.
MatrixU random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_degree, double density = 0.6);

// x_0..x_2n with positive gaps b (length 2n, entries in 1..max_gap).
FreeComplexUW random_staircase(Rng& rng, int max_pairs, int max_gap);

// a -> u^k b + w^k c, b -> w^k e, c -> u^k e, with a at (maslov, alexander).
FreeComplexUW box_complex(int k, int maslov, int alexander, const std::string& prefix = "");

FreeComplexUW direct_sum(const FreeComplexUW& a, const FreeComplexUW& b);

// Staircases, boxes, staircase + box sums and tensors, at most max_generators.
FreeComplexUW random_complex(Rng& rng, std::size_t max_generators);

// Largest n with a cyclic summand F2[u]/(u^n), read off truncated dimensions
// only: the count of summands of order >= n is (dim(n) - dim(n-1) - free) / 2,
// with free = dim(N) - dim(N-1) for N past every order.
int max_torsion_by_truncation(const FreeComplexU& c, int search_limit);

} // namespace cfk::testing
