#pragma once

// Torus knots T(p,q): the alternating expansion
//     (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) = sum_i (-1)^i t^a_i,
// its gap vector b_i = a_(i-1) - a_i, and the staircase complex it determines.

#include "cfk/chain_complex.hpp"

#include <span>
#include <string>
#include <vector>

namespace cfk {

struct StaircaseData {
    int p = 0;
    int q = 0;
    std::vector<long> a_vec; // a_0 = (p-1)(q-1) > a_1 > ... > a_2n = 0
    std::vector<int> b_vec;  // b_i = a_(i-1) - a_i, i = 1..2n
};

// Requires coprime 1 < p < q; throws DomainError otherwise.
StaircaseData alexander_quotient(int p, int q);

// Throws InternalError if any structural property of torus gap vectors fails:
// odd-length a_vec, positive gaps, reconstruction, trailing (p-1, 1), b_i <= p-1.
void check_torus_staircase(const StaircaseData& s);

// Gap vector of T(p, pk+1): for j = 1..p-1 the pair (j, p-j), repeated k times.
std::vector<int> closed_form_b_pk1(int p, int k);

// Generators x_0..x_2n; for odd i, d(x_i) = u^b_i x_(i-1) + w^b_(i+1) x_(i+1).
// Alexander gradings a_i - (p-1)(q-1)/2, maslov(x_0) = 0.
FreeComplexUW staircase_complex(const StaircaseData& s);

// Same construction from an arbitrary even-length vector of positive gaps.
// Alexander gradings are shifted by floor(sum(b)/2).
FreeComplexUW staircase_from_gaps(std::string name, std::span<const int> b);

struct ClosedFormInvariants {
    int tq = 0;
    int tq_prime = 0;

    friend bool operator==(const ClosedFormInvariants&, const ClosedFormInvariants&) = default;
};

// tq = max(b_1, b_3, ..., b_(2n-1)); tq' = max_i min(b_(2i-1), b_(2i)).
// Throws DomainError for odd or empty input.
ClosedFormInvariants closed_form_invariants(std::span<const int> b);

std::string torus_name(int p, int q);

} // namespace cfk
