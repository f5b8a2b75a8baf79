#pragma once

// Obstructions read off the knot Floer Poincare polynomial
//     Q_K(q,t) = sum dim HFK_j(K, i) q^j t^i
// and off reduced complexes x_0..x_2n with d(x_i) = u^(s_i - s_(i+1)) x_(i+1)
// for odd i.

#include "cfk/algebra.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfk {

struct QPoly {
    std::string knot_name;
    LaurentQT poly;
};

// Throws DomainError unless poly is nonzero with strictly positive coefficients.
QPoly make_qpoly(std::string knot_name, LaurentQT poly);

// t_exp - q_exp is the same for every monomial.
bool is_thin(const QPoly& q);

enum class Verdict { Passes, FailsDivisibility, FailsPositivity };

std::string_view to_string(Verdict v);

struct ObstructionResult {
    Verdict verdict = Verdict::Passes;
    LaurentQT difference;             // Q - t^tau
    std::optional<LaurentQT> quotient; // (Q - t^tau)/(1+qt) when divisible
};

// One-sided: either failure certifies tq(K) >= 2. Passes proves nothing.
ObstructionResult prr_obstruction(const QPoly& q, int tau);

struct ReducedComplexDesc {
    // (s_i, mu_i) for i = 0..2n: Alexander and homological grading of x_i.
    std::vector<std::pair<int, int>> pairs;
};

// Throws DomainError on even length, mu_0 != 0, mu_(i+1) != mu_i - 1 or
// s_i <= s_(i+1) for odd i.
void check_reduced(const ReducedComplexDesc& d);

struct TauTq {
    int tau = 0;
    int tq = 0;

    friend bool operator==(const TauTq&, const TauTq&) = default;
};

// tau = s_0, tq = max over j of s_(2j-1) - s_(2j) (0 if n = 0).
TauTq reduced_tau_tq(const ReducedComplexDesc& d);

// sum_i q^mu_i t^s_i
QPoly q_from_reduced(const ReducedComplexDesc& d, std::string knot_name = "");

struct KnotTableRow {
    std::string name;
    int tau = 0;
    QPoly q;
};

// [{"name": str, "tau": int, "Q": [{"q": int, "t": int, "c": int}, ...]}, ...]
std::vector<KnotTableRow> load_knot_table(const std::filesystem::path& path);

} // namespace cfk
