#pragma once

// Free bigraded chain complexes over F2[u,w] and their F2[u] specializations.
//
// Grading convention: maslov(u) = -2, maslov(w) = 0, alexander(u) = -1,
// alexander(w) = +1. The differential lowers maslov by one and preserves
// alexander, so a term u^a w^b y in d(x) requires
//     maslov(y) - 2a = maslov(x) - 1,  alexander(y) - a + b = alexander(x).

#include "cfk/algebra.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cfk {

// Joins generator ids in tensor products; not allowed inside input ids.
inline constexpr char kTensorSeparator = '*';

struct Generator {
    std::string id;
    int maslov = 0;
    int alexander = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

template <typename Poly>
struct Term {
    std::size_t target = 0;
    Poly coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

using TermUW = Term<PolyUW>;
using TermU = Term<PolyU>;

enum class CoeffMode { WZero, WEqualsU };

std::string_view to_string(CoeffMode mode);

// differential[i] lists d(generators[i]) as terms sorted by target index.
struct FreeComplexUW {
    std::string name;
    int components = 1;
    int markings = 1;
    std::vector<Generator> generators;
    std::vector<std::vector<TermUW>> differential;

    std::size_t size() const noexcept { return generators.size(); }
    std::size_t add_generator(Generator g);
    // Adds coeff * target to d(source), merging with an existing entry.
    void add_arrow(std::size_t source, std::size_t target, const PolyUW& coeff);
};

struct FreeComplexU {
    std::string name;
    int components = 1;
    int markings = 1;
    CoeffMode mode = CoeffMode::WZero;
    std::vector<Generator> generators;
    std::vector<std::vector<TermU>> differential;

    std::size_t size() const noexcept { return generators.size(); }
};

struct ValidationIssue {
    enum class Kind {
        DuplicateId,
        BadCounts,
        DanglingTarget,
        GradingMismatch,
        DSquaredNonzero,
    };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept { return issues.empty(); }
    std::size_t count(ValidationIssue::Kind kind) const;
};

ValidationReport validate(const FreeComplexUW& c);
// d^2 = 0 over F2[u]; in WZero mode also the u-only grading constraints.
ValidationReport validate(const FreeComplexU& c);

// WZero drops every term with w_exp > 0; WEqualsU sends u^a w^b to u^(a+b).
// Throws DomainError if the specialized differential does not square to zero.
FreeComplexU specialize(const FreeComplexUW& c, CoeffMode mode);

// Tensor product over F2[u,w] of two knot complexes. Generator (i, j) sits at
// index i * b.size() + j with id "<a.id>*<b.id>".
FreeComplexUW tensor(const FreeComplexUW& a, const FreeComplexUW& b);

// One generator in bigrading (0, 0), zero differential.
FreeComplexUW unknot_complex();

} // namespace cfk
