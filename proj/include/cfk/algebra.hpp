#pragma once

// Exact polynomial arithmetic: F2[u,w], F2[u], and integer Laurent
// polynomials in q,t.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cfk {

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
int add(int a, int b);
std::uint32_t add(std::uint32_t a, std::uint32_t b);
} // namespace checked

// ---------------------------------------------------------------------------
// F2[u,w]

struct MonomialUW {
    std::uint32_t u_exp = 0;
    std::uint32_t w_exp = 0;

    auto operator<=>(const MonomialUW&) const = default;
};

// Polynomial over F2 in u and w, stored as its (sorted) set of monomials.
class PolyUW {
public:
    PolyUW() = default;

    static PolyUW one() { return monomial(0, 0); }
    static PolyUW monomial(std::uint32_t u_exp, std::uint32_t w_exp);
    // Canonicalizes: repeated monomials cancel in pairs.
    static PolyUW from_terms(std::vector<MonomialUW> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<MonomialUW>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    PolyUW& operator+=(const PolyUW& other);
    friend PolyUW operator+(PolyUW a, const PolyUW& b) { return a += b; }
    friend PolyUW operator*(const PolyUW& a, const PolyUW& b);
    friend bool operator==(const PolyUW&, const PolyUW&) = default;

private:
    std::vector<MonomialUW> terms_;
};

std::string to_string(const PolyUW& p);

// ---------------------------------------------------------------------------
// F2[u]

// Polynomial over F2 in u. Bit e of the packed words is the coefficient of u^e.
class PolyU {
public:
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    PolyU() = default;

    static PolyU one() { return monomial(0); }
    static PolyU monomial(std::size_t exponent);
    static PolyU from_exponents(std::span<const std::size_t> exponents);
    static PolyU from_exponents(std::initializer_list<std::size_t> exponents)
    {
        return from_exponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
    }

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
    bool is_monomial() const noexcept;
    // kZeroDegree for the zero polynomial.
    long degree() const noexcept;
    bool coeff(std::size_t exponent) const noexcept;
    // Smallest exponent with nonzero coefficient; the polynomial must be nonzero.
    std::size_t lowest_exponent() const;
    std::vector<std::size_t> exponents() const;

    PolyU shifted(std::size_t k) const;

    PolyU& operator+=(const PolyU& other);
    friend PolyU operator+(PolyU a, const PolyU& b) { return a += b; }
    friend PolyU operator*(const PolyU& a, const PolyU& b);
    friend bool operator==(const PolyU&, const PolyU&) = default;

private:
    void trim() noexcept;

    std::vector<std::uint64_t> words_;
};

struct DivRem {
    PolyU quot;
    PolyU rem;
};

// a = b*quot + rem with deg(rem) < deg(b). Throws DomainError when b == 0.
DivRem divrem(const PolyU& a, const PolyU& b);

bool divides(const PolyU& divisor, const PolyU& a);

// s*a + t*b == g, g = gcd(a, b) (monic is automatic over F2).
struct Bezout {
    PolyU g;
    PolyU s;
    PolyU t;
};
Bezout xgcd(const PolyU& a, const PolyU& b);

std::string to_string(const PolyU& p);

// ---------------------------------------------------------------------------
// Z[q, q^-1, t, t^-1]

struct LaurentTerm {
    int q = 0;
    int t = 0;
    std::int64_t c = 0;

    friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

// Integer Laurent polynomial in q and t. Terms are kept in (t_exp, q_exp)
// lexicographic order; zero coefficients are never stored.
class LaurentQT {
public:
    LaurentQT() = default;

    static LaurentQT monomial(int q, int t, std::int64_t c = 1);
    static LaurentQT from_terms(std::span<const LaurentTerm> terms);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::int64_t coefficient(int q, int t) const;
    std::vector<LaurentTerm> terms() const;

    void add_term(int q, int t, std::int64_t c);

    LaurentQT& operator+=(const LaurentQT& other);
    LaurentQT& operator-=(const LaurentQT& other);
    friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
    friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
    friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
    friend bool operator==(const LaurentQT&, const LaurentQT&) = default;

private:
    // key = (t_exp, q_exp)
    std::map<std::pair<int, int>, std::int64_t> coeffs_;
};

// P with (1+qt)*P == a, or nullopt when a is not divisible.
std::optional<LaurentQT> div_one_plus_qt(const LaurentQT& a);

std::string to_string(const LaurentQT& p);

} // namespace cfk
