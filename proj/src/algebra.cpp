#include "cfk/algebra.hpp"

#include "cfk/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cfk {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

int add(int a, int b)
{
    int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
    return r;
}

std::uint32_t add(std::uint32_t a, std::uint32_t b)
{
    std::uint32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
    return r;
}

} // namespace checked

// ---------------------------------------------------------------------------
// PolyUW

namespace {

// Sorts and cancels repeated monomials in pairs.
void canonicalize(std::vector<MonomialUW>& terms)
{
    std::sort(terms.begin(), terms.end());
    std::vector<MonomialUW> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    terms = std::move(out);
}

} // namespace

PolyUW PolyUW::monomial(std::uint32_t u_exp, std::uint32_t w_exp)
{
    PolyUW p;
    p.terms_.push_back({u_exp, w_exp});
    return p;
}

PolyUW PolyUW::from_terms(std::vector<MonomialUW> terms)
{
    canonicalize(terms);
    PolyUW p;
    p.terms_ = std::move(terms);
    return p;
}

PolyUW& PolyUW::operator+=(const PolyUW& other)
{
    std::vector<MonomialUW> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

PolyUW operator*(const PolyUW& a, const PolyUW& b)
{
    std::vector<MonomialUW> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            prod.push_back({checked::add(x.u_exp, y.u_exp), checked::add(x.w_exp, y.w_exp)});
    return PolyUW::from_terms(std::move(prod));
}

std::string to_string(const PolyUW& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : p.terms()) {
        if (!first) os << " + ";
        first = false;
        if (m.u_exp == 0 && m.w_exp == 0) {
            os << "1";
            continue;
        }
        if (m.u_exp > 0) {
            os << "u";
            if (m.u_exp > 1) os << "^" << m.u_exp;
        }
        if (m.w_exp > 0) {
            if (m.u_exp > 0) os << "*";
            os << "w";
            if (m.w_exp > 1) os << "^" << m.w_exp;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// PolyU

namespace {

// dst ^= src * u^shift
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t shift)
{
    if (src.empty()) return;
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = static_cast<unsigned>(shift % 64);
    const std::size_t needed = src.size() + word_shift + (bit_shift ? 1 : 0);
    if (dst.size() < needed) dst.resize(needed, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + word_shift] ^= src[i] << bit_shift;
        if (bit_shift) dst[i + word_shift + 1] ^= src[i] >> (64 - bit_shift);
    }
}

} // namespace

void PolyU::trim() noexcept
{
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

PolyU PolyU::monomial(std::size_t exponent)
{
    PolyU p;
    p.words_.assign(exponent / 64 + 1, 0);
    p.words_.back() = std::uint64_t{1} << (exponent % 64);
    return p;
}

PolyU PolyU::from_exponents(std::span<const std::size_t> exponents)
{
    PolyU p;
    for (std::size_t e : exponents) p += monomial(e);
    return p;
}

bool PolyU::is_monomial() const noexcept
{
    if (words_.empty()) return false;
    std::size_t bits = 0;
    for (auto w : words_) bits += static_cast<std::size_t>(std::popcount(w));
    return bits == 1;
}

long PolyU::degree() const noexcept
{
    if (words_.empty()) return kZeroDegree;
    return static_cast<long>(words_.size() * 64) - 1 - std::countl_zero(words_.back());
}

bool PolyU::coeff(std::size_t exponent) const noexcept
{
    const std::size_t w = exponent / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (exponent % 64)) & 1U;
}

std::size_t PolyU::lowest_exponent() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    throw DomainError("lowest exponent of the zero polynomial");
}

std::vector<std::size_t> PolyU::exponents() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

PolyU PolyU::shifted(std::size_t k) const
{
    PolyU p;
    xor_shifted(p.words_, words_, k);
    p.trim();
    return p;
}

PolyU& PolyU::operator+=(const PolyU& other)
{
    if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

PolyU operator*(const PolyU& a, const PolyU& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    const PolyU& sparse = a.words_.size() <= b.words_.size() ? a : b;
    const PolyU& dense = &sparse == &a ? b : a;
    PolyU p;
    for (std::size_t e : sparse.exponents()) xor_shifted(p.words_, dense.words_, e);
    p.trim();
    return p;
}

DivRem divrem(const PolyU& a, const PolyU& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    DivRem out{PolyU{}, a};
    const long db = b.degree();
    while (!out.rem.is_zero() && out.rem.degree() >= db) {
        const auto s = static_cast<std::size_t>(out.rem.degree() - db);
        out.quot += PolyU::monomial(s);
        out.rem += b.shifted(s);
    }
    return out;
}

bool divides(const PolyU& divisor, const PolyU& a)
{
    if (divisor.is_zero()) return a.is_zero();
    if (divisor.is_monomial()) return a.is_zero() || a.lowest_exponent() >= divisor.lowest_exponent();
    return divrem(a, divisor).rem.is_zero();
}

Bezout xgcd(const PolyU& a, const PolyU& b)
{
    PolyU r0 = a, r1 = b;
    PolyU s0 = PolyU::one(), s1;
    PolyU t0, t1 = PolyU::one();
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        PolyU s2 = s0 + q * s1;
        s0 = std::exchange(s1, std::move(s2));
        PolyU t2 = t0 + q * t1;
        t0 = std::exchange(t1, std::move(t2));
    }
    return {r0, s0, t0};
}

std::string to_string(const PolyU& p)
{
    if (p.is_zero()) return "0";
    auto exps = p.exponents();
    std::ostringstream os;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (it != exps.rbegin()) os << "+";
        if (*it == 0)
            os << "1";
        else if (*it == 1)
            os << "u";
        else
            os << "u^" << *it;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// LaurentQT

LaurentQT LaurentQT::monomial(int q, int t, std::int64_t c)
{
    LaurentQT p;
    p.add_term(q, t, c);
    return p;
}

LaurentQT LaurentQT::from_terms(std::span<const LaurentTerm> terms)
{
    LaurentQT p;
    for (const auto& term : terms) p.add_term(term.q, term.t, term.c);
    return p;
}

std::int64_t LaurentQT::coefficient(int q, int t) const
{
    auto it = coeffs_.find({t, q});
    return it == coeffs_.end() ? 0 : it->second;
}

std::vector<LaurentTerm> LaurentQT::terms() const
{
    std::vector<LaurentTerm> out;
    out.reserve(coeffs_.size());
    for (const auto& [key, c] : coeffs_) out.push_back({key.second, key.first, c});
    return out;
}

void LaurentQT::add_term(int q, int t, std::int64_t c)
{
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace({t, q}, c);
    if (!inserted) {
        it->second = checked::add(it->second, c);
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& other)
{
    for (const auto& [key, c] : other.coeffs_) add_term(key.second, key.first, c);
    return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& other)
{
    for (const auto& [key, c] : other.coeffs_) add_term(key.second, key.first, checked::sub(0, c));
    return *this;
}

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b)
{
    LaurentQT p;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_)
            p.add_term(checked::add(ka.second, kb.second), checked::add(ka.first, kb.first),
                       checked::mul(ca, cb));
    return p;
}

std::optional<LaurentQT> div_one_plus_qt(const LaurentQT& a)
{
    // Multiplication by 1+qt never mixes monomials with different t - q, so each
    // diagonal t - q = const is a chain c_k (indexed by q) solved independently:
    // c_k = p_{k-1} + p_k.
    std::map<long, std::map<int, std::int64_t>> chains;
    for (const auto& term : a.terms())
        chains[static_cast<long>(term.t) - term.q][term.q] = term.c;

    LaurentQT quotient;
    for (const auto& [diag, chain] : chains) {
        const int q_lo = chain.begin()->first;
        const int q_hi = chain.rbegin()->first;
        std::int64_t prev = 0;
        for (long q = q_lo; q <= q_hi; ++q) {
            auto it = chain.find(static_cast<int>(q));
            const std::int64_t c = it == chain.end() ? 0 : it->second;
            const std::int64_t cur = checked::sub(c, prev);
            if (q == q_hi) {
                if (cur != 0) return std::nullopt;
                break;
            }
            quotient.add_term(static_cast<int>(q), static_cast<int>(q + diag), cur);
            prev = cur;
        }
    }
    return quotient;
}

std::string to_string(const LaurentQT& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto power = [&os](char var, int e) {
        if (e == 0) return;
        os << var;
        if (e != 1) os << "^" << e;
    };
    for (const auto& term : p.terms()) {
        std::int64_t c = term.c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const std::int64_t mag = c < 0 ? -c : c;
        const bool constant = term.q == 0 && term.t == 0;
        if (mag != 1 || constant) os << mag;
        power('q', term.q);
        power('t', term.t);
    }
    return os.str();
}

} // namespace cfk
