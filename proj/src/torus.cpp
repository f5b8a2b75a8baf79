#include "cfk/torus.hpp"

#include "cfk/algebra.hpp"
#include "cfk/errors.hpp"

#include <algorithm>
#include <numeric>

namespace cfk {

namespace {

constexpr long kMaxTorusDegree = 10'000'000;

void require_torus_params(int p, int q)
{
    if (!(1 < p && p < q)) throw DomainError("torus knot parameters need 1 < p < q");
    if (std::gcd(p, q) != 1) throw DomainError("torus knot parameters must be coprime");
    if (static_cast<long>(p) * q > kMaxTorusDegree) throw DomainError("torus knot parameters too large");
}

} // namespace

std::string torus_name(int p, int q)
{
    return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

StaircaseData alexander_quotient(int p, int q)
{
    require_torus_params(p, q);
    const long pq = static_cast<long>(p) * q;

    // numerator t^(pq+1) - t^pq - t + 1, dense by degree
    std::vector<std::int64_t> rem(static_cast<std::size_t>(pq + 2), 0);
    rem[static_cast<std::size_t>(pq + 1)] += 1;
    rem[static_cast<std::size_t>(pq)] -= 1;
    rem[1] -= 1;
    rem[0] += 1;
    // monic divisor t^(p+q) - t^p - t^q + 1
    const long dd = p + q;
    const std::pair<long, std::int64_t> lower[] = {{p, -1}, {q, -1}, {0, 1}};

    const long qdeg = pq + 1 - dd;
    std::vector<std::int64_t> quot(static_cast<std::size_t>(qdeg + 1), 0);
    for (long k = qdeg; k >= 0; --k) {
        const std::int64_t c = rem[static_cast<std::size_t>(k + dd)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k)] = c;
        rem[static_cast<std::size_t>(k + dd)] = 0;
        for (const auto& [e, coeff] : lower) {
            auto& slot = rem[static_cast<std::size_t>(k + e)];
            slot = checked::sub(slot, checked::mul(c, coeff));
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; }))
        throw InternalError("torus quotient has nonzero remainder for " + torus_name(p, q));

    StaircaseData s;
    s.p = p;
    s.q = q;
    std::int64_t expected = 1;
    for (long k = qdeg; k >= 0; --k) {
        const std::int64_t c = quot[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (c != expected)
            throw InternalError("torus quotient coefficients do not alternate for " + torus_name(p, q));
        s.a_vec.push_back(k);
        expected = -expected;
    }
    for (std::size_t i = 1; i < s.a_vec.size(); ++i)
        s.b_vec.push_back(static_cast<int>(s.a_vec[i - 1] - s.a_vec[i]));
    check_torus_staircase(s);
    return s;
}

void check_torus_staircase(const StaircaseData& s)
{
    const auto fail = [&s](const std::string& what) {
        throw InternalError(torus_name(s.p, s.q) + ": " + what);
    };
    if (s.a_vec.size() % 2 != 1) fail("a_vec must have odd length");
    if (s.a_vec.front() != static_cast<long>(s.p - 1) * (s.q - 1)) fail("a_0 != (p-1)(q-1)");
    if (s.a_vec.back() != 0) fail("a_2n != 0");
    if (s.b_vec.size() + 1 != s.a_vec.size()) fail("b_vec length mismatch");
    for (std::size_t i = 0; i < s.b_vec.size(); ++i) {
        if (s.b_vec[i] <= 0) fail("gaps must be positive");
        if (s.a_vec[i] - s.a_vec[i + 1] != s.b_vec[i]) fail("b_i != a_(i-1) - a_i");
        if (s.b_vec[i] > s.p - 1) fail("gap exceeds p-1");
    }
    const std::size_t m = s.b_vec.size();
    if (m < 2 || s.b_vec[m - 2] != s.p - 1 || s.b_vec[m - 1] != 1) fail("trailing gaps are not (p-1, 1)");
}

std::vector<int> closed_form_b_pk1(int p, int k)
{
    if (p < 2 || k < 1) throw DomainError("closed form needs p > 1 and k >= 1");
    std::vector<int> b;
    b.reserve(static_cast<std::size_t>(2 * (p - 1) * k));
    for (int j = 1; j < p; ++j)
        for (int r = 0; r < k; ++r) {
            b.push_back(j);
            b.push_back(p - j);
        }
    return b;
}

FreeComplexUW staircase_from_gaps(std::string name, std::span<const int> b)
{
    if (b.size() % 2 != 0) throw DomainError("staircase gap vector must have even length");
    if (std::any_of(b.begin(), b.end(), [](int x) { return x <= 0; }))
        throw DomainError("staircase gaps must be positive");

    const std::size_t n_gens = b.size() + 1;
    std::vector<long> a(n_gens, 0);
    for (std::size_t i = b.size(); i-- > 0;) a[i] = a[i + 1] + b[i];
    const long shift = a[0] / 2;

    // maslov(x_0) = 0; for odd i the u-arrow to x_(i-1) and the w-arrow to
    // x_(i+1) fix maslov(x_i) = maslov(x_(i-1)) + 1 - 2 b_i, maslov(x_(i+1)) = maslov(x_i) - 1.
    std::vector<long> maslov(n_gens, 0);
    for (std::size_t i = 1; i < n_gens; i += 2) {
        maslov[i] = maslov[i - 1] + 1 - 2L * b[i - 1];
        maslov[i + 1] = maslov[i] - 1;
    }

    FreeComplexUW c;
    c.name = std::move(name);
    for (std::size_t i = 0; i < n_gens; ++i)
        c.add_generator({"x" + std::to_string(i), static_cast<int>(maslov[i]), static_cast<int>(a[i] - shift)});
    for (std::size_t i = 1; i < n_gens; i += 2) {
        c.add_arrow(i, i - 1, PolyUW::monomial(static_cast<std::uint32_t>(b[i - 1]), 0));
        c.add_arrow(i, i + 1, PolyUW::monomial(0, static_cast<std::uint32_t>(b[i])));
    }
    return c;
}

FreeComplexUW staircase_complex(const StaircaseData& s)
{
    return staircase_from_gaps(torus_name(s.p, s.q), s.b_vec);
}

ClosedFormInvariants closed_form_invariants(std::span<const int> b)
{
    if (b.empty() || b.size() % 2 != 0)
        throw DomainError("closed-form invariants need a gap vector of even length >= 2");
    ClosedFormInvariants out;
    for (std::size_t i = 0; i + 1 < b.size(); i += 2) {
        out.tq = std::max(out.tq, b[i]);
        out.tq_prime = std::max(out.tq_prime, std::min(b[i], b[i + 1]));
    }
    return out;
}

} // namespace cfk
