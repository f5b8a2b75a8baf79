#include "cfk/errors.hpp"
#include "cfk/torus.hpp"
#include "cfk/unknotting.hpp"

#include <doctest.h>

#include <numeric>

using namespace cfk;

TEST_CASE("single steps")
{
    CHECK(unknot_step(3, 4) == UnknotStep{1, 2, 1, 1, 1});
    CHECK(unknot_step(5, 7) == UnknotStep{1, 1, 2, 3, -1});
    CHECK(unknot_step(6, 7) == UnknotStep{4, 5, 1, 1, 1});
    CHECK_THROWS_AS(unknot_step(4, 6), DomainError);
}

TEST_CASE("k(p,q) examples")
{
    for (int n = 1; n <= 10; ++n) CHECK(kpq(2, 2 * n + 1).k == 1);
    CHECK(kpq(5, 7).k == 1);
    const auto r = kpq(6, 7);
    CHECK(r.k == 3);
    REQUIRE(r.trace.size() == 4);
    CHECK(r.trace[0] == TraceEntry{6, 7, 1, 1, 1});
    CHECK(r.trace[1] == TraceEntry{4, 5, 1, 1, 1});
    CHECK(r.trace[2] == TraceEntry{2, 3, 1, 1, 1});
    CHECK(r.trace[3] == TraceEntry{0, 1, 0, 0, 0});
    CHECK(kpq(1, 4).k == 0);
    CHECK(kpq(0, 1).k == 0);
    CHECK_THROWS_AS(kpq(4, 6), DomainError);
    CHECK_THROWS_AS(kpq(7, 3), DomainError);
}

TEST_CASE("k(p,q) bounds and families")
{
    for (int p = 2; p <= 200; ++p)
        for (int q = p + 1; q <= 200; ++q)
            if (std::gcd(p, q) == 1) {
                const auto r = kpq(p, q);
                CHECK(r.k <= p / 2);
                for (std::size_t s = 0; s + 1 < r.trace.size(); ++s) {
                    const auto& e = r.trace[s];
                    CHECK(static_cast<long>(e.i) * e.q == static_cast<long>(e.j) * e.p + e.sign);
                    CHECK(r.trace[s + 1].p < e.p);
                }
            }
    for (int p = 2; p <= 20; ++p)
        for (int n = 1; n <= 5; ++n) CHECK(kpq(p, p * n + 1).k == p / 2);
    for (int p = 3; p <= 21; p += 2)
        for (int n = 1; n <= 5; ++n) CHECK(kpq(p, p * n + 2).k == 1);
}

TEST_CASE("closed-form tq' never exceeds k(p,q)")
{
    for (int p = 2; p <= 30; ++p)
        for (int q = p + 1; q <= 30; ++q)
            if (std::gcd(p, q) == 1)
                CHECK(closed_form_invariants(alexander_quotient(p, q).b_vec).tq_prime <= kpq(p, q).k);
}
