#include "cfk/complex_io.hpp"
#include "cfk/errors.hpp"
#include "cfk/torus.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cfk;

namespace {

nlohmann::json parse(const char* text) { return nlohmann::json::parse(text); }

const char* kTrefoil = R"({"name": "T", "components": 1, "markings": 1,
  "generators": [{"id": "x0", "maslov": 0, "alexander": 1},
                 {"id": "x1", "maslov": -1, "alexander": 0},
                 {"id": "x2", "maslov": -2, "alexander": -1}],
  "differential": [{"from": "x1", "to": "x0", "terms": [{"u": 1, "w": 0}]},
                   {"from": "x1", "to": "x2", "terms": [{"u": 0, "w": 1}]}]})";

} // namespace

TEST_CASE("complex JSON round trip is byte-stable")
{
    cfk::testing::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = cfk::testing::random_complex(rng, 20);
        const auto text = dump_canonical(to_json(c));
        const auto back = complex_from_json(nlohmann::json::parse(text));
        CHECK(back.generators == c.generators);
        CHECK(back.differential == c.differential);
        CHECK(dump_canonical(to_json(back)) == text);
    }
}

TEST_CASE("parsed trefoil matches the staircase")
{
    const auto c = complex_from_json(parse(kTrefoil));
    const auto s = staircase_complex(alexander_quotient(2, 3));
    CHECK(c.generators == s.generators);
    CHECK(c.differential == s.differential);
}

TEST_CASE("strict parsing")
{
    auto j = parse(kTrefoil);
    auto with = [&](auto mutate) {
        auto k = j;
        mutate(k);
        return k;
    };
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["extra"] = 1; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k.erase("markings"); })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["components"] = 0; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["components"] = 1.5; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["generators"][0]["id"] = ""; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["generators"][0]["id"] = "x*"; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["generators"][0]["id"] = "*x"; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["generators"][0]["id"] = "x**y"; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["differential"][0]["to"] = "nope"; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["differential"][1]["to"] = "x0"; })), ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["differential"][0]["terms"] = nlohmann::json::array(); })),
                    ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) {
                        k["differential"][0]["terms"].push_back({{"u", 1}, {"w", 0}});
                    })),
                    ParseError);
    CHECK_THROWS_AS(complex_from_json(with([](auto& k) { k["differential"][0]["terms"][0]["u"] = -1; })),
                    ParseError);
    CHECK_NOTHROW(complex_from_json(with([](auto& k) {
        k["generators"][0]["id"] = "x0*y0";
        k["differential"][0]["to"] = "x0*y0";
    })));
}

TEST_CASE("duplicate ids parse and are left to validate")
{
    auto j = parse(kTrefoil);
    j["generators"].push_back({{"id", "x0"}, {"maslov", 0}, {"alexander", 1}});
    const auto c = complex_from_json(j);
    CHECK(validate(c).count(ValidationIssue::Kind::DuplicateId) == 1);
}

TEST_CASE("Laurent and PolyUW encodings")
{
    LaurentQT p;
    p.add_term(1, 1, 2);
    p.add_term(-1, -1, 2);
    p.add_term(0, 0, 4);
    const auto j = to_json(p);
    CHECK(j.dump() == R"([{"q":-1,"t":-1,"c":2},{"q":0,"t":0,"c":4},{"q":1,"t":1,"c":2}])");
    CHECK(laurent_from_json(nlohmann::json::parse(j.dump())) == p);
    const auto uw = PolyUW::from_terms({{2, 0}, {0, 1}});
    CHECK(to_json(uw).dump() == R"([{"u":0,"w":1},{"u":2,"w":0}])");
    CHECK(poly_uw_from_json(nlohmann::json::parse(to_json(uw).dump())) == uw);
}
