#include <random>

#include "doctest.h"
#include "records.hpp"

using namespace twistlab;
using namespace twistlab::cli;

TEST_CASE("integer lists") {
    CHECK(parse_list("").empty());
    CHECK(parse_list("1,2, 3") == std::vector<long>{1, 2, 3});
    CHECK(parse_list("-4") == std::vector<long>{-4});
    CHECK_THROWS_AS(parse_list("1,,2"), Error);
    CHECK_THROWS_AS(parse_list("1,x"), Error);
    CHECK_THROWS_AS(parse_list("1,"), Error);
    CHECK(join({3, -1, 0}) == "3,-1,0");
    CHECK(join({}).empty());
}

TEST_CASE("element records round trip") {
    std::mt19937 g(1);
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}}) {
        auto c = build_cartan(f, r);
        TwistContext ctx(c, coset_longest(c, {1}));
        for (int trial = 0; trial < 10; ++trial) {
            Vec p(ctx.length());
            for (auto& x : p) x = static_cast<Int>(g() % 7) - 3;
            Vec canon = ctx.canonical(p);
            ElementRecord rec{f, r, ctx.word(), canon, ctx.psi(canon), true, Vec(r, 0)};
            rec.frozen_shift[0] = trial;
            json j = to_json(rec);
            CHECK(element_from_json(j) == rec);
            CHECK(element_from_json(json::parse(j.dump())) == rec);
            CHECK(to_json(element_from_json(j)).dump() == j.dump());
        }
    }
    auto c = build_cartan('A', 2);
    ElementRecord bad{'A', 2, {1, 2, 1}, {1, 0, 0}, {0, 0, 0}, false, {0, 0}};
    CHECK_THROWS_AS(element_from_json(to_json(bad)), Error);
    bad.str = {1, 0, 0};
    CHECK(element_from_json(to_json(bad)) == bad);
    bad.pbw = {1, 0, 1};
    bad.str = TwistContext(c, bad.word).psi(bad.pbw);
    bad.canonical = true;
    CHECK_THROWS_AS(element_from_json(to_json(bad)), Error);
    CHECK_THROWS_AS(element_from_json(json{{"word", {1}}}), Error);
}

TEST_CASE("period records round trip") {
    PeriodRecord finite{'A', 4, std::vector<int>{2, 3}, {1, 2, 3}, 2, 100, {2, 1, 1}};
    CHECK(period_from_json(json::parse(to_json(finite).dump())) == finite);
    PeriodRecord inf{'A', 5, std::nullopt, {1, 2}, std::nullopt, 50, {std::nullopt, 3}};
    json j = to_json(inf);
    CHECK(j["value"] == "INF(50)");
    CHECK(j["xi"][0] == "INF(50)");
    CHECK_FALSE(j.contains("J"));
    CHECK(period_from_json(j) == inf);
    j["value"] = "INF(10)";
    CHECK_THROWS_AS(period_from_json(j), Error);
}
