#include <doctest.h>

#include "ech/io.hpp"

using namespace ech;

TEST_CASE("rational JSON") {
    CHECK(to_json(Rational(17, 9)).dump() == R"({"num":17,"den":9})");
    CHECK(to_json(Rational(-3)).dump() == R"({"num":-3,"den":1})");
    const Rational big = Rational::parse("123456789012345678901234567891/2");
    CHECK(to_json(big)["num"] == "123456789012345678901234567891");
    CHECK(rational_from_json(to_json(big)) == big);
    CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
    CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num":1,"den":0})")), ParseError);
}

TEST_CASE("capacity CSV") {
    const auto t = capacity_table(ToricDomain::polydisk(Rational(3, 2), 1), 3);
    CHECK(capacities_csv(t) == "k,capacity_num,capacity_den\n0,0,1\n1,1,1\n2,2,1\n3,5,2\n");
}

TEST_CASE("report JSON has the documented keys") {
    const auto r = obstruct(EmbeddingProblem::supremum(Rational(4, 3), 3, 3));
    const auto j = to_json(r);
    CHECK(j["outcome"] == "obstructed");
    CHECK(j["bound"].dump() == R"({"num":17,"den":9})");
    CHECK(j["witness"].is_null());
    CHECK(j.contains("problem"));
    CHECK(j["stats"]["nodes"].get<std::uint64_t>() > 0);

    const auto w = build_witness(WitnessSpec{ExampleB{2}});
    const auto jw = to_json(w);
    CHECK(jw["generator"] == "e(1,0)^13 e(1,1)");
    CHECK(jw["le_check"]["ok"] == true);
    CHECK(jw["c"].dump() == R"({"num":63,"den":40})");
}
