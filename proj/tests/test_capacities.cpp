#include <doctest.h>

#include <random>

#include "ech/capacities.hpp"

using namespace ech;

TEST_CASE("closed-form examples") {
    CHECK(cap_ellipsoid(2, 1, 3) == 2);
    CHECK(cap_ellipsoid(Rational(3, 2), 1, 6) == 3);
    CHECK(cap_ellipsoid(Rational(7, 3), 5, 0) == 0);
    CHECK(cap_polydisk(Rational(3, 2), 1, 3) == Rational(5, 2));
    CHECK(cap_polydisk(Rational(3, 2), 1, 6) == Rational(9, 2));
    CHECK(cap_polydisk(Rational(7, 3), 5, 0) == 0);
    CHECK_THROWS_AS(cap_ellipsoid(0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(cap_polydisk(1, 1, -1), std::invalid_argument);
}

TEST_CASE("brute-force examples") {
    CHECK(cap_bruteforce(ToricDomain::ellipsoid(2, 1), 3) == 2);
    CHECK(cap_bruteforce(ToricDomain::polydisk(Rational(3, 2), 1), 3) == Rational(5, 2));
    CHECK(cap_bruteforce(ToricDomain::polydisk(1, 1), 1) == 1);
    CHECK(cap_bruteforce(ToricDomain::polydisk(1, 1), 0) == 0);
}

TEST_CASE("brute force equals the closed forms for k <= 30") {
    const std::vector<ToricDomain> fixtures{ToricDomain::polydisk(Rational(3, 2), 1), ToricDomain::polydisk(2, 1),
                                            ToricDomain::ellipsoid(2, 1), ToricDomain::ellipsoid(Rational(3, 2), 1),
                                            ToricDomain::ellipsoid(1, 1)};
    for (const auto& d : fixtures) {
        const auto table = capacity_table(d, 30);
        for (Int k = 0; k <= 30; ++k)
            CHECK_MESSAGE(cap_bruteforce(d, k) == table.entries[static_cast<std::size_t>(k)],
                          d.to_string() << " k=" << k);
    }
}

TEST_CASE("tables: monotone, start at zero, match single values") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const Rational a(std::uniform_int_distribution<Int>(1, 9)(rng), std::uniform_int_distribution<Int>(1, 4)(rng));
        const Rational b(std::uniform_int_distribution<Int>(1, 9)(rng), std::uniform_int_distribution<Int>(1, 4)(rng));
        for (const auto& d : {ToricDomain::polydisk(a, b), ToricDomain::ellipsoid(a, b)}) {
            const auto t = capacity_table(d, 150);
            CHECK(t.entries[0] == 0);
            for (std::size_t k = 1; k < t.entries.size(); ++k) CHECK(t.entries[k - 1] <= t.entries[k]);
        }
        for (Int k : {1, 7, 40, 150}) {
            CHECK(capacity_table(ToricDomain::ellipsoid(a, b), 150).entries[static_cast<std::size_t>(k)] ==
                  cap_ellipsoid(a, b, k));
            CHECK(capacity_table(ToricDomain::polydisk(a, b), 150).entries[static_cast<std::size_t>(k)] ==
                  cap_polydisk(a, b, k));
        }
    }
    CHECK_THROWS_AS(capacity_table(ToricDomain::parse("PL[(0,1),(1,0)]"), 3), std::invalid_argument);
}

TEST_CASE("conformality") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        const Rational a(std::uniform_int_distribution<Int>(1, 9)(rng), 2);
        const Rational b(std::uniform_int_distribution<Int>(1, 9)(rng), 3);
        const Rational lambda(std::uniform_int_distribution<Int>(1, 9)(rng), 5);
        for (Int k = 0; k <= 60; ++k) {
            CHECK(cap_ellipsoid(lambda * a, lambda * b, k) == lambda * cap_ellipsoid(a, b, k));
            CHECK(cap_polydisk(lambda * a, lambda * b, k) == lambda * cap_polydisk(a, b, k));
        }
    }
}

TEST_CASE("inclusion monotonicity") {
    for (Int an = 3; an <= 8; ++an)
        for (Int p : {1, 3, 5}) {
            const Rational a(an, 3);
            if (a < Rational(1)) continue;
            const Rational b(p, 2);
            const Rational c = (a + b) / b;  // smallest c with the inclusion
            REQUIRE(trivial_inclusion(a, b, c));
            const auto P = capacity_table(ToricDomain::polydisk(a, 1), 200);
            const auto E = capacity_table(ToricDomain::ellipsoid(b * c, c), 200);
            for (std::size_t k = 0; k <= 200; ++k) CHECK(P.entries[k] <= E.entries[k]);
        }
}

TEST_CASE("ratio scans") {
    const auto r = ratio_scan(ToricDomain::polydisk(1, 1), ToricDomain::polydisk(1, 1), 100);
    CHECK(r.max_ratio == 1);
    CHECK(r.argmax_k == 1);
    const auto s = ratio_scan(ToricDomain::polydisk(Rational(3, 2), 1), ToricDomain::ellipsoid(2, 1), 200);
    CHECK(s.max_ratio == Rational(5, 4));
    CHECK(s.argmax_k == 3);
    CHECK(s.numerator_at_argmax == Rational(5, 2));
    CHECK(s.denominator_at_argmax == 2);
    CHECK(s.volume_num / s.volume_den == Rational(3, 2));
    CHECK_THROWS_AS(ratio_scan(ToricDomain::polydisk(1, 1), ToricDomain::polydisk(1, 1), 0), std::invalid_argument);
}
