#include <doctest.h>

#include <map>
#include <tuple>

#include "ech/enumerate.hpp"
#include "support.hpp"

using namespace ech;
using testsupport::names;

namespace {

// Every generator with the index and action bound, from the independent
// path builder.
std::set<std::string> brute(const ToricDomain& d, Int index, const Rational& bound, bool strict, bool with_h) {
    std::set<std::string> out;
    const Int reach = (bound / std::min(d.x_intercept(), d.y_intercept())).floor() + 1;
    for (Int x = 0; x <= reach; ++x)
        for (Int y = 0; y <= reach; ++y) {
            if (x + y == 0) continue;
            static std::map<std::tuple<Int, Int, bool>, std::vector<ConvexGenerator>> cache;
            auto [it, fresh] = cache.try_emplace({x, y, with_h});
            if (fresh) it->second = testsupport::all_paths(x, y, with_h);
            for (const auto& g : it->second) {
                const Rational a = action(d, g);
                if (ech_index(g) == index && (strict ? a < bound : a <= bound)) out.insert(g.to_string());
            }
        }
    return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
    const auto P = ToricDomain::polydisk(1, 1);
    CHECK(names(enumerate_generators(2, 10, P, LabelMode::elliptic_only)) ==
          std::set<std::string>{"e(1,0)", "e(0,1)"});
    CHECK(names(enumerate_generators(4, 10, P, LabelMode::elliptic_only)) ==
          std::set<std::string>{"e(1,0)^2", "e(0,1)^2", "e(1,1)"});
    CHECK(names(enumerate_generators(3, 10, P, LabelMode::all)) == std::set<std::string>{"h(1,1)"});
}

TEST_CASE("enumeration matches brute force") {
    const std::vector<ToricDomain> domains{ToricDomain::polydisk(1, 1), ToricDomain::polydisk(Rational(3, 2), 1),
                                           ToricDomain::ellipsoid(2, 1), ToricDomain::ellipsoid(Rational(3, 2), 1),
                                           ToricDomain::parse("PL[(0,2),(1,2),(3,0)]")};
    for (const auto& d : domains)
        for (Int index = 1; index <= 16; ++index)
            for (const Rational bound : {Rational(3), Rational(9, 2), Rational(6)})
                for (bool strict : {false, true})
                    for (bool with_h : {false, true}) {
                        EnumerationRequest req;
                        req.index = index;
                        req.bound = ActionBound{bound, strict};
                        req.labels = with_h ? LabelMode::all : LabelMode::elliptic_only;
                        std::vector<ConvexGenerator> got;
                        for_each_generator(d, req, [&](const ConvexGenerator& g) {
                            got.push_back(g);
                            return true;
                        });
                        CHECK_MESSAGE(names(got) == brute(d, index, bound, strict, with_h),
                                      d.to_string() << " I=" << index << " A=" << bound);
                        CHECK(names(got).size() == got.size());
                    }
}

TEST_CASE("enumeration order is deterministic") {
    const auto d = ToricDomain::ellipsoid(Rational(3, 2), 1);
    const auto a = enumerate_generators(12, 6, d, LabelMode::all);
    const auto b = enumerate_generators(12, 6, d, LabelMode::all);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].y() <= a[i].y());
}

TEST_CASE("filters, node limits and errors") {
    const auto d = ToricDomain::polydisk(1, 1);
    EnumerationRequest req;
    req.index = 8;
    req.bound = ActionBound{Rational(10), false};
    req.filter.y_max = 1;
    req.filter.admit = [](Int x, Int) { return x >= 2; };
    std::vector<ConvexGenerator> got;
    for_each_generator(d, req, [&](const ConvexGenerator& g) {
        got.push_back(g);
        return true;
    });
    for (const auto& g : got) {
        CHECK(g.y() <= 1);
        CHECK(g.x() >= 2);
    }
    CHECK_FALSE(got.empty());

    req.filter = {};
    req.node_limit = 3;
    const auto stats = for_each_generator(d, req, [](const ConvexGenerator&) { return true; });
    CHECK(stats.truncated);

    CHECK_THROWS_AS(enumerate_generators(2, 0, d, LabelMode::all), std::invalid_argument);
}
