// Independent oracles shared by the unit tests. Nothing here calls into the
// enumerator or the row scan.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ech/generators.hpp"

namespace testsupport {

using ech::ConvexGenerator;
using ech::Edge;
using ech::Int;

inline ConvexGenerator gen(const std::string& s) { return ech::parse_generator(s); }

// Every convex generator ending at (x0, 0) from (0, y0), all label choices
// when `with_h`, built edge by edge from primitive vectors.
inline std::vector<ConvexGenerator> all_paths(Int x0, Int y0, bool with_h) {
    std::vector<std::pair<Int, Int>> dirs;
    for (Int a = 0; a <= x0; ++a)
        for (Int b = 0; b <= y0; ++b)
            if ((a || b) && std::gcd(a, b) == 1) dirs.push_back({a, b});
    // b/a increasing, (0,1) last
    std::sort(dirs.begin(), dirs.end(), [](auto l, auto r) { return l.second * r.first < r.second * l.first; });
    std::vector<ConvexGenerator> out;
    std::vector<Edge> path;
    std::function<void(std::size_t, Int, Int)> go = [&](std::size_t from, Int rx, Int ry) {
        if (rx == 0 && ry == 0) {
            if (path.empty()) return;
            std::vector<std::size_t> open;
            for (std::size_t i = 0; i < path.size(); ++i)
                if (!path[i].direction.is_axis()) open.push_back(i);
            const std::size_t combos = with_h ? (std::size_t{1} << open.size()) : 1;
            for (std::size_t mask = 0; mask < combos; ++mask) {
                auto edges = path;
                for (std::size_t j = 0; j < open.size(); ++j)
                    if (mask >> j & 1) edges[open[j]].hyperbolic = true;
                out.push_back(ConvexGenerator::from_edges(edges));
            }
            return;
        }
        for (std::size_t i = from; i < dirs.size(); ++i) {
            const auto [a, b] = dirs[i];
            for (Int m = 1; m * a <= rx && m * b <= ry; ++m) {
                path.push_back(Edge{{a, b}, m, false});
                go(i + 1, rx - m * a, ry - m * b);
                path.pop_back();
            }
        }
    };
    go(0, x0, y0);
    return out;
}

// Pick's theorem on the region under g: 2L = 2A + B + 2, valid when x, y >= 1.
inline Int pick_count(const ConvexGenerator& g) {
    const auto prof = ech::profile(g);
    Int twice_area = 0;
    std::vector<ech::LatticePoint> poly{{0, 0}};
    for (auto it = prof.vertices.rbegin(); it != prof.vertices.rend(); ++it) poly.push_back(*it);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        twice_area += p.x * q.y - q.x * p.y;
    }
    twice_area = std::abs(twice_area);
    Int boundary = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        boundary += std::gcd(std::abs(q.x - p.x), std::abs(q.y - p.y));
    }
    return (twice_area + boundary + 2) / 2;
}

inline ConvexGenerator random_generator(std::mt19937_64& rng, bool with_h) {
    std::vector<ech::Direction> pool;
    for (Int a = 0; a <= 6; ++a)
        for (Int b = 0; b <= 6; ++b)
            if ((a || b) && std::gcd(a, b) == 1) pool.push_back({a, b});
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<ech::EdgeFactor> f;
    for (std::size_t i = 0; i < k; ++i) {
        const Int m = std::uniform_int_distribution<Int>(1, 4)(rng);
        const bool h = with_h && !pool[i].is_axis() && (rng() & 1);
        if (h) {
            if (m > 1) f.push_back({pool[i], m - 1, ech::Label::e});
            f.push_back({pool[i], 1, ech::Label::h});
        } else {
            f.push_back({pool[i], m, ech::Label::e});
        }
    }
    return ConvexGenerator::from_factors(f);
}

template <class T>
std::set<std::string> names(const std::vector<T>& gs) {
    std::set<std::string> s;
    for (const auto& g : gs) s.insert(g.to_string());
    return s;
}

}  // namespace testsupport
