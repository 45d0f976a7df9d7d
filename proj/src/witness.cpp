#include "ech/witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ech {

namespace {

// Twice the signed area of (o, a, b); negative for a clockwise turn.
Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

ConvexGenerator maximal_from_rows(const std::vector<Int>& row_max) {
    if (row_max.empty()) throw std::invalid_argument("no rows given");
    const Int n = static_cast<Int>(row_max.size()) - 1;
    for (std::size_t k = 0; k < row_max.size(); ++k) {
        if (row_max[k] < 0) throw std::invalid_argument("row maxima must be nonnegative");
        if (k > 0 && row_max[k] > row_max[k - 1]) throw std::invalid_argument("row maxima must not increase");
    }
    if (n == 0 && row_max[0] == 0) throw std::invalid_argument("no lattice point enclosed besides the origin");

    std::vector<LatticePoint> pts;
    pts.push_back({0, n});
    for (Int k = n; k >= 0; --k) pts.push_back({row_max[static_cast<std::size_t>(k)], k});
    std::vector<LatticePoint> hull;
    for (const auto& pt : pts) {
        if (!hull.empty() && hull.back() == pt) continue;
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) >= 0) hull.pop_back();
        hull.push_back(pt);
    }
    auto g = ConvexGenerator::from_vertices(hull);
    if (row_maxima(g) != row_max) throw std::invalid_argument("rows do not bound a convex lattice region");
    return g;
}

ConvexGenerator maximal_under(const ConvexPath& path) {
    if (!path.segments_hit_lattice())
        throw std::invalid_argument("every segment's supporting line must pass through a lattice point");
    const auto& v = path.vertices();
    const Int n = path.y_intercept().floor();
    if (n < 0) throw std::invalid_argument("no lattice point enclosed");
    std::vector<Int> rows(static_cast<std::size_t>(n + 1), 0);
    for (Int k = 0; k <= n; ++k) {
        const Rational h(k);
        Rational best(0);
        for (std::size_t i = 1; i < v.size(); ++i) {
            const Point& s = v[i - 1];
            const Point& t = v[i];
            Rational x;
            if (h <= t.y)
                x = t.x;
            else if (h <= s.y)
                x = s.x + (s.y - h) * (t.x - s.x) / (s.y - t.y);
            else
                continue;
            if (x > best) best = x;
        }
        rows[static_cast<std::size_t>(k)] = best.floor();
    }
    return maximal_from_rows(rows);
}

std::vector<LatticePoint> strip_order(Int x0, Int y0) {
    if (x0 < 1 || y0 < 1) throw std::invalid_argument("x0 and y0 must be positive");
    std::vector<LatticePoint> s;
    for (Int y = 0; y <= y0; ++y)
        for (Int x = 0; x <= x0; ++x)
            if (y0 * x + x0 * y > x0 * y0) s.push_back({x, y});
    std::sort(s.begin(), s.end(), [&](const LatticePoint& l, const LatticePoint& r) {
        const Int kl = y0 * l.x + x0 * l.y;
        const Int kr = y0 * r.x + x0 * r.y;
        return kl != kr ? kl < kr : l.x < r.x;
    });
    return s;
}

ConvexGenerator generator_with_count(Int x0, Int y0, Int L) {
    if (x0 < 1 || y0 < 1) throw std::invalid_argument("x0 and y0 must be positive");
    const auto diagonal = ConvexGenerator::from_vertices({{0, y0}, {x0, 0}});
    const Int lo = lattice_count(diagonal);
    const Int hi = (x0 + 1) * (y0 + 1);
    if (L < lo || L > hi)
        throw std::invalid_argument("lattice count " + std::to_string(L) + " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    std::vector<Int> rows = row_maxima(diagonal);
    const auto strip = strip_order(x0, y0);
    for (Int i = 0; i < L - lo; ++i) {
        const auto& pt = strip[static_cast<std::size_t>(i)];
        auto& r = rows[static_cast<std::size_t>(pt.y)];
        r = std::max(r, pt.x);
    }
    auto g = maximal_from_rows(rows);
    if (lattice_count(g) != L) throw std::logic_error("selected points do not bound a convex region");
    return g;
}

// ---------------------------------------------------------------------------
// Witness recipes

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Rational base_a(Int d0) { return Rational(2 * d0 - 1, d0); }

}  // namespace

void WitnessSpec::validate() const {
    std::visit(overloaded{
                   [](const ExampleA& s) {
                       if (s.d0 < 2) throw std::invalid_argument("d0 must be at least 2");
                       if (s.epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
                       if (s.p <= 2 || s.p % 2 == 0) throw std::invalid_argument("p must be odd and greater than 2");
                   },
                   [](const ExampleB& s) {
                       if (s.d0 < 2) throw std::invalid_argument("d0 must be at least 2");
                   },
                   [](const ExampleC& s) {
                       if (s.d0 < 2) throw std::invalid_argument("d0 must be at least 2");
                       if (!(s.p > s.q && s.q > 3)) throw std::invalid_argument("need p > q > 3");
                       if (std::gcd(s.p, s.q) != 1) throw std::invalid_argument("p and q must be coprime");
                   },
               },
               variant);
}

std::string WitnessSpec::name() const {
    return std::visit(overloaded{[](const ExampleA&) { return std::string("A"); },
                                 [](const ExampleB&) { return std::string("B"); },
                                 [](const ExampleC&) { return std::string("C"); }},
                      variant);
}

Int WitnessSpec::d0() const {
    return std::visit([](const auto& s) { return s.d0; }, variant);
}

Rational WitnessSpec::a() const {
    return std::visit(overloaded{[](const ExampleA& s) { return base_a(s.d0) + s.epsilon; },
                                 [](const ExampleB& s) { return base_a(s.d0); },
                                 [](const ExampleC& s) { return base_a(s.d0); }},
                      variant);
}

Int WitnessSpec::p() const {
    return std::visit(overloaded{[](const ExampleA& s) { return s.p; },
                                 [](const ExampleB& s) { return 4 * s.d0 - 3; },
                                 [](const ExampleC& s) { return s.p; }},
                      variant);
}

Int WitnessSpec::q() const {
    if (const auto* c = std::get_if<ExampleC>(&variant)) return c->q;
    return 2;
}

Int WitnessSpec::x0() const {
    const Int d = d0();
    return std::visit(overloaded{[&](const ExampleA& s) { return (s.p + 2) * d - 1; },
                                 [&](const ExampleB&) { return (p() + 2) * d; },
                                 [&](const ExampleC& s) { return (s.p + s.q + 1) * d - 1 - y0(); }},
                      variant);
}

Int WitnessSpec::y0() const {
    const Int d = d0();
    return std::visit(overloaded{[&](const ExampleA&) { return d; },
                                 [&](const ExampleB&) { return d - 1; },
                                 [&](const ExampleC& s) { return (s.q + 1) / 2 * d; }},
                      variant);
}

Int WitnessSpec::target_index() const {
    const Int d = d0();
    return p() * q() * d * d + (p() + q() + 1) * d;
}

Rational WitnessSpec::pc_upper() const { return Rational(q()) * a() + Rational(p()); }

Rational WitnessSpec::pc_lower() const {
    const Int d = d0();
    return std::visit(overloaded{[&](const ExampleA& s) { return pc_upper() - s.epsilon / Rational(2); },
                                 [&](const ExampleB&) { return pc_upper() - Rational(d - 1, d * d); },
                                 [&](const ExampleC& s) {
                                     return pc_upper() - Rational((s.q - 3) * (d - 1), 2 * d);
                                 }},
                      variant);
}

Rational WitnessSpec::default_c() const { return (pc_lower() + pc_upper()) / Rational(2 * p()); }

WitnessResult build_witness(const WitnessSpec& spec, std::optional<Rational> c) {
    spec.validate();
    const Rational cc = c.value_or(spec.default_c());
    auto prob = EmbeddingProblem::exact(spec.a(), spec.p(), spec.d0(), cc, spec.q());
    const Int L = spec.target_index() / 2 + 1;
    std::optional<ConvexGenerator> g;
    try {
        g = generator_with_count(spec.x0(), spec.y0(), L);
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("witness recipe inconsistent: ") + e.what());
    }
    auto check = le_check(*g, spec.d0(), prob);
    return WitnessResult{spec, *g, cc, prob, check};
}

}  // namespace ech
