#include "ech/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ech {

namespace {

constexpr Int kScaledLimit = Int{1} << 52;

Int to_scaled(const Rational& r, const mpz_class& scale) {
    const Rational v = r * Rational(mpq_class(scale));
    if (!v.is_integer()) throw std::logic_error("scaled action is not integral");
    const mpz_class z = v.num();
    if (!z.fits_slong_p() || abs(z) > kScaledLimit)
        throw std::overflow_error("domain coordinates too large for exact enumeration");
    return static_cast<Int>(z.get_si());
}

struct ScaledDirection {
    Direction dir;
    Int unit_action = 0;  // scaled
};

// Depth-first walk over concave lattice chains from (0, Y) down to the
// x-axis. Lattice count is accumulated edge by edge through
//   2L - 2 = 2*Area + x + y + m,
// where each edge (x1,y1)->(x2,y2) of multiplicity m contributes
//   (x2 - x1)(y1 + y2) + (x2 - x1) + (y1 - y2) + m.
class ChainSearch {
public:
    ChainSearch(const ToricDomain& d, const EnumerationRequest& req,
                const std::function<bool(const ConvexGenerator&)>& visit)
        : req_(req), visit_(visit) {
        if (req.bound.value.sign() <= 0) throw std::invalid_argument("action bound must be positive");
        mpz_class scale = 1;
        for (const auto& p : d.polygon()) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.x.den().get_mpz_t());
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.y.den().get_mpz_t());
        }
        const Rational scaled_bound = req.bound.value * Rational(mpq_class(scale));
        budget_ = req.bound.strict ? scaled_bound.ceil() - 1 : scaled_bound.floor();
        if (budget_ > kScaledLimit) throw std::overflow_error("action bound too large for exact enumeration");
        x_int_ = to_scaled(d.x_intercept(), scale);
        y_int_ = to_scaled(d.y_intercept(), scale);
        if (x_int_ <= 0 || y_int_ <= 0) throw UnboundedSearch("domain has a zero axis intercept");

        // Action of any generator is at least y * x_int and x * y_int.
        y_cap_ = budget_ >= 0 ? budget_ / x_int_ : -1;
        const Int alpha_cap = budget_ >= 0 ? budget_ / y_int_ : -1;
        for (Int beta = 0; beta <= y_cap_; ++beta) {
            for (Int alpha = 0; alpha <= alpha_cap; ++alpha) {
                if ((alpha == 0 && beta == 0) || std::gcd(alpha, beta) != 1) continue;
                const Direction dir{alpha, beta};
                const Int w = to_scaled(unit_edge_action(d, dir), scale);
                if (w <= budget_) dirs_.push_back({dir, w});
            }
        }
        std::sort(dirs_.begin(), dirs_.end(),
                  [](const ScaledDirection& a, const ScaledDirection& b) { return shallower(a.dir, b.dir); });
    }

    EnumerationStats run() {
        if (budget_ < 0) return stats_;
        Int y_hi = y_cap_;
        if (req_.filter.y_max) y_hi = std::min(y_hi, *req_.filter.y_max);
        for (Int y0 = std::max<Int>(0, req_.filter.y_min); y0 <= y_hi && !stop_; ++y0) {
            start_y_ = y0;
            x_limit_ = std::numeric_limits<Int>::max();
            if (req_.filter.x_max) {
                const auto lim = req_.filter.x_max(y0);
                if (lim) {
                    if (*lim < 0) continue;
                    x_limit_ = *lim;
                }
            }
            walk(0, y0, -1, 0, 0);
        }
        return stats_;
    }

private:
    // Upper bound on what the remaining chain can still add to 2L - 2.
    Int remaining_upper(Int cy, std::ptrdiff_t last, Int rem_budget) const {
        if (cy == 0) return 0;
        Int width = rem_budget / y_int_;
        __int128 twice_area = static_cast<__int128>(width) * cy * 2;
        if (last >= 0 && dirs_[static_cast<std::size_t>(last)].dir.beta > 0) {
            const auto& d = dirs_[static_cast<std::size_t>(last)].dir;
            // Steeper than d: bounded by the triangle under the line of slope -beta/alpha.
            width = std::min(width, cy * d.alpha / d.beta);
            twice_area = std::min<__int128>(twice_area, static_cast<__int128>(cy) * cy * d.alpha / d.beta + 1);
        }
        const __int128 ub = twice_area + 2 * (static_cast<__int128>(width) + cy);
        return ub > std::numeric_limits<Int>::max() / 2 ? std::numeric_limits<Int>::max() / 2 : static_cast<Int>(ub);
    }

    bool node() {
        ++stats_.nodes;
        if (req_.node_limit != 0 && stats_.nodes > req_.node_limit) {
            stats_.truncated = true;
            stop_ = true;
        }
        return !stop_;
    }

    void emit(Int x) {
        if (req_.filter.admit && !req_.filter.admit(x, start_y_)) return;
        ++stats_.emitted;
        if (!visit_(ConvexGenerator::from_edges(path_))) stop_ = true;
    }

    void walk(Int cx, Int cy, std::ptrdiff_t last, Int index, Int spent) {
        if (!node()) return;
        if (cy == 0 && last >= 0) {
            if (index == req_.index) emit(cx);
            return;
        }
        for (std::size_t i = static_cast<std::size_t>(last + 1); i < dirs_.size() && !stop_; ++i) {
            const auto& cand = dirs_[i];
            const Int alpha = cand.dir.alpha;
            const Int beta = cand.dir.beta;
            if (beta > cy) continue;
            for (Int m = 1;; ++m) {
                if (beta > 0 && m * beta > cy) break;
                const Int nx = cx + m * alpha;
                const Int ny = cy - m * beta;
                if (nx > x_limit_) break;
                const Int cost = spent + m * cand.unit_action;
                if (cost + ny * x_int_ > budget_) break;
                const Int gain = m * alpha * (cy + ny) + m * alpha + m * beta + m;
                const Int base = index + gain;
                const bool allow_h = req_.labels == LabelMode::all && !cand.dir.is_axis();
                const Int lowest = allow_h ? base - 1 : base;
                // Everything still to come adds at least ny.
                if (lowest + ny > req_.index) break;
                const Int rem = budget_ - cost;
                if (base + remaining_upper(ny, static_cast<std::ptrdiff_t>(i), rem) < req_.index) continue;
                path_.push_back(Edge{cand.dir, m, false});
                walk(nx, ny, static_cast<std::ptrdiff_t>(i), base, cost);
                if (allow_h && !stop_) {
                    path_.back().hyperbolic = true;
                    walk(nx, ny, static_cast<std::ptrdiff_t>(i), base - 1, cost);
                }
                path_.pop_back();
                if (stop_) return;
            }
        }
    }

    const EnumerationRequest& req_;
    const std::function<bool(const ConvexGenerator&)>& visit_;
    std::vector<ScaledDirection> dirs_;
    std::vector<Edge> path_;
    EnumerationStats stats_;
    Int budget_ = 0;
    Int x_int_ = 1;
    Int y_int_ = 1;
    Int y_cap_ = 0;
    Int start_y_ = 0;
    Int x_limit_ = 0;
    bool stop_ = false;
};

}  // namespace

EnumerationStats for_each_generator(const ToricDomain& d, const EnumerationRequest& req,
                                    const std::function<bool(const ConvexGenerator&)>& visit) {
    return ChainSearch(d, req, visit).run();
}

std::vector<ConvexGenerator> enumerate_generators(Int index, const Rational& action_bound, const ToricDomain& d,
                                                  LabelMode labels) {
    EnumerationRequest req;
    req.index = index;
    req.bound = ActionBound{action_bound, false};
    req.labels = labels;
    std::vector<ConvexGenerator> out;
    for_each_generator(d, req, [&](const ConvexGenerator& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

}  // namespace ech
