#include "ech/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "ech/enumerate.hpp"

namespace ech {

namespace {

// a = A / D, b = B / D with A, B, D positive integers.
struct ScaledPair {
    mpz_class A;
    mpz_class B;
    mpz_class D;
};

ScaledPair scale_pair(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw std::invalid_argument("capacity parameters must be positive");
    ScaledPair s;
    mpz_lcm(s.D.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    s.A = a.num() * (s.D / a.den());
    s.B = b.num() * (s.D / b.den());
    return s;
}

Rational unscale(const mpz_class& v, const mpz_class& D) { return Rational(mpq_class(v, D)); }

std::vector<Rational> ellipsoid_table(const Rational& a, const Rational& b, Int k_max) {
    const auto s = scale_pair(a, b);
    using Entry = std::tuple<mpz_class, Int, Int>;  // value, m, n
    auto greater = [](const Entry& l, const Entry& r) { return cmp(std::get<0>(l), std::get<0>(r)) > 0; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> heap(greater);
    heap.emplace(mpz_class(0), 0, 0);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max + 1));
    while (static_cast<Int>(out.size()) <= k_max) {
        auto [v, m, n] = heap.top();
        heap.pop();
        out.push_back(unscale(v, s.D));
        heap.emplace(v + s.A, m + 1, n);
        if (m == 0) heap.emplace(v + s.B, 0, n + 1);
    }
    return out;
}

// Minimizers of a m + b n over (m+1)(n+1) >= k+1 are found among the
// pairs where the smaller factor j = min(m, n) + 1 is at most ceil(sqrt(k+1))
// and the other coordinate is as small as the constraint allows.
template <typename T>
T polydisk_scaled(const T& A, const T& B, Int k) {
    const Int target = k + 1;
    T best = A * T(k);  // (m, n) = (k, 0)
    for (Int j = 1; (j - 1) * (j - 1) <= target; ++j) {
        const Int other = (target + j - 1) / j - 1;
        const T via_m = A * T(j - 1) + B * T(other);
        const T via_n = A * T(other) + B * T(j - 1);
        if (via_m < best) best = via_m;
        if (via_n < best) best = via_n;
    }
    return best;
}

std::vector<Rational> polydisk_table(const Rational& a, const Rational& b, Int k_max) {
    const auto s = scale_pair(a, b);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max + 1));
    const mpz_class limit = mpz_class(1) << 60;
    const bool small = (s.A + s.B) * (k_max + 1) < limit;
    if (small) {
        const Int A = s.A.get_si();
        const Int B = s.B.get_si();
        for (Int k = 0; k <= k_max; ++k) out.push_back(unscale(mpz_class(static_cast<long>(polydisk_scaled<Int>(A, B, k))), s.D));
    } else {
        for (Int k = 0; k <= k_max; ++k) out.push_back(unscale(polydisk_scaled<mpz_class>(s.A, s.B, k), s.D));
    }
    return out;
}

}  // namespace

Rational cap_ellipsoid(const Rational& a, const Rational& b, Int k) {
    if (k < 0) throw std::invalid_argument("capacity index must be nonnegative");
    return ellipsoid_table(a, b, k).back();
}

Rational cap_polydisk(const Rational& a, const Rational& b, Int k) {
    if (k < 0) throw std::invalid_argument("capacity index must be nonnegative");
    const auto s = scale_pair(a, b);
    return unscale(polydisk_scaled<mpz_class>(s.A, s.B, k), s.D);
}

CapacityTable capacity_table(const ToricDomain& d, Int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    if (const auto* p = std::get_if<Polydisk>(&d.variant())) return {d, polydisk_table(p->a, p->b, k_max)};
    if (const auto* e = std::get_if<Ellipsoid>(&d.variant())) return {d, ellipsoid_table(e->a, e->b, k_max)};
    throw std::invalid_argument("closed-form capacities need a polydisk or an ellipsoid");
}

Rational cap_bruteforce(const ToricDomain& d, Int k) {
    if (k < 0) throw std::invalid_argument("capacity index must be nonnegative");
    if (k == 0) return Rational(0);
    // e(1,0)^k and e(0,1)^k both have index 2k.
    const Rational upper = std::min(action(d, parse_generator("e(1,0)^" + std::to_string(k))),
                                    action(d, parse_generator("e(0,1)^" + std::to_string(k))));
    Rational bound = upper / Rational(8);
    while (true) {
        if (bound > upper) bound = upper;
        EnumerationRequest req;
        req.index = 2 * k;
        req.bound = ActionBound{bound, false};
        req.labels = LabelMode::elliptic_only;
        req.node_limit = 100'000'000;
        std::optional<Rational> best;
        const auto stats = for_each_generator(d, req, [&](const ConvexGenerator& g) {
            const Rational a = action(d, g);
            if (!best || a < *best) best = a;
            return true;
        });
        if (stats.truncated) throw std::runtime_error("capacity enumeration exceeded its node limit");
        if (best) return *best;
        if (bound == upper) throw std::logic_error("no generator of index 2k within the axis bound");
        bound *= Rational(2);
    }
}

RatioScanResult ratio_scan(const ToricDomain& num, const ToricDomain& den, Int k_max) {
    if (k_max < 1) throw std::invalid_argument("ratio scan needs k_max >= 1");
    const auto top = capacity_table(num, k_max).entries;
    const auto bottom = capacity_table(den, k_max).entries;
    RatioScanResult r;
    r.k_max = k_max;
    for (Int k = 1; k <= k_max; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const Rational ratio = top[i] / bottom[i];
        if (r.argmax_k == 0 || ratio > r.max_ratio) {
            r.max_ratio = ratio;
            r.argmax_k = k;
            r.numerator_at_argmax = top[i];
            r.denominator_at_argmax = bottom[i];
        }
        if (k == k_max) r.final_ratio = ratio;
    }
    r.volume_num = volume(num);
    r.volume_den = volume(den);
    return r;
}

}  // namespace ech
