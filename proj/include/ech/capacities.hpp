// ECH capacities of ellipsoids and polydisks, a brute-force oracle over
// generators, and capacity ratio scans.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ech/domains.hpp"
#include "ech/rational.hpp"

namespace ech {

struct CapacityTable {
    ToricDomain domain;
    std::vector<Rational> entries;  // entries[k] = c_k, k = 0..k_max
};

/// (k+1)-st smallest element of the multiset {a m + b n : m, n >= 0}.
Rational cap_ellipsoid(const Rational& a, const Rational& b, Int k);
/// min{a m + b n : m, n >= 0, (m+1)(n+1) >= k+1}.
Rational cap_polydisk(const Rational& a, const Rational& b, Int k);

/// c_0..c_kmax for a polydisk or ellipsoid. Throws std::invalid_argument
/// for other domains.
CapacityTable capacity_table(const ToricDomain& d, Int k_max);

/// Minimum action over purely elliptic generators of index 2k, found by
/// enumeration. Intended for small k (desk scale, k <= 50).
Rational cap_bruteforce(const ToricDomain& d, Int k);

struct RatioScanResult {
    Rational max_ratio;
    Int argmax_k = 0;
    Rational numerator_at_argmax;
    Rational denominator_at_argmax;
    Rational final_ratio;  // at k_max
    Int k_max = 0;
    /// vol(num) / vol(den); the ratios tend to its square root.
    Rational volume_num;
    Rational volume_den;
};

/// Exact max over k = 1..k_max of c_k(num) / c_k(den); the smallest
/// maximizing k is reported.
RatioScanResult ratio_scan(const ToricDomain& num, const ToricDomain& den, Int k_max);

}  // namespace ech
