// Bounded enumeration of convex generators by index and action.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ech/domains.hpp"
#include "ech/generators.hpp"

namespace ech {

enum class LabelMode { elliptic_only, all };

/// Action <= value, or < value when strict.
struct ActionBound {
    Rational value;
    bool strict = false;

    bool admits(const Rational& a) const { return strict ? a < value : a <= value; }
};

/// Optional restriction on the endpoints (x, y) of enumerated paths. The
/// enumerator only visits y in [y_min, y_max], abandons chains starting at
/// height y once x exceeds x_max(y), and discards endpoints that `admit`
/// rejects.
struct ProfileFilter {
    Int y_min = 0;
    std::optional<Int> y_max;
    std::function<std::optional<Int>(Int y)> x_max;
    std::function<bool(Int x, Int y)> admit;
};

struct EnumerationRequest {
    Int index = 0;
    ActionBound bound;
    LabelMode labels = LabelMode::elliptic_only;
    ProfileFilter filter;
    /// Maximum number of search nodes; 0 means unlimited.
    std::uint64_t node_limit = 0;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
    bool truncated = false;  // node limit hit before the search finished
};

class UnboundedSearch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Visits every generator with the requested index whose action against `d`
/// satisfies the bound, exactly once, in a fixed order: start height
/// ascending, then edges by increasing steepness, multiplicity ascending,
/// elliptic label before hyperbolic. Returning false from `visit` stops.
EnumerationStats for_each_generator(const ToricDomain& d, const EnumerationRequest& req,
                                    const std::function<bool(const ConvexGenerator&)>& visit);

std::vector<ConvexGenerator> enumerate_generators(Int index, const Rational& action_bound, const ToricDomain& d,
                                                  LabelMode labels);

}  // namespace ech
