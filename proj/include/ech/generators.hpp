// Convex generators: labeled convex integral lattice paths written as formal
// products of e(a,b)^m and h(a,b) factors.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

using Int = std::int64_t;

/// Primitive edge direction. The geometric edge e(a,b)^m has displacement
/// (m*alpha, -m*beta).
struct Direction {
    Int alpha = 1;
    Int beta = 0;

    bool is_axis() const { return alpha == 0 || beta == 0; }
    friend bool operator==(const Direction&, const Direction&) = default;
};

/// Strict slope order: (1,0) first, (0,1) last. Compares beta/alpha.
bool shallower(const Direction& lhs, const Direction& rhs);

/// Reduces (dx, dy) with dx, dy >= 0, not both zero, to a direction and the
/// gcd multiplicity.
std::pair<Direction, Int> primitive(Int dx, Int dy);

enum class Label { e, h };

/// One factor of the formal product.
struct EdgeFactor {
    Direction direction;
    Int multiplicity = 1;
    Label label = Label::e;

    friend bool operator==(const EdgeFactor&, const EdgeFactor&) = default;
};

/// A geometric edge of the path: all factors sharing a direction merged.
/// `hyperbolic` marks the e^{m-1} h convention.
struct Edge {
    Direction direction;
    Int multiplicity = 1;
    bool hyperbolic = false;

    Int elliptic_multiplicity() const { return hyperbolic ? multiplicity - 1 : multiplicity; }
    Int dx() const { return multiplicity * direction.alpha; }
    Int dy() const { return multiplicity * direction.beta; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct LatticePoint {
    Int x = 0;
    Int y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct PathProfile {
    Int x = 0;
    Int y = 0;
    Int m = 0;
    Int h = 0;
    std::vector<LatticePoint> vertices;  // from (0, y) to (x, 0)
};

class ConvexGenerator {
public:
    /// Builds the canonical generator from factors in any order. Throws
    /// std::invalid_argument on an illegal factor set.
    static ConvexGenerator from_factors(const std::vector<EdgeFactor>& factors);
    /// Builds from geometric edges in any order (one per direction).
    static ConvexGenerator from_edges(std::vector<Edge> edges);
    /// Builds the purely elliptic generator through the given vertices,
    /// which must start on the y-axis, end on the x-axis and be concave.
    static ConvexGenerator from_vertices(const std::vector<LatticePoint>& vertices);

    const std::vector<Edge>& edges() const { return edges_; }
    /// The formal product in canonical order (e factor before h factor).
    std::vector<EdgeFactor> factors() const;

    Int x() const;
    Int y() const;
    Int total_multiplicity() const;
    Int hyperbolic_count() const;
    bool purely_elliptic() const { return hyperbolic_count() == 0; }

    /// Elliptic multiplicity carried in `dir` (0 when absent).
    Int elliptic_multiplicity(const Direction& dir) const;
    bool has_hyperbolic(const Direction& dir) const;

    std::string to_string() const;

    friend bool operator==(const ConvexGenerator&, const ConvexGenerator&) = default;
    /// Total order used for normalizing factorizations; not geometric.
    friend bool operator<(const ConvexGenerator& a, const ConvexGenerator& b);

private:
    explicit ConvexGenerator(std::vector<Edge> edges) : edges_(std::move(edges)) {}
    std::vector<Edge> edges_;
};

ConvexGenerator parse_generator(std::string_view text);
std::string format_generator(const ConvexGenerator& g);

PathProfile profile(const ConvexGenerator& g);

/// Lattice points in the closed region bounded by the path and the axes,
/// counted row by row.
Int lattice_count(const ConvexGenerator& g);

/// Rightmost lattice x enclosed at each integer row 0..y(g).
std::vector<Int> row_maxima(const ConvexGenerator& g);

/// I = 2(L - 1) - h.
Int ech_index(const ConvexGenerator& g);

enum class IndexFamily {
    axis_rectangle,  // e(1,0)^k e(0,1)^m
    stair,           // e(k,1) e(0,1)^(m-1)
    segment,         // edge from (0,m) to (k,0)
    trapezoid,       // e(1,0)^(kd) e(m,1)^d
    power,           // e(p,q)^d
};

struct IndexShape {
    IndexFamily family = IndexFamily::power;
    Int k = 0;
    Int m = 0;
    Int d = 1;
    Int p = 1;
    Int q = 1;
};

/// Closed-form index of a shape family; throws std::invalid_argument when
/// the parameters are outside the family's hypotheses.
Int index_closed_form(const IndexShape& shape);
/// The generator a shape describes.
ConvexGenerator shape_generator(const IndexShape& shape);

/// Throws std::invalid_argument if the two share a hyperbolic orbit.
ConvexGenerator product(const ConvexGenerator& g1, const ConvexGenerator& g2);
bool share_hyperbolic_orbit(const ConvexGenerator& g1, const ConvexGenerator& g2);
bool share_elliptic_orbit(const ConvexGenerator& g1, const ConvexGenerator& g2);

using Decomposition = std::vector<ConvexGenerator>;

/// Calls `visit` for every ordered n-tuple of nonempty generators whose
/// product is g, in lexicographic order of the multiplicity splits. Returning
/// false from `visit` stops the walk.
void for_each_decomposition(const ConvexGenerator& g, int n,
                            const std::function<bool(const Decomposition&)>& visit);
std::vector<Decomposition> decompositions(const ConvexGenerator& g, int n);

}  // namespace ech
