// Four-dimensional convex toric domains and the symplectic action of
// convex generators on them.
#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ech/generators.hpp"
#include "ech/rational.hpp"

namespace ech {

struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Piecewise-linear concave path from the y-axis to the x-axis with
/// non-positive slopes; a vertical final segment is allowed.
class ConvexPath {
public:
    explicit ConvexPath(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    Rational x_intercept() const { return vertices_.back().x; }
    Rational y_intercept() const { return vertices_.front().y; }

    /// True when every segment's supporting line passes through a lattice point.
    bool segments_hit_lattice() const;

private:
    std::vector<Point> vertices_;
};

struct Polydisk {
    Rational a;
    Rational b;
};

struct Ellipsoid {
    Rational a;
    Rational b;
};

struct ConvexPL {
    ConvexPath boundary;
};

class ToricDomain {
public:
    using Variant = std::variant<Polydisk, Ellipsoid, ConvexPL>;

    static ToricDomain polydisk(Rational a, Rational b);
    static ToricDomain ellipsoid(Rational a, Rational b);
    static ToricDomain convex_pl(ConvexPath boundary);
    /// `P(a,b)`, `E(a,b)` or `PL[(x0,y0),(x1,y1),...]`, rationals as n or n/d.
    static ToricDomain parse(std::string_view text);

    const Variant& variant() const { return v_; }
    bool is_polydisk() const { return std::holds_alternative<Polydisk>(v_); }
    bool is_ellipsoid() const { return std::holds_alternative<Ellipsoid>(v_); }

    Rational x_intercept() const;
    Rational y_intercept() const;

    /// Vertices of the moment polygon, counterclockwise from the origin.
    std::vector<Point> polygon() const;

    std::string to_string() const;

private:
    explicit ToricDomain(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// A point of the domain maximizing beta*x + alpha*y, smallest x on ties.
Point support_point(const ToricDomain& d, const Direction& dir);

/// Action contributed by one unit of an edge in `dir`: the cross product of
/// (alpha, -beta) with its support point.
Rational unit_edge_action(const ToricDomain& d, const Direction& dir);

Rational action(const ToricDomain& d, const ConvexGenerator& g);

Rational volume(const ToricDomain& d);

/// P(a,1) sits inside E(bc,c) exactly when a + b <= bc.
bool trivial_inclusion(const Rational& a, const Rational& b, const Rational& c);

/// True when g uniquely minimizes the action among purely elliptic
/// generators of its index. Throws std::invalid_argument if g is not purely
/// elliptic.
bool is_minimal(const ToricDomain& d, const ConvexGenerator& g);

}  // namespace ech
