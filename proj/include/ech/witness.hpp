// Explicit generators: the maximal integral path under a convex path,
// generators with a prescribed lattice count, and the no-obstruction
// witnesses built from them.
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "ech/criterion.hpp"
#include "ech/domains.hpp"
#include "ech/generators.hpp"

namespace ech {

/// The convex integral path enclosing exactly the lattice points under
/// `path`. Requires every segment's supporting line to meet the lattice.
ConvexGenerator maximal_under(const ConvexPath& path);

/// Maximal generator for rows 0..n whose rightmost enclosed lattice point in
/// row k is row_max[k]. Throws if the rows do not come from a convex region.
ConvexGenerator maximal_from_rows(const std::vector<Int>& row_max);

/// Points strictly above e(x0,y0) inside the x0-by-y0 rectangle, in the
/// order used to grow the lattice count one point at a time.
std::vector<LatticePoint> strip_order(Int x0, Int y0);

/// Purely elliptic generator ending at (x0, 0) from (0, y0) that encloses
/// exactly L lattice points. L must lie between L(e(x0,y0)) and (x0+1)(y0+1).
ConvexGenerator generator_with_count(Int x0, Int y0, Int L);

struct ExampleA {
    Int d0 = 2;
    Rational epsilon;
    Int p = 3;
};

struct ExampleB {
    Int d0 = 2;
};

struct ExampleC {
    Int d0 = 2;
    Int p = 5;
    Int q = 4;
};

using WitnessVariant = std::variant<ExampleA, ExampleB, ExampleC>;

struct WitnessSpec {
    WitnessVariant variant;

    /// Throws std::invalid_argument when the variant's hypotheses fail.
    void validate() const;

    std::string name() const;  // "A", "B" or "C"
    Rational a() const;
    Int p() const;
    Int q() const;
    Int d0() const;
    Int x0() const;
    Int y0() const;
    Int target_index() const;  // I(e(p,q)^d0)
    /// Open interval for pc in which the witness is claimed.
    Rational pc_lower() const;
    Rational pc_upper() const;
    /// Midpoint of the interval, divided by p.
    Rational default_c() const;
};

struct WitnessResult {
    WitnessSpec spec;
    ConvexGenerator generator;
    Rational c;
    EmbeddingProblem problem;  // exact mode at c
    LeCheckResult check;
};

/// Builds the witness and checks it against e(p,q)^d0 with source P(a,1)
/// and target E(pc/q, c). c defaults to default_c().
WitnessResult build_witness(const WitnessSpec& spec, std::optional<Rational> c = std::nullopt);

}  // namespace ech
