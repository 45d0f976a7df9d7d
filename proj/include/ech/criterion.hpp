// The ECH factorization criterion for P(a,1) -> E(pc/q, c), run exhaustively
// against the minimal generator e(p,q)^d0.
//
// A run either finds a generator with matched factorizations satisfying all
// three conditions (so the criterion cannot obstruct), or proves that none
// exists within the finite search space cut out by the index and action
// constraints.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ech/domains.hpp"
#include "ech/enumerate.hpp"
#include "ech/generators.hpp"
#include "ech/rational.hpp"

namespace ech {

enum class CMode {
    exact,            // a fixed c
    supremum_strict,  // every c with pc < qa + p at once
};

struct EmbeddingProblem {
    Rational a{1};
    Int p = 1;
    Int q = 2;
    Int d0 = 1;
    CMode mode = CMode::supremum_strict;
    Rational c{1};  // used in exact mode only

    static EmbeddingProblem supremum(Rational a, Int p, Int d0, Int q = 2);
    static EmbeddingProblem exact(Rational a, Int p, Int d0, Rational c, Int q = 2);

    /// Throws std::invalid_argument unless a >= 1, p, q >= 1 coprime, d0 >= 1
    /// and c > 0.
    void validate() const;

    ToricDomain source() const;
    /// E(pc/q, c); exact mode only.
    ToricDomain target() const;
    /// e(p,q)^d.
    ConvexGenerator minimal_generator(Int d) const;
    /// Action allowed for a factor matched with e(p,q)^d: <= pcd in exact
    /// mode, < (qa+p)d in supremum mode.
    ActionBound action_bound(Int d) const;
    /// (qa + p) / p: the c at which P(a,1) starts to sit inside E(pc/q, c).
    Rational inclusion_threshold() const;
    /// True when the embedding is not a plain inclusion (pc < qa + p).
    bool nontrivial() const;

    std::string describe() const;
};

struct LeCheckResult {
    bool index_ok = false;
    bool action_ok = false;
    bool genus_ok = false;
    Int index_lhs = 0;
    Int index_rhs = 0;
    Rational action_lhs;
    Rational action_rhs;
    bool action_strict = false;
    Rational genus_lhs;  // x + y - h/2
    Rational genus_rhs;  // x' + y' + m' - 1

    bool ok() const { return index_ok && action_ok && genus_ok; }
};

/// g <= gp between the given domains. Throws std::invalid_argument if gp is
/// not purely elliptic.
LeCheckResult le_check(const ConvexGenerator& g, const ConvexGenerator& gp, const ToricDomain& source,
                       const ToricDomain& target);
/// Same, with the target action of gp supplied as a bound.
LeCheckResult le_check(const ConvexGenerator& g, const ConvexGenerator& gp, const ToricDomain& source,
                       const ActionBound& target_action);
/// g <= e(p,q)^d for the problem.
LeCheckResult le_check(const ConvexGenerator& g, Int d, const EmbeddingProblem& prob);

/// Endpoint constraints satisfied by every g <= e(p,q)^d.
struct ProfileConstraints {
    Int d = 1;
    Int genus_floor = 0;                // x + y >= genus_floor
    Int index_target = 0;               // 2(xy + x + y) >= index_target
    std::optional<Int> y_limit;         // y < y_limit
    bool half_integer_inequalities = false;
    Rational a;
    Int p = 1;

    /// Returns an empty string when (x, y) survives, else the violated rule.
    std::string refutation(Int x, Int y) const;
    bool admits(Int x, Int y) const { return refutation(x, y).empty(); }
    /// Largest x that can survive at height y, if bounded.
    std::optional<Int> x_max(Int y) const;
};

ProfileConstraints prune_candidates(const EmbeddingProblem& prob, Int d);

struct Factorization {
    std::vector<ConvexGenerator> parts;
    std::vector<Int> d_parts;

    Int n() const { return static_cast<Int>(parts.size()); }
    /// Product of the parts; throws if two parts share a hyperbolic orbit.
    ConvexGenerator product() const;
};

struct FactorizationReport {
    bool well_formed = false;     // parts pairwise share no hyperbolic orbit, d_i sum to d0
    bool le_ok = false;           // every part <= e(p,q)^d_i
    bool distinct_ok = false;     // no elliptic orbit shared between parts
    bool subsets_ok = false;      // index matches over every subset
    std::vector<LeCheckResult> le;
    std::string failure;          // first failing check, human readable

    bool ok() const { return well_formed && le_ok && distinct_ok && subsets_ok; }
};

FactorizationReport factorization_check(const Factorization& fact, const EmbeddingProblem& prob);

struct SearchOptions {
    bool prune = true;
    std::uint64_t node_limit = 100'000'000;
    Int n_min = 1;
    std::optional<Int> n_max;  // defaults to d0
};

struct SearchStats {
    std::uint64_t nodes = 0;           // enumeration nodes visited
    std::uint64_t candidates = 0;      // factors g <= e(p,q)^d found over all d
    std::uint64_t profiles_pruned = 0; // endpoints rejected by the constraints
    std::uint64_t checked = 0;         // assembled factorizations examined
    std::vector<std::uint64_t> candidates_by_d;  // index d - 1
};

struct SearchResult {
    std::vector<Factorization> factorizations;
    SearchStats stats;
    bool truncated = false;
};

/// Every normalized factorization passing all three conditions, sorted by
/// n, then by parts. Factor order is normalized (d_i nonincreasing, equal
/// d_i ordered by candidate position), so each certificate appears once.
SearchResult criterion_search(const EmbeddingProblem& prob, const SearchOptions& opts = {});

/// All g <= e(p,q)^d for one d, in enumeration order.
std::vector<ConvexGenerator> factor_candidates(const EmbeddingProblem& prob, Int d, const SearchOptions& opts,
                                               SearchStats* stats = nullptr, bool* truncated = nullptr);

enum class Outcome { obstructed, not_obstructed, inconclusive };

struct ObstructionReport {
    EmbeddingProblem problem;
    Outcome outcome = Outcome::inconclusive;
    std::optional<Rational> bound;        // c >= bound, supremum mode only
    std::optional<Factorization> witness;
    std::string reason;
    std::string note;
    SearchStats stats;
};

/// Obstructed when the full search is empty (q = 2 only), NotObstructed
/// otherwise. The reported witness is e(p,q)^d0 itself when it qualifies,
/// else the first factorization in search order.
ObstructionReport obstruct(const EmbeddingProblem& prob, const SearchOptions& opts = {});

std::string to_string(Outcome o);

}  // namespace ech
