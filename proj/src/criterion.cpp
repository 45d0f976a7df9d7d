#include "ech/criterion.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ech {

EmbeddingProblem EmbeddingProblem::supremum(Rational a, Int p, Int d0, Int q) {
    EmbeddingProblem prob;
    prob.a = std::move(a);
    prob.p = p;
    prob.q = q;
    prob.d0 = d0;
    prob.mode = CMode::supremum_strict;
    prob.validate();
    return prob;
}

EmbeddingProblem EmbeddingProblem::exact(Rational a, Int p, Int d0, Rational c, Int q) {
    EmbeddingProblem prob;
    prob.a = std::move(a);
    prob.p = p;
    prob.q = q;
    prob.d0 = d0;
    prob.mode = CMode::exact;
    prob.c = std::move(c);
    prob.validate();
    return prob;
}

void EmbeddingProblem::validate() const {
    if (a < Rational(1)) throw std::invalid_argument("a must be at least 1");
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
    if (d0 < 1) throw std::invalid_argument("d0 must be positive");
    if (mode == CMode::exact && c.sign() <= 0) throw std::invalid_argument("c must be positive");
}

ToricDomain EmbeddingProblem::source() const { return ToricDomain::polydisk(a, Rational(1)); }

ToricDomain EmbeddingProblem::target() const {
    if (mode != CMode::exact) throw std::logic_error("target ellipsoid needs an exact c");
    return ToricDomain::ellipsoid(Rational(p) * c / Rational(q), c);
}

ConvexGenerator EmbeddingProblem::minimal_generator(Int d) const {
    return ConvexGenerator::from_factors({EdgeFactor{Direction{p, q}, d, Label::e}});
}

ActionBound EmbeddingProblem::action_bound(Int d) const {
    if (mode == CMode::exact) return {Rational(p) * c * Rational(d), false};
    return {(Rational(q) * a + Rational(p)) * Rational(d), true};
}

Rational EmbeddingProblem::inclusion_threshold() const { return (Rational(q) * a + Rational(p)) / Rational(p); }

bool EmbeddingProblem::nontrivial() const {
    if (mode == CMode::supremum_strict) return true;
    return Rational(p) * c < Rational(q) * a + Rational(p);
}

std::string EmbeddingProblem::describe() const {
    std::ostringstream os;
    os << "P(" << a << ",1) -> E(" << p << "c/" << q << ",c) against e(" << p << "," << q << ")^" << d0;
    if (mode == CMode::exact)
        os << " at c = " << c;
    else
        os << " for all c < " << inclusion_threshold();
    return os.str();
}

// ---------------------------------------------------------------------------
// The relation g <= gp

namespace {

void fill_index_and_genus(LeCheckResult& r, const ConvexGenerator& g, const ConvexGenerator& gp) {
    if (!gp.purely_elliptic()) throw std::invalid_argument("right-hand generator must be purely elliptic");
    r.index_lhs = ech_index(g);
    r.index_rhs = ech_index(gp);
    r.index_ok = r.index_lhs == r.index_rhs;
    r.genus_lhs = Rational(g.x() + g.y()) - Rational(g.hyperbolic_count(), 2);
    r.genus_rhs = Rational(gp.x() + gp.y() + gp.total_multiplicity() - 1);
    r.genus_ok = r.genus_lhs >= r.genus_rhs;
}

}  // namespace

LeCheckResult le_check(const ConvexGenerator& g, const ConvexGenerator& gp, const ToricDomain& source,
                       const ActionBound& target_action) {
    LeCheckResult r;
    fill_index_and_genus(r, g, gp);
    r.action_lhs = action(source, g);
    r.action_rhs = target_action.value;
    r.action_strict = target_action.strict;
    r.action_ok = target_action.admits(r.action_lhs);
    return r;
}

LeCheckResult le_check(const ConvexGenerator& g, const ConvexGenerator& gp, const ToricDomain& source,
                       const ToricDomain& target) {
    if (!gp.purely_elliptic()) throw std::invalid_argument("right-hand generator must be purely elliptic");
    return le_check(g, gp, source, ActionBound{action(target, gp), false});
}

LeCheckResult le_check(const ConvexGenerator& g, Int d, const EmbeddingProblem& prob) {
    return le_check(g, prob.minimal_generator(d), prob.source(), prob.action_bound(d));
}

// ---------------------------------------------------------------------------
// Endpoint pruning

std::string ProfileConstraints::refutation(Int x, Int y) const {
    if (x + y < genus_floor) return "genus: x + y below x' + y' + m' - 1";
    if (2 * (x * y + x + y) < index_target) return "index: exceeds that of e(1,0)^x e(0,1)^y";
    if (y_limit && y >= *y_limit) return "height: y >= qd";
    if (half_integer_inequalities) {
        const Rational room = a * Rational(2 * d - y);
        if (!(Rational(x - p * d) < room)) return "x slope: a <= (x - pd)/(2d - y)";
        if (!(Rational(3 * d - 1 - y) < room)) return "y slope: a <= (3d - 1 - y)/(2d - y)";
    }
    return {};
}

std::optional<Int> ProfileConstraints::x_max(Int y) const {
    if (!half_integer_inequalities) return std::nullopt;
    // x - pd < a(2d - y)
    return (Rational(p * d) + a * Rational(2 * d - y)).ceil() - 1;
}

ProfileConstraints prune_candidates(const EmbeddingProblem& prob, Int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    ProfileConstraints pc;
    pc.d = d;
    pc.a = prob.a;
    pc.p = prob.p;
    pc.genus_floor = (prob.p + prob.q + 1) * d - 1;
    pc.index_target = ech_index(prob.minimal_generator(d));
    if (prob.nontrivial()) {
        pc.y_limit = prob.q * d;
        pc.half_integer_inequalities = prob.q == 2;
    }
    return pc;
}

// ---------------------------------------------------------------------------
// Factorizations

ConvexGenerator Factorization::product() const {
    if (parts.empty()) throw std::invalid_argument("empty factorization");
    ConvexGenerator acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = ech::product(acc, parts[i]);
    return acc;
}

namespace {

std::string part_name(std::size_t i) { return "part " + std::to_string(i + 1); }

}  // namespace

FactorizationReport factorization_check(const Factorization& fact, const EmbeddingProblem& prob) {
    FactorizationReport rep;
    const std::size_t n = fact.parts.size();
    if (n == 0 || fact.d_parts.size() != n) {
        rep.failure = "parts and d_parts must be nonempty and of equal length";
        return rep;
    }
    Int dsum = 0;
    for (const Int d : fact.d_parts) {
        if (d < 1) {
            rep.failure = "every d_i must be positive";
            return rep;
        }
        dsum += d;
    }
    if (dsum != prob.d0) {
        rep.failure = "d_i sum to " + std::to_string(dsum) + ", not d0 = " + std::to_string(prob.d0);
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (share_hyperbolic_orbit(fact.parts[i], fact.parts[j])) {
                rep.failure = part_name(i) + " and " + part_name(j) + " share a hyperbolic orbit";
                return rep;
            }
    rep.well_formed = true;

    rep.le_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        rep.le.push_back(le_check(fact.parts[i], fact.d_parts[i], prob));
        if (!rep.le.back().ok() && rep.le_ok) {
            rep.le_ok = false;
            rep.failure = "le: " + part_name(i) + " is not <= e(p,q)^" + std::to_string(fact.d_parts[i]);
        }
    }

    rep.distinct_ok = true;
    for (std::size_t i = 0; i < n && rep.distinct_ok; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = fact.parts[i] == fact.parts[j] && fact.d_parts[i] == fact.d_parts[j];
            if (!same && share_elliptic_orbit(fact.parts[i], fact.parts[j])) {
                rep.distinct_ok = false;
                if (rep.failure.empty())
                    rep.failure = "distinct: " + part_name(i) + " and " + part_name(j) + " share an elliptic orbit";
                break;
            }
        }

    rep.subsets_ok = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::optional<ConvexGenerator> prod;
        Int dS = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            prod = prod ? product(*prod, fact.parts[i]) : fact.parts[i];
            dS += fact.d_parts[i];
        }
        const Int lhs = ech_index(*prod);
        const Int rhs = ech_index(prob.minimal_generator(dS));
        if (std::popcount(mask) == 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(mask));
            if ((lhs == rhs) != rep.le[i].index_ok) throw std::logic_error("singleton subset disagrees with the le check");
        }
        if (lhs != rhs) {
            rep.subsets_ok = false;
            if (rep.failure.empty())
                rep.failure = "subsets: index " + std::to_string(lhs) + " != " + std::to_string(rhs);
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Search

std::vector<ConvexGenerator> factor_candidates(const EmbeddingProblem& prob, Int d, const SearchOptions& opts,
                                               SearchStats* stats, bool* truncated) {
    const ProfileConstraints pc = prune_candidates(prob, d);
    EnumerationRequest req;
    req.index = pc.index_target;
    req.bound = prob.action_bound(d);
    req.labels = LabelMode::all;
    req.node_limit = opts.node_limit;
    std::uint64_t rejected = 0;
    if (opts.prune) {
        if (pc.y_limit) req.filter.y_max = *pc.y_limit - 1;
        req.filter.x_max = [&pc](Int y) { return pc.x_max(y); };
        req.filter.admit = [&pc, &rejected](Int x, Int y) {
            if (pc.admits(x, y)) return true;
            ++rejected;
            return false;
        };
    }
    const ConvexGenerator minimal = prob.minimal_generator(d);
    const ToricDomain source = prob.source();
    const ActionBound bound = prob.action_bound(d);
    std::vector<ConvexGenerator> out;
    const auto es = for_each_generator(source, req, [&](const ConvexGenerator& g) {
        if (le_check(g, minimal, source, bound).ok()) out.push_back(g);
        return true;
    });
    if (stats) {
        stats->nodes += es.nodes;
        stats->profiles_pruned += rejected;
        stats->candidates += out.size();
    }
    if (truncated && es.truncated) *truncated = true;
    return out;
}

namespace {

// Nonincreasing partitions of `total` into exactly `parts` positive parts.
void partitions(Int total, Int parts, Int cap, std::vector<Int>& acc, std::vector<std::vector<Int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(acc);
        return;
    }
    for (Int v = std::min(cap, total - (parts - 1)); v >= 1; --v) {
        if (v * parts < total) break;
        acc.push_back(v);
        partitions(total - v, parts - 1, v, acc, out);
        acc.pop_back();
    }
}

class Assembler {
public:
    Assembler(const EmbeddingProblem& prob, const std::vector<std::vector<ConvexGenerator>>& cands,
              SearchResult& result)
        : prob_(prob), cands_(cands), result_(result) {}

    void run(const std::vector<Int>& ds) {
        ds_ = ds;
        chosen_.clear();
        idx_.clear();
        subset_products_.assign(1, std::nullopt);
        subset_d_.assign(1, 0);
        extend();
    }

private:
    void extend() {
        const std::size_t j = chosen_.size();
        if (j == ds_.size()) {
            ++result_.stats.checked;
            Factorization f{chosen_, ds_};
            const auto rep = factorization_check(f, prob_);
            if (!rep.ok()) throw std::logic_error("assembled factorization failed its final check: " + rep.failure);
            result_.factorizations.push_back(std::move(f));
            return;
        }
        const Int d = ds_[j];
        const auto& pool = cands_[static_cast<std::size_t>(d - 1)];
        std::size_t start = 0;
        if (j > 0 && ds_[j - 1] == d) start = idx_[j - 1];
        for (std::size_t k = start; k < pool.size(); ++k) {
            const ConvexGenerator& g = pool[k];
            if (!compatible(g, d)) continue;
            if (!extend_subsets(g, d)) {
                ++result_.stats.checked;
                continue;
            }
            chosen_.push_back(g);
            idx_.push_back(k);
            extend();
            chosen_.pop_back();
            idx_.pop_back();
            subset_products_.resize(subset_products_.size() / 2);
            subset_d_.resize(subset_d_.size() / 2);
        }
    }

    bool compatible(const ConvexGenerator& g, Int d) const {
        for (std::size_t i = 0; i < chosen_.size(); ++i) {
            if (share_hyperbolic_orbit(chosen_[i], g)) return false;
            const bool same = chosen_[i] == g && ds_[i] == d;
            if (!same && share_elliptic_orbit(chosen_[i], g)) return false;
        }
        return true;
    }

    // Appends the subsets containing the new part; fails if one of them
    // breaks the index condition.
    bool extend_subsets(const ConvexGenerator& g, Int d) {
        const std::size_t half = subset_products_.size();
        std::vector<std::optional<ConvexGenerator>> prods;
        std::vector<Int> dsum;
        prods.reserve(half);
        for (std::size_t s = 0; s < half; ++s) {
            ConvexGenerator prod = subset_products_[s] ? product(*subset_products_[s], g) : g;
            const Int dS = subset_d_[s] + d;
            if (ech_index(prod) != ech_index(prob_.minimal_generator(dS))) return false;
            prods.emplace_back(std::move(prod));
            dsum.push_back(dS);
        }
        subset_products_.insert(subset_products_.end(), prods.begin(), prods.end());
        subset_d_.insert(subset_d_.end(), dsum.begin(), dsum.end());
        return true;
    }

    const EmbeddingProblem& prob_;
    const std::vector<std::vector<ConvexGenerator>>& cands_;
    SearchResult& result_;
    std::vector<Int> ds_;
    std::vector<ConvexGenerator> chosen_;
    std::vector<std::size_t> idx_;
    std::vector<std::optional<ConvexGenerator>> subset_products_;
    std::vector<Int> subset_d_;
};

bool factorization_less(const Factorization& l, const Factorization& r) {
    if (l.n() != r.n()) return l.n() < r.n();
    if (l.d_parts != r.d_parts) return l.d_parts > r.d_parts;
    return std::lexicographical_compare(l.parts.begin(), l.parts.end(), r.parts.begin(), r.parts.end());
}

}  // namespace

SearchResult criterion_search(const EmbeddingProblem& prob, const SearchOptions& opts) {
    prob.validate();
    const Int n_max = opts.n_max.value_or(prob.d0);
    if (opts.n_min < 1 || n_max > prob.d0 || opts.n_min > n_max)
        throw std::invalid_argument("factor count range must satisfy 1 <= n_min <= n_max <= d0");
    SearchResult result;

    // Largest part needed: with n parts summing to d0 each part is at most
    // d0 - n + 1.
    const Int d_top = prob.d0 - opts.n_min + 1;
    const Int d_bottom = (prob.d0 + n_max - 1) / n_max;
    std::vector<std::vector<ConvexGenerator>> cands(static_cast<std::size_t>(prob.d0));
    result.stats.candidates_by_d.assign(static_cast<std::size_t>(prob.d0), 0);
    for (Int d = 1; d <= d_top; ++d) {
        SearchOptions sub = opts;
        if (opts.node_limit != 0) {
            if (result.stats.nodes >= opts.node_limit) {
                result.truncated = true;
                break;
            }
            sub.node_limit = opts.node_limit - result.stats.nodes;
        }
        // Parts smaller than d0/n_max only occur alongside larger ones, so
        // every d up to d_top is needed once n_max > 1.
        if (n_max == 1 && d < d_bottom) continue;
        cands[static_cast<std::size_t>(d - 1)] = factor_candidates(prob, d, sub, &result.stats, &result.truncated);
        result.stats.candidates_by_d[static_cast<std::size_t>(d - 1)] = cands[static_cast<std::size_t>(d - 1)].size();
        if (result.truncated) break;
    }
    if (result.truncated) return result;

    Assembler assembler(prob, cands, result);
    for (Int n = opts.n_min; n <= n_max; ++n) {
        std::vector<std::vector<Int>> parts;
        std::vector<Int> acc;
        partitions(prob.d0, n, prob.d0, acc, parts);
        for (const auto& ds : parts) assembler.run(ds);
    }
    std::sort(result.factorizations.begin(), result.factorizations.end(), factorization_less);
    return result;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::obstructed: return "obstructed";
        case Outcome::not_obstructed: return "not_obstructed";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "unknown";
}

ObstructionReport obstruct(const EmbeddingProblem& prob, const SearchOptions& opts) {
    ObstructionReport rep;
    rep.problem = prob;
    auto res = criterion_search(prob, opts);
    rep.stats = res.stats;
    if (prob.mode == CMode::supremum_strict)
        rep.note = "action condition checked as strict < (qa+p)d_i, which dominates <= pc d_i for every c with "
                   "pc < qa + p";
    else
        rep.note = "action condition checked as <= pc d_i at the given c";
    if (res.truncated) {
        rep.outcome = Outcome::inconclusive;
        rep.reason = "node limit of " + std::to_string(opts.node_limit) + " reached";
        return rep;
    }
    if (!res.factorizations.empty()) {
        rep.outcome = Outcome::not_obstructed;
        // Prefer Lambda = e(p,q)^d0 itself when it qualifies.
        const ConvexGenerator minimal = prob.minimal_generator(prob.d0);
        auto it = std::find_if(res.factorizations.begin(), res.factorizations.end(),
                               [&](const Factorization& f) { return f.n() == 1 && f.parts.front() == minimal; });
        if (it == res.factorizations.end()) it = res.factorizations.begin();
        rep.witness = std::move(*it);
        return rep;
    }
    const bool full_range = opts.n_min == 1 && opts.n_max.value_or(prob.d0) == prob.d0;
    if (!full_range) {
        rep.outcome = Outcome::inconclusive;
        rep.reason = "search restricted to part of the factor count range";
        return rep;
    }
    if (prob.q != 2) {
        rep.outcome = Outcome::inconclusive;
        rep.reason = "search empty, but minimality of e(p,q)^d0 is only established for q = 2";
        return rep;
    }
    rep.outcome = Outcome::obstructed;
    if (prob.mode == CMode::supremum_strict) rep.bound = prob.inclusion_threshold();
    return rep;
}

}  // namespace ech
