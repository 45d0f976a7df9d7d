#include "ech/generators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ech {

bool shallower(const Direction& lhs, const Direction& rhs) {
    // beta_l / alpha_l < beta_r / alpha_r with alpha possibly 0 (infinite slope).
    return lhs.beta * rhs.alpha < rhs.beta * lhs.alpha;
}

std::pair<Direction, Int> primitive(Int dx, Int dy) {
    if (dx < 0 || dy < 0 || (dx == 0 && dy == 0))
        throw std::invalid_argument("edge displacement must be nonzero and point right/down");
    const Int g = std::gcd(dx, dy);
    return {Direction{dx / g, dy / g}, g};
}

namespace {

void validate_direction(const Direction& d) {
    if (d.alpha < 0 || d.beta < 0 || (d.alpha == 0 && d.beta == 0))
        throw std::invalid_argument("direction must be a nonzero pair of nonnegative integers");
    if (std::gcd(d.alpha, d.beta) != 1)
        throw std::invalid_argument("direction (" + std::to_string(d.alpha) + "," +
                                    std::to_string(d.beta) + ") is not coprime");
}

std::string direction_text(const Direction& d) {
    return "(" + std::to_string(d.alpha) + "," + std::to_string(d.beta) + ")";
}

void sort_by_slope(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return shallower(a.direction, b.direction); });
}

}  // namespace

ConvexGenerator ConvexGenerator::from_factors(const std::vector<EdgeFactor>& factors) {
    struct Tally {
        Int elliptic = 0;
        Int hyperbolic = 0;
    };
    std::vector<std::pair<Direction, Tally>> tally;
    for (const auto& f : factors) {
        validate_direction(f.direction);
        if (f.multiplicity < 1) throw std::invalid_argument("factor multiplicity must be positive");
        if (f.label == Label::h) {
            if (f.direction.is_axis())
                throw std::invalid_argument("h label forbidden on axis direction " + direction_text(f.direction));
            if (f.multiplicity != 1)
                throw std::invalid_argument("h" + direction_text(f.direction) + " repeated");
        }
        auto it = std::find_if(tally.begin(), tally.end(),
                               [&](const auto& t) { return t.first == f.direction; });
        if (it == tally.end()) {
            tally.emplace_back(f.direction, Tally{});
            it = std::prev(tally.end());
        }
        if (f.label == Label::h) {
            if (it->second.hyperbolic > 0)
                throw std::invalid_argument("h" + direction_text(f.direction) + " repeated");
            it->second.hyperbolic = 1;
        } else {
            it->second.elliptic += f.multiplicity;
        }
    }
    std::vector<Edge> edges;
    edges.reserve(tally.size());
    for (const auto& [dir, t] : tally)
        edges.push_back(Edge{dir, t.elliptic + t.hyperbolic, t.hyperbolic > 0});
    return from_edges(std::move(edges));
}

ConvexGenerator ConvexGenerator::from_edges(std::vector<Edge> edges) {
    if (edges.empty()) throw std::invalid_argument("empty generator");
    for (const auto& e : edges) {
        validate_direction(e.direction);
        if (e.multiplicity < 1) throw std::invalid_argument("edge multiplicity must be positive");
        if (e.hyperbolic && e.direction.is_axis())
            throw std::invalid_argument("h label forbidden on axis direction " + direction_text(e.direction));
    }
    sort_by_slope(edges);
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].direction == edges[i - 1].direction)
            throw std::invalid_argument("two edges share direction " + direction_text(edges[i].direction));
    return ConvexGenerator(std::move(edges));
}

ConvexGenerator ConvexGenerator::from_vertices(const std::vector<LatticePoint>& vertices) {
    if (vertices.size() < 2) throw std::invalid_argument("a path needs at least two vertices");
    if (vertices.front().x != 0) throw std::invalid_argument("path must start on the y-axis");
    if (vertices.back().y != 0) throw std::invalid_argument("path must end on the x-axis");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const Int dx = vertices[i].x - vertices[i - 1].x;
        const Int dy = vertices[i - 1].y - vertices[i].y;
        if (dx == 0 && dy == 0) continue;
        const auto [dir, mult] = primitive(dx, dy);
        if (!edges.empty()) {
            if (edges.back().direction == dir) {
                edges.back().multiplicity += mult;
                continue;
            }
            if (!shallower(edges.back().direction, dir))
                throw std::invalid_argument("vertices do not trace a concave path");
        }
        edges.push_back(Edge{dir, mult, false});
    }
    return from_edges(std::move(edges));
}

std::vector<EdgeFactor> ConvexGenerator::factors() const {
    std::vector<EdgeFactor> out;
    for (const auto& e : edges_) {
        if (e.elliptic_multiplicity() > 0) out.push_back({e.direction, e.elliptic_multiplicity(), Label::e});
        if (e.hyperbolic) out.push_back({e.direction, 1, Label::h});
    }
    return out;
}

Int ConvexGenerator::x() const {
    Int s = 0;
    for (const auto& e : edges_) s += e.dx();
    return s;
}

Int ConvexGenerator::y() const {
    Int s = 0;
    for (const auto& e : edges_) s += e.dy();
    return s;
}

Int ConvexGenerator::total_multiplicity() const {
    Int s = 0;
    for (const auto& e : edges_) s += e.multiplicity;
    return s;
}

Int ConvexGenerator::hyperbolic_count() const {
    return std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.hyperbolic; });
}

Int ConvexGenerator::elliptic_multiplicity(const Direction& dir) const {
    for (const auto& e : edges_)
        if (e.direction == dir) return e.elliptic_multiplicity();
    return 0;
}

bool ConvexGenerator::has_hyperbolic(const Direction& dir) const {
    for (const auto& e : edges_)
        if (e.direction == dir) return e.hyperbolic;
    return false;
}

std::string ConvexGenerator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors()) {
        if (!first) os << ' ';
        first = false;
        os << (f.label == Label::e ? 'e' : 'h') << direction_text(f.direction);
        if (f.multiplicity != 1) os << '^' << f.multiplicity;
    }
    return os.str();
}

bool operator<(const ConvexGenerator& a, const ConvexGenerator& b) {
    auto key = [](const Edge& e) {
        return std::make_tuple(e.direction.alpha, e.direction.beta, e.multiplicity, e.hyperbolic);
    };
    return std::lexicographical_compare(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                                        [&](const Edge& l, const Edge& r) { return key(l) < key(r); });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class GeneratorParser {
public:
    explicit GeneratorParser(std::string_view text) : s_(text) {}

    std::vector<EdgeFactor> parse() {
        std::vector<EdgeFactor> factors;
        skip_ws();
        while (pos_ < s_.size()) {
            factors.push_back(term());
            skip_ws();
        }
        if (factors.empty()) fail("empty generator");
        return factors;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("generator syntax error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Int integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected nonnegative integer");
        if (pos_ - start > 15) fail("integer too large");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    EdgeFactor term() {
        const char tag = s_[pos_];
        if (tag != 'e' && tag != 'h') fail("expected 'e' or 'h'");
        ++pos_;
        expect('(');
        const Int a = integer();
        expect(',');
        const Int b = integer();
        expect(')');
        Int mult = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            mult = integer();
        }
        return EdgeFactor{Direction{a, b}, mult, tag == 'e' ? Label::e : Label::h};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ConvexGenerator parse_generator(std::string_view text) {
    return ConvexGenerator::from_factors(GeneratorParser(text).parse());
}

std::string format_generator(const ConvexGenerator& g) { return g.to_string(); }

// ---------------------------------------------------------------------------
// Geometry

PathProfile profile(const ConvexGenerator& g) {
    PathProfile p;
    p.x = g.x();
    p.y = g.y();
    p.m = g.total_multiplicity();
    p.h = g.hyperbolic_count();
    LatticePoint cur{0, p.y};
    p.vertices.push_back(cur);
    for (const auto& e : g.edges()) {
        cur.x += e.dx();
        cur.y -= e.dy();
        p.vertices.push_back(cur);
    }
    return p;
}

std::vector<Int> row_maxima(const ConvexGenerator& g) {
    const auto vs = profile(g).vertices;
    const Int height = vs.front().y;
    std::vector<Int> rows(static_cast<std::size_t>(height + 1), 0);
    for (Int r = 0; r <= height; ++r) {
        Int best = 0;
        for (std::size_t i = 1; i < vs.size(); ++i) {
            const auto& a = vs[i - 1];
            const auto& b = vs[i];
            if (r > a.y || r < b.y) continue;
            if (a.y == b.y) {
                best = std::max(best, b.x);
            } else {
                // x on the segment at height r, rounded down.
                const Int num = a.x * (a.y - b.y) + (a.y - r) * (b.x - a.x);
                best = std::max(best, num / (a.y - b.y));
            }
        }
        rows[static_cast<std::size_t>(r)] = best;
    }
    return rows;
}

Int lattice_count(const ConvexGenerator& g) {
    Int total = 0;
    for (Int xm : row_maxima(g)) total += xm + 1;
    return total;
}

Int ech_index(const ConvexGenerator& g) { return 2 * (lattice_count(g) - 1) - g.hyperbolic_count(); }

// ---------------------------------------------------------------------------
// Closed forms

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void validate_shape(const IndexShape& s) {
    switch (s.family) {
        case IndexFamily::axis_rectangle:
            require(s.k >= 0 && s.m >= 0 && s.k + s.m >= 1, "axis rectangle needs k, m >= 0 and k + m >= 1");
            break;
        case IndexFamily::stair:
            require(s.k >= 0 && s.m >= 1, "stair needs k >= 0 and m >= 1");
            break;
        case IndexFamily::segment:
            require(s.k >= 0 && s.m >= 0 && s.k + s.m >= 1, "segment needs k, m >= 0 and k + m >= 1");
            break;
        case IndexFamily::trapezoid:
            require(s.k >= 0 && s.m >= 0 && s.d >= 1, "trapezoid needs k, m >= 0 and d >= 1");
            break;
        case IndexFamily::power:
            require(s.p >= 1 && s.q >= 1 && s.d >= 1, "power needs p, q, d >= 1");
            require(std::gcd(s.p, s.q) == 1, "power needs gcd(p, q) = 1");
            break;
    }
}

}  // namespace

Int index_closed_form(const IndexShape& s) {
    validate_shape(s);
    switch (s.family) {
        case IndexFamily::axis_rectangle: return 2 * (s.k * s.m + s.k + s.m);
        case IndexFamily::stair: return 2 * (s.k * s.m + s.m);
        case IndexFamily::segment: return s.k * s.m + s.k + s.m + std::gcd(s.k, s.m);
        case IndexFamily::trapezoid: {
            const Int w = 2 * s.k + s.m;
            return w * s.d * s.d + (w + 2) * s.d;
        }
        case IndexFamily::power: return s.p * s.q * s.d * s.d + (s.p + s.q + 1) * s.d;
    }
    return 0;
}

ConvexGenerator shape_generator(const IndexShape& s) {
    validate_shape(s);
    std::vector<EdgeFactor> f;
    auto add = [&](Int dx, Int dy) {
        if (dx == 0 && dy == 0) return;
        const auto [dir, mult] = primitive(dx, dy);
        f.push_back({dir, mult, Label::e});
    };
    switch (s.family) {
        case IndexFamily::axis_rectangle:
            add(s.k, 0);
            add(0, s.m);
            break;
        case IndexFamily::stair:
            add(s.k, 1);
            add(0, s.m - 1);
            break;
        case IndexFamily::segment:
            add(s.k, s.m);
            break;
        case IndexFamily::trapezoid:
            add(s.k * s.d, 0);
            add(s.m * s.d, s.d);
            break;
        case IndexFamily::power:
            add(s.p * s.d, s.q * s.d);
            break;
    }
    return ConvexGenerator::from_factors(f);
}

// ---------------------------------------------------------------------------
// Products and decompositions

bool share_hyperbolic_orbit(const ConvexGenerator& g1, const ConvexGenerator& g2) {
    for (const auto& e : g1.edges())
        if (e.hyperbolic && g2.has_hyperbolic(e.direction)) return true;
    return false;
}

bool share_elliptic_orbit(const ConvexGenerator& g1, const ConvexGenerator& g2) {
    for (const auto& e : g1.edges())
        if (e.elliptic_multiplicity() > 0 && g2.elliptic_multiplicity(e.direction) > 0) return true;
    return false;
}

ConvexGenerator product(const ConvexGenerator& g1, const ConvexGenerator& g2) {
    if (share_hyperbolic_orbit(g1, g2)) throw std::invalid_argument("factors share a hyperbolic orbit");
    auto f = g1.factors();
    const auto f2 = g2.factors();
    f.insert(f.end(), f2.begin(), f2.end());
    return ConvexGenerator::from_factors(f);
}

namespace {

// Walks all compositions of `total` into `parts` nonnegative integers, first
// part largest first.
bool for_each_split(Int total, int parts, std::vector<Int>& acc,
                    const std::function<bool(const std::vector<Int>&)>& visit) {
    if (parts == 1) {
        acc.push_back(total);
        const bool go = visit(acc);
        acc.pop_back();
        return go;
    }
    for (Int first = total; first >= 0; --first) {
        acc.push_back(first);
        const bool go = for_each_split(total - first, parts - 1, acc, visit);
        acc.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace

void for_each_decomposition(const ConvexGenerator& g, int n,
                            const std::function<bool(const Decomposition&)>& visit) {
    if (n < 1) throw std::invalid_argument("decomposition needs n >= 1");
    if (n > g.total_multiplicity()) return;
    const auto& edges = g.edges();
    // parts[i][j] = (elliptic multiplicity, carries h) for part i, edge j.
    std::vector<std::vector<std::pair<Int, bool>>> parts(static_cast<std::size_t>(n),
                                                         std::vector<std::pair<Int, bool>>(edges.size()));

    std::function<bool(std::size_t)> walk_edge;
    auto emit = [&]() -> bool {
        Decomposition out;
        out.reserve(parts.size());
        for (const auto& part : parts) {
            std::vector<Edge> pe;
            for (std::size_t j = 0; j < edges.size(); ++j) {
                const auto [em, hyp] = part[j];
                if (em == 0 && !hyp) continue;
                pe.push_back(Edge{edges[j].direction, em + (hyp ? 1 : 0), hyp});
            }
            if (pe.empty()) return true;
            out.push_back(ConvexGenerator::from_edges(std::move(pe)));
        }
        return visit(out);
    };
    walk_edge = [&](std::size_t j) -> bool {
        if (j == edges.size()) return emit();
        std::vector<Int> acc;
        return for_each_split(edges[j].elliptic_multiplicity(), n, acc, [&](const std::vector<Int>& split) {
            for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)][j] = {split[static_cast<std::size_t>(i)], false};
            if (!edges[j].hyperbolic) return walk_edge(j + 1);
            for (int owner = 0; owner < n; ++owner) {
                parts[static_cast<std::size_t>(owner)][j].second = true;
                const bool go = walk_edge(j + 1);
                parts[static_cast<std::size_t>(owner)][j].second = false;
                if (!go) return false;
            }
            return true;
        });
    };
    walk_edge(0);
}

std::vector<Decomposition> decompositions(const ConvexGenerator& g, int n) {
    std::vector<Decomposition> out;
    for_each_decomposition(g, n, [&](const Decomposition& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

}  // namespace ech
