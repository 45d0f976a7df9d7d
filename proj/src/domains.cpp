#include "ech/domains.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "ech/enumerate.hpp"

namespace ech {

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    return ax * by - ay * bx;
}

// Line through two rational points as A x + B y = C with coprime integer A, B.
bool line_hits_lattice(const Point& p, const Point& q) {
    const Rational dx = q.x - p.x;
    const Rational dy = q.y - p.y;
    // Normal (dy, -dx) scaled to integers.
    mpz_class scale;
    mpz_lcm(scale.get_mpz_t(), dx.den().get_mpz_t(), dy.den().get_mpz_t());
    mpz_class a = (dy * Rational(mpq_class(scale))).num();
    mpz_class b = -(dx * Rational(mpq_class(scale))).num();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    const Rational c = Rational(mpq_class(a)) * p.x + Rational(mpq_class(b)) * p.y;
    // a, b coprime: the line holds a lattice point iff c is an integer.
    return c.is_integer();
}

}  // namespace

ConvexPath::ConvexPath(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw std::invalid_argument("convex path needs at least two vertices");
    if (vertices_.front().x != 0) throw std::invalid_argument("convex path must start on the y-axis");
    if (vertices_.back().y != 0) throw std::invalid_argument("convex path must end on the x-axis");
    for (const auto& v : vertices_)
        if (v.x.sign() < 0 || v.y.sign() < 0) throw std::invalid_argument("convex path leaves the first quadrant");
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i - 1];
        const auto& b = vertices_[i];
        if (b.x < a.x || b.y > a.y) throw std::invalid_argument("convex path must move right and down");
        if (a == b) throw std::invalid_argument("convex path has a repeated vertex");
        if (b.x == a.x && i + 1 != vertices_.size())
            throw std::invalid_argument("only the final segment of a convex path may be vertical");
        if (i >= 2) {
            const auto& z = vertices_[i - 2];
            // Concave: turning clockwise or straight.
            if (cross(a.x - z.x, a.y - z.y, b.x - a.x, b.y - a.y).sign() > 0)
                throw std::invalid_argument("convex path is not concave");
        }
    }
}

bool ConvexPath::segments_hit_lattice() const {
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (!line_hits_lattice(vertices_[i - 1], vertices_[i])) return false;
    return true;
}

ToricDomain ToricDomain::polydisk(Rational a, Rational b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw std::invalid_argument("polydisk sides must be positive");
    return ToricDomain(Polydisk{std::move(a), std::move(b)});
}

ToricDomain ToricDomain::ellipsoid(Rational a, Rational b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw std::invalid_argument("ellipsoid axes must be positive");
    return ToricDomain(Ellipsoid{std::move(a), std::move(b)});
}

ToricDomain ToricDomain::convex_pl(ConvexPath boundary) {
    if (boundary.x_intercept().sign() <= 0 || boundary.y_intercept().sign() <= 0)
        throw std::invalid_argument("convex toric domain needs positive axis intercepts");
    return ToricDomain(ConvexPL{std::move(boundary)});
}

namespace {

class DomainParser {
public:
    explicit DomainParser(std::string_view s) : s_(s) {}

    ToricDomain parse() {
        skip_ws();
        if (consume("PL")) {
            expect('[');
            std::vector<Point> pts;
            do {
                expect('(');
                Rational x = rational();
                expect(',');
                Rational y = rational();
                expect(')');
                pts.push_back({std::move(x), std::move(y)});
            } while (consume(","));
            expect(']');
            finish();
            return ToricDomain::convex_pl(ConvexPath(std::move(pts)));
        }
        const bool poly = consume("P");
        if (!poly && !consume("E")) fail("expected P(...), E(...) or PL[...]");
        expect('(');
        Rational a = rational();
        expect(',');
        Rational b = rational();
        expect(')');
        finish();
        return poly ? ToricDomain::polydisk(std::move(a), std::move(b))
                    : ToricDomain::ellipsoid(std::move(a), std::move(b));
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("domain syntax error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool consume(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(char c) {
        if (!consume(std::string_view(&c, 1))) fail(std::string("expected '") + c + "'");
    }
    void finish() {
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
    }
    Rational rational() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                    s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        if (start == pos_) fail("expected rational");
        return Rational::parse(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ToricDomain ToricDomain::parse(std::string_view text) { return DomainParser(text).parse(); }

Rational ToricDomain::x_intercept() const {
    if (const auto* p = std::get_if<Polydisk>(&v_)) return p->a;
    if (const auto* e = std::get_if<Ellipsoid>(&v_)) return e->a;
    return std::get<ConvexPL>(v_).boundary.x_intercept();
}

Rational ToricDomain::y_intercept() const {
    if (const auto* p = std::get_if<Polydisk>(&v_)) return p->b;
    if (const auto* e = std::get_if<Ellipsoid>(&v_)) return e->b;
    return std::get<ConvexPL>(v_).boundary.y_intercept();
}

std::vector<Point> ToricDomain::polygon() const {
    const Rational zero(0);
    if (const auto* p = std::get_if<Polydisk>(&v_)) return {{zero, zero}, {p->a, zero}, {p->a, p->b}, {zero, p->b}};
    if (const auto* e = std::get_if<Ellipsoid>(&v_)) return {{zero, zero}, {e->a, zero}, {zero, e->b}};
    const auto& path = std::get<ConvexPL>(v_).boundary.vertices();
    std::vector<Point> out{{zero, zero}};
    for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(*it);
    return out;
}

std::string ToricDomain::to_string() const {
    std::ostringstream os;
    if (const auto* p = std::get_if<Polydisk>(&v_)) {
        os << "P(" << p->a << "," << p->b << ")";
    } else if (const auto* e = std::get_if<Ellipsoid>(&v_)) {
        os << "E(" << e->a << "," << e->b << ")";
    } else {
        os << "PL[";
        bool first = true;
        for (const auto& v : std::get<ConvexPL>(v_).boundary.vertices()) {
            if (!first) os << ",";
            first = false;
            os << "(" << v.x << "," << v.y << ")";
        }
        os << "]";
    }
    return os.str();
}

Point support_point(const ToricDomain& d, const Direction& dir) {
    if (dir.alpha < 0 || dir.beta < 0 || (dir.alpha == 0 && dir.beta == 0))
        throw std::invalid_argument("support direction must be nonzero and nonnegative");
    const Rational alpha(dir.alpha);
    const Rational beta(dir.beta);
    const auto poly = d.polygon();
    const Point* best = nullptr;
    Rational best_value;
    for (const auto& v : poly) {
        const Rational value = beta * v.x + alpha * v.y;
        if (best == nullptr || value > best_value || (value == best_value && v.x < best->x)) {
            best = &v;
            best_value = value;
        }
    }
    return *best;
}

Rational unit_edge_action(const ToricDomain& d, const Direction& dir) {
    const Point p = support_point(d, dir);
    // det [[alpha, px], [-beta, py]]
    return Rational(dir.alpha) * p.y + Rational(dir.beta) * p.x;
}

Rational action(const ToricDomain& d, const ConvexGenerator& g) {
    Rational total(0);
    for (const auto& e : g.edges()) total += Rational(e.multiplicity) * unit_edge_action(d, e.direction);
    return total;
}

Rational volume(const ToricDomain& d) {
    const auto poly = d.polygon();
    Rational twice(0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return twice / Rational(2);
}

bool trivial_inclusion(const Rational& a, const Rational& b, const Rational& c) { return a + b <= b * c; }

bool is_minimal(const ToricDomain& d, const ConvexGenerator& g) {
    if (!g.purely_elliptic()) throw std::invalid_argument("minimality is defined for purely elliptic generators");
    EnumerationRequest req;
    req.index = ech_index(g);
    req.bound = ActionBound{action(d, g), false};
    req.labels = LabelMode::elliptic_only;
    bool sole = true;
    for_each_generator(d, req, [&](const ConvexGenerator& other) {
        if (!(other == g)) sole = false;
        return sole;
    });
    return sole;
}

}  // namespace ech
