// ech: command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 inconclusive search.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ech/io.hpp"

using namespace ech;

namespace {

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kInconclusive = 3;

bool use_float = false;

std::string show(const Rational& r) { return use_float ? decimal(r) : r.to_string(); }

std::string render_svg(const ConvexGenerator& g) {
    const auto prof = profile(g);
    const Int unit = 40;
    const Int pad = 30;
    const Int w = (prof.x + 1) * unit + 2 * pad;
    const Int h = (prof.y + 1) * unit + 2 * pad;
    auto X = [&](Int x) { return pad + x * unit; };
    auto Y = [&](Int y) { return h - pad - y * unit; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(prof.x) + unit / 2 << "\" y2=\"" << Y(0)
       << "\" stroke=\"#888\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(prof.y) - unit / 2
       << "\" stroke=\"#888\"/>\n";
    const auto rows = row_maxima(g);
    for (Int y = 0; y <= prof.y; ++y)
        for (Int x = 0; x <= rows[static_cast<std::size_t>(y)]; ++x)
            os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"3\" fill=\"#333\"/>\n";
    std::size_t vi = 0;
    for (const auto& e : g.edges()) {
        const auto& a = prof.vertices[vi];
        const auto& b = prof.vertices[vi + 1];
        ++vi;
        os << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
           << "\" stroke=\"" << (e.hyperbolic ? "#c0392b" : "#2471a3") << "\" stroke-width=\"3\""
           << (e.hyperbolic ? " stroke-dasharray=\"8 4\"" : "") << "/>\n";
    }
    os << "<text x=\"" << pad << "\" y=\"" << pad / 2 + 5 << "\" font-family=\"monospace\" font-size=\"12\">"
       << g.to_string() << "  I=" << ech_index(g) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

Rational parse_rational_option(const std::string& s) { return Rational::parse(s); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ECH index, capacity and embedding-obstruction computations"};
    app.require_subcommand(1);
    app.add_flag("--float", use_float, "Print rationals as decimals in text output");

    std::string gen_text;
    auto* index_cmd = app.add_subcommand("index", "ECH index of a generator");
    index_cmd->add_option("generator", gen_text, "e.g. \"e(1,0)^2 e(3,1) h(1,1)\"")->required();
    bool index_verbose = false;
    index_cmd->add_flag("-v,--verbose", index_verbose, "Also print x, y, m, h and L");

    std::string domain_text;
    auto* action_cmd = app.add_subcommand("action", "Action of a generator on a toric domain");
    action_cmd->add_option("--domain", domain_text, "P(a,b), E(a,b) or PL[(x,y),...]")->required();
    action_cmd->add_option("generator", gen_text)->required();

    Int kmax = 0;
    std::string format = "csv";
    auto* caps_cmd = app.add_subcommand("capacities", "ECH capacities c_0..c_kmax");
    caps_cmd->add_option("--domain", domain_text)->required();
    caps_cmd->add_option("--kmax", kmax)->required()->check(CLI::NonNegativeNumber);
    caps_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    std::string num_text, den_text;
    bool ratio_json = false;
    auto* ratio_cmd = app.add_subcommand("ratio", "Maximum of c_k(num)/c_k(den) over k = 1..kmax");
    ratio_cmd->add_option("--num", num_text)->required();
    ratio_cmd->add_option("--den", den_text)->required();
    ratio_cmd->add_option("--kmax", kmax)->required()->check(CLI::PositiveNumber);
    ratio_cmd->add_flag("--json", ratio_json);

    std::string a_text, c_text, eps_text;
    Int p = 0, q = 0, d0 = 1, n_min = 1, n_max = 0;
    bool no_prune = false;
    std::uint64_t node_limit = 100'000'000;
    auto* obstruct_cmd = app.add_subcommand("obstruct", "Run the criterion for P(a,1) -> E(pc/q,c) against e(p,q)^d0");
    obstruct_cmd->add_option("--a", a_text)->required();
    obstruct_cmd->add_option("--p", p)->required();
    obstruct_cmd->add_option("--q", q, "Default 2");
    obstruct_cmd->add_option("--d0", d0)->required();
    obstruct_cmd->add_option("--c", c_text, "Fixed c; omitted means every c below the inclusion threshold");
    obstruct_cmd->add_flag("--no-prune", no_prune, "Disable endpoint pruning");
    obstruct_cmd->add_option("--node-limit", node_limit);
    obstruct_cmd->add_option("--n-min", n_min);
    obstruct_cmd->add_option("--n-max", n_max);

    std::string variant;
    auto* witness_cmd = app.add_subcommand("witness", "Build and check a no-obstruction witness");
    witness_cmd->add_option("--variant", variant)->required()->check(CLI::IsMember({"A", "B", "C"}));
    witness_cmd->add_option("--d0", d0)->required();
    witness_cmd->add_option("--p", p, "A and C only; default 5");
    witness_cmd->add_option("--q", q, "C only; default 4");
    witness_cmd->add_option("--epsilon", eps_text, "A only; default 1/10");
    witness_cmd->add_option("--c", c_text);

    std::string out_path;
    auto* render_cmd = app.add_subcommand("render", "Draw a generator as SVG");
    render_cmd->add_option("generator", gen_text)->required();
    render_cmd->add_option("-o,--output", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*index_cmd) {
            const auto g = parse_generator(gen_text);
            if (index_verbose) {
                const auto pr = profile(g);
                std::cout << "generator " << g.to_string() << "\nx " << pr.x << "\ny " << pr.y << "\nm " << pr.m
                          << "\nh " << pr.h << "\nL " << lattice_count(g) << "\nI " << ech_index(g) << "\n";
            } else {
                std::cout << ech_index(g) << "\n";
            }
        } else if (*action_cmd) {
            std::cout << show(action(ToricDomain::parse(domain_text), parse_generator(gen_text))) << "\n";
        } else if (*caps_cmd) {
            const auto t = capacity_table(ToricDomain::parse(domain_text), kmax);
            if (format == "json")
                std::cout << to_json(t).dump(2) << "\n";
            else if (use_float) {
                std::cout << "k,capacity\n";
                for (std::size_t k = 0; k < t.entries.size(); ++k) std::cout << k << ',' << show(t.entries[k]) << '\n';
            } else {
                std::cout << capacities_csv(t);
            }
        } else if (*ratio_cmd) {
            const auto r = ratio_scan(ToricDomain::parse(num_text), ToricDomain::parse(den_text), kmax);
            if (ratio_json) {
                std::cout << to_json(r).dump(2) << "\n";
            } else {
                std::cout << "max_ratio " << show(r.max_ratio) << "\nargmax_k " << r.argmax_k << "\nc_num "
                          << show(r.numerator_at_argmax) << "\nc_den " << show(r.denominator_at_argmax)
                          << "\nfinal_ratio " << show(r.final_ratio) << "\nvolume_ratio "
                          << show(r.volume_num / r.volume_den) << "\n";
            }
        } else if (*obstruct_cmd) {
            const Rational a = parse_rational_option(a_text);
            if (q == 0) q = 2;
            const auto prob = c_text.empty() ? EmbeddingProblem::supremum(a, p, d0, q)
                                             : EmbeddingProblem::exact(a, p, d0, parse_rational_option(c_text), q);
            SearchOptions o;
            o.prune = !no_prune;
            o.node_limit = node_limit;
            o.n_min = n_min;
            if (n_max > 0) o.n_max = n_max;
            const auto r = obstruct(prob, o);
            std::cout << to_json(r).dump(2) << "\n";
            if (r.outcome == Outcome::inconclusive) return kInconclusive;
        } else if (*witness_cmd) {
            WitnessSpec spec;
            if (variant == "A") {
                if (p == 0) p = 5;
                spec.variant = ExampleA{d0, eps_text.empty() ? Rational(1, 10) : parse_rational_option(eps_text), p};
            } else if (variant == "B") {
                spec.variant = ExampleB{d0};
            } else {
                spec.variant = ExampleC{d0, p == 0 ? 5 : p, q == 0 ? 4 : q};
            }
            std::optional<Rational> c;
            if (!c_text.empty()) c = parse_rational_option(c_text);
            const auto w = build_witness(spec, c);
            std::cout << to_json(w).dump(2) << "\n";
        } else if (*render_cmd) {
            const auto g = parse_generator(gen_text);
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write " + out_path);
            out << render_svg(g);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return 0;
}
