// Python bindings. Rationals cross the boundary as fractions.Fraction;
// structured results cross as JSON text and are decoded in ech/__init__.py.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ech/io.hpp"

namespace py = pybind11;
using namespace ech;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.to_string()); }

// Accepts int, Fraction or a string such as "4/3".
Rational rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_ech, m) {
    m.doc() = "Exact ECH index, capacity and embedding-obstruction computations";

    m.def("index", [](const std::string& g) { return ech_index(parse_generator(g)); }, py::arg("generator"));
    m.def("normalize", [](const std::string& g) { return format_generator(parse_generator(g)); }, py::arg("generator"));
    m.def(
        "profile",
        [](const std::string& text) {
            const auto g = parse_generator(text);
            const auto pr = profile(g);
            py::dict d;
            d["x"] = pr.x;
            d["y"] = pr.y;
            d["m"] = pr.m;
            d["h"] = pr.h;
            d["L"] = lattice_count(g);
            d["index"] = ech_index(g);
            return d;
        },
        py::arg("generator"));
    m.def(
        "action",
        [](const std::string& domain, const std::string& g) {
            return fraction(action(ToricDomain::parse(domain), parse_generator(g)));
        },
        py::arg("domain"), py::arg("generator"));
    m.def(
        "capacities",
        [](const std::string& domain, Int k_max) {
            py::list out;
            for (const auto& c : capacity_table(ToricDomain::parse(domain), k_max).entries) out.append(fraction(c));
            return out;
        },
        py::arg("domain"), py::arg("k_max"));
    m.def(
        "_ratio_json",
        [](const std::string& num, const std::string& den, Int k_max) {
            return to_json(ratio_scan(ToricDomain::parse(num), ToricDomain::parse(den), k_max)).dump();
        },
        py::arg("num"), py::arg("den"), py::arg("k_max"));
    m.def(
        "_obstruct_json",
        [](const py::object& a, Int p, Int d0, Int q, const py::object& c, bool prune, std::uint64_t node_limit,
           Int n_min, std::optional<Int> n_max) {
            const auto prob = c.is_none() ? EmbeddingProblem::supremum(rational(a), p, d0, q)
                                          : EmbeddingProblem::exact(rational(a), p, d0, rational(c), q);
            SearchOptions o;
            o.prune = prune;
            o.node_limit = node_limit;
            o.n_min = n_min;
            o.n_max = n_max;
            ObstructionReport r;
            {
                py::gil_scoped_release release;
                r = obstruct(prob, o);
            }
            return to_json(r).dump();
        },
        py::arg("a"), py::arg("p"), py::arg("d0"), py::arg("q") = 2, py::arg("c") = py::none(),
        py::arg("prune") = true, py::arg("node_limit") = SearchOptions{}.node_limit, py::arg("n_min") = 1,
        py::arg("n_max") = py::none());
    m.def(
        "_witness_json",
        [](const std::string& variant, Int d0, std::optional<Int> p, std::optional<Int> q, const py::object& epsilon,
           const py::object& c) {
            WitnessSpec spec;
            if (variant == "A")
                spec.variant = ExampleA{d0, epsilon.is_none() ? Rational(1, 10) : rational(epsilon), p.value_or(5)};
            else if (variant == "B")
                spec.variant = ExampleB{d0};
            else if (variant == "C")
                spec.variant = ExampleC{d0, p.value_or(5), q.value_or(4)};
            else
                throw std::invalid_argument("variant must be A, B or C");
            std::optional<Rational> cc;
            if (!c.is_none()) cc = rational(c);
            return to_json(build_witness(spec, cc)).dump();
        },
        py::arg("variant"), py::arg("d0"), py::arg("p") = py::none(), py::arg("q") = py::none(),
        py::arg("epsilon") = py::none(), py::arg("c") = py::none());
}
