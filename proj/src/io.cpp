#include "ech/io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ech {

namespace {

Json big(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

mpz_class big_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw ParseError("expected an integer or a decimal string");
}

}  // namespace

Json to_json(const Rational& r) { return Json{{"num", big(r.num())}, {"den", big(r.den())}}; }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("expected {\"num\", \"den\"}");
    const mpz_class den = big_from_json(j.at("den"));
    if (den == 0) throw ParseError("zero denominator");
    return Rational(mpq_class(big_from_json(j.at("num")), den));
}

Json to_json(const ConvexGenerator& g) { return format_generator(g); }

Json to_json(const EmbeddingProblem& prob) {
    Json j{{"a", to_json(prob.a)}, {"p", prob.p}, {"q", prob.q}, {"d0", prob.d0}};
    if (prob.mode == CMode::exact) {
        j["c_mode"] = "exact";
        j["c"] = to_json(prob.c);
    } else {
        j["c_mode"] = "supremum_strict";
        j["c_below"] = to_json(prob.inclusion_threshold());
    }
    return j;
}

Json to_json(const LeCheckResult& r) {
    return Json{
        {"ok", r.ok()},
        {"index", {{"ok", r.index_ok}, {"lhs", r.index_lhs}, {"rhs", r.index_rhs}}},
        {"action",
         {{"ok", r.action_ok},
          {"lhs", to_json(r.action_lhs)},
          {"rhs", to_json(r.action_rhs)},
          {"relation", r.action_strict ? "<" : "<="}}},
        {"genus", {{"ok", r.genus_ok}, {"lhs", to_json(r.genus_lhs)}, {"rhs", to_json(r.genus_rhs)}}},
    };
}

Json to_json(const Factorization& f) {
    Json parts = Json::array();
    for (const auto& g : f.parts) parts.push_back(to_json(g));
    return Json{{"n", f.n()}, {"lambda_parts", parts}, {"dprime_parts", f.d_parts}};
}

Json to_json(const SearchStats& s) {
    return Json{{"nodes", s.nodes},
                {"candidates", s.candidates},
                {"candidates_by_d", s.candidates_by_d},
                {"pruned", s.profiles_pruned},
                {"checked", s.checked}};
}

Json to_json(const ObstructionReport& r) {
    Json j{{"problem", to_json(r.problem)}, {"outcome", to_string(r.outcome)}};
    j["bound"] = r.bound ? to_json(*r.bound) : Json(nullptr);
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["note"] = r.note;
    j["stats"] = to_json(r.stats);
    return j;
}

Json to_json(const WitnessSpec& s) {
    Json j{{"variant", s.name()}, {"d0", s.d0()}, {"p", s.p()}, {"q", s.q()}, {"a", to_json(s.a())}};
    if (const auto* A = std::get_if<ExampleA>(&s.variant)) j["epsilon"] = to_json(A->epsilon);
    j["x0"] = s.x0();
    j["y0"] = s.y0();
    j["target_index"] = s.target_index();
    j["pc_interval"] = Json::array({to_json(s.pc_lower()), to_json(s.pc_upper())});
    return j;
}

Json to_json(const WitnessResult& w) {
    return Json{{"spec", to_json(w.spec)},
                {"generator", to_json(w.generator)},
                {"x", w.generator.x()},
                {"y", w.generator.y()},
                {"index", ech_index(w.generator)},
                {"lattice_count", lattice_count(w.generator)},
                {"le_check", to_json(w.check)},
                {"c", to_json(w.c)}};
}

Json to_json(const CapacityTable& t) {
    Json entries = Json::array();
    for (std::size_t k = 0; k < t.entries.size(); ++k)
        entries.push_back(Json{{"k", k}, {"capacity", to_json(t.entries[k])}});
    return Json{{"domain", t.domain.to_string()}, {"capacities", entries}};
}

Json to_json(const RatioScanResult& r) {
    return Json{{"k_max", r.k_max},
                {"max_ratio", to_json(r.max_ratio)},
                {"argmax_k", r.argmax_k},
                {"numerator_at_argmax", to_json(r.numerator_at_argmax)},
                {"denominator_at_argmax", to_json(r.denominator_at_argmax)},
                {"final_ratio", to_json(r.final_ratio)},
                {"volume_ratio", to_json(r.volume_num / r.volume_den)}};
}

std::string capacities_csv(const CapacityTable& t) {
    std::ostringstream os;
    os << "k,capacity_num,capacity_den\n";
    for (std::size_t k = 0; k < t.entries.size(); ++k)
        os << k << ',' << t.entries[k].numerator_string() << ',' << t.entries[k].denominator_string() << '\n';
    return os.str();
}

std::string decimal(const Rational& r, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << r.to_double();
    return os.str();
}

}  // namespace ech
