// JSON and CSV renderings of results. Rationals are written exactly as
// {"num": n, "den": d}; integers that do not fit in 64 bits become strings.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ech/capacities.hpp"
#include "ech/criterion.hpp"
#include "ech/witness.hpp"

namespace ech {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const ConvexGenerator& g);
Json to_json(const EmbeddingProblem& prob);
Json to_json(const LeCheckResult& r);
Json to_json(const Factorization& f);
Json to_json(const SearchStats& s);
Json to_json(const ObstructionReport& r);
Json to_json(const WitnessSpec& s);
Json to_json(const WitnessResult& w);
Json to_json(const CapacityTable& t);
Json to_json(const RatioScanResult& r);

/// Header k,capacity_num,capacity_den then one row per k.
std::string capacities_csv(const CapacityTable& t);

/// Decimal rendering for --float style output.
std::string decimal(const Rational& r, int digits = 12);

}  // namespace ech
