// JSON schemas for every artifact that crosses the CLI boundary:
//
//   field    {"p": int, "e": int, "modulus": [int,...]}      (low-to-high)
//   subspace {"m": int, "basis": [[int,...],...]}            (canonical RREF)
//   spread   {"field": {...}, "k": int, "members": [...]}    (order significant)
//   code     {"field": {...}, "m": int, "defining_set": [[int,...],...]}
//   report   {"verdict", "method", "witness", "certificate", "stats"}
//   weights  [[weight, count],...] sorted by weight

#ifndef SPREADCODE_JSON_IO_HPP
#define SPREADCODE_JSON_IO_HPP

#include <json.hpp>

#include "spreadcode/minimality.hpp"

namespace spreadcode {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& F);
FieldPtr field_from_json(const Json& j);

Json subspace_to_json(const Subspace& U);
Subspace subspace_from_json(const Field& F, const Json& j);

Json spread_to_json(const PartialSpread& spread);
PartialSpread spread_from_json(const Json& j);

Json code_to_json(const DefiningSet& D);
DefiningSet code_from_json(const Json& j);

Json report_to_json(const MinimalityReport& report);

Json weights_to_json(const WeightDistribution& dist);

}  // namespace spreadcode

#endif
