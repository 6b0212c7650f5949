#pragma once

#include <string>

#include <json.hpp>

#include "bh/estimation.hpp"
#include "bh/gallery.hpp"

namespace bh {

using nlohmann::json;

// Descriptor parsing, shared by the CLI and the config file loader.
//   space:  {"dim": n, "norm": "euclidean"|"weighted"|"lp"|"linf"|"l1",
//            "weights": [...], "p": number}
//   domain: {"kind": "all"|"ball"|"box"|"halfspaces", "center": [...],
//            "radius": r, "lower": [...], "upper": [...],
//            "faces": [{"normal": [...], "offset": b}, ...]}
//   oracle: {"name": ..., "params": {"A": [[...]], "c": [...], "dim": n}}
NormedSpace parse_space(const json& j);
ConvexDomain parse_domain(const json& j, const NormedSpace& space);
FunctionOracle parse_oracle(const json& j);

json space_to_json(const NormedSpace& s);
json domain_to_json(const ConvexDomain& d);
json oracle_to_json(const FunctionOracle& f);

json verdict_to_json(const ConditionVerdict& v);
json estimate_to_json(const ConstantEstimate& e);
json implication_report_to_json(const ImplicationReport& r);
json scenario_report_to_json(const ScenarioReport& r);

// Flat CSV with the same numeric content as the JSON report; doubles
// printed with %.17g so they round-trip exactly.
std::string report_to_csv(const json& report);

std::string format_double(double v);

} // namespace bh
