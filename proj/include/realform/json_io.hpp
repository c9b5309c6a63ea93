#pragma once

#include <json.hpp>

#include "realform/engine.hpp"
#include "realform/factor_graph.hpp"
#include "realform/gamma.hpp"

namespace realform {

using Json = nlohmann::json;

// All readers throw InvalidInput (or a subclass) on schema violations.

/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const Json& j);
/// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json integer_to_json(const Integer& v);
Json integers_to_json(const IntVector& v);

/// {"orders": [...], "action": "identity" | "inversion" | [[row], ...]}.
/// Matrix rows are the images of the generators.
GammaModule module_from_json(const Json& j);
Json module_to_json(const GammaModule& m);

/// {"factors": [{"family": "SL", "n": 3}, ...], "sigma_perm": [...],
///  "sigma_labels": [null | "split" | ...], "theta_perm": [...],
///  "theta_labels": [...]}; permutations are 0-based.
FactorGraph factor_graph_from_json(const Json& j);
Json factor_graph_to_json(const FactorGraph& fg);

/// Family specs as tagged objects: "sl-symplectic", "sl-pair", "generic".
EngineInput engine_input_from_json(const Json& spec);

/// {"exists", "failed_condition", "num_classes", "A_canonical", "conditions",
///  "input"}; the embedded input makes the report replayable.
Json decision_to_json(const Decision& d, const Json& spec);

/// Re-decides the report's input; throws InvalidInput if the verdict differs.
Decision replay_decision(const Json& report);

Json sweep_to_json(std::int64_t n_min, std::int64_t n_max, const std::vector<SweepRecord>& records);

/// Cohomology report: group, action, h1 rank and representatives, h2.
Json cohomology_to_json(const GammaModule& m);

}  // namespace realform
