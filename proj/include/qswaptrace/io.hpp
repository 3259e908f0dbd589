// io.hpp
// JSON file formats for states, distributions, counts, and moments.

#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qswaptrace/cswap.hpp"
#include "qswaptrace/estimate.hpp"
#include "qswaptrace/experiments.hpp"
#include "qswaptrace/states_builtin.hpp"

namespace qswaptrace::io {

using json = nlohmann::json;

// State file: { "dims": [...], "kind": "pure"|"mixed", "data": [[re, im], ...] }
// (pure data is the amplitude vector, mixed data the row-major matrix).
json state_to_json(const AnyState& state);
AnyState state_from_json(const json& j);

// Distribution: { "n_controls": k, "probabilities": { "010": 0.1875, ... } }
json distribution_to_json(const OutcomeDistribution& dist);
OutcomeDistribution distribution_from_json(const json& j);

// Counts: { "n_controls": k, "total": M, "counts": { "010": 117, ... } }
json counts_to_json(const ShotCounts& counts);
ShotCounts counts_from_json(const json& j);

// Moments: { "values": [m_1, m_2, ...], "source_dim": d }
json moments_to_json(const MomentVector& mv);
MomentVector moments_from_json(const json& j);

json estimates_to_json(const TraceEstimates& est);
json mse_report_to_json(const MseReport& report);
json hoeffding_report_to_json(const HoeffdingReport& report);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

}  // namespace qswaptrace::io
