#pragma once

// JSON and CSV forms of the lab's records. Objects keep insertion order so
// serialized output is byte-stable for fixed inputs.

#include <optional>
#include <string>

#include <json.hpp>

#include "kneser/combinatorics.hpp"
#include "kneser/experiments.hpp"
#include "kneser/extremal.hpp"
#include "kneser/model.hpp"
#include "kneser/solver.hpp"

namespace kneser::io {

using Json = nlohmann::ordered_json;

/// A JSON number when the value fits in 64 bits, its decimal string otherwise.
Json big_to_json(const BigInt& value);

Json to_json(const Params& params);
Json to_json(const KSubset& set);  // ascending elements
Json to_json(const Family& family);

/// DerivedQuantities, p_c and, when p is given, E[Y] at p.
Json quantities_json(const Params& params, std::optional<double> p = std::nullopt);

Json to_json(const SampledHypergraph& sample);
/// Inverse of to_json; throws std::invalid_argument on malformed input,
/// non-ascending keys or ranks out of range.
SampledHypergraph sample_from_json(const Json& j);

Json to_json(const SolveResult& result);
Json to_json(const MinimalityReport& report);
Json to_json(const OracleRecord& record);
Json to_json(const TrialRecord& record);

Json to_json(const SweepConfig& config);
/// Keys: params {n, k, r}, p_grid, trials_per_p, master_seed, sampler_kind,
/// solver_budget, mode. The last three are optional. Unknown keys are rejected
/// with std::invalid_argument, and so are values failing SweepConfig::validate.
SweepConfig sweep_config_from_json(const Json& j);

Json to_json(const SweepResult& result);
/// Header plus one line per row; absent values are empty fields.
std::string sweep_csv(const SweepResult& result);

Json to_json(const VerifyReport& report);

/// Serialized text of j with two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace kneser::io
