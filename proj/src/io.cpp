#include "kneser/io.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace kneser::io {

namespace {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json wilson_json(const WilsonInterval& w) { return Json::array({w.lo, w.hi}); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return Json(value.convert_to<std::uint64_t>());
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) return Json(value.convert_to<std::int64_t>());
  return Json(value.str());
}

Json to_json(const Params& params) {
  return Json{{"n", params.n()},
              {"k", params.k()},
              {"r", params.r()},
              {"emc_regime", params.emc_regime()},
              {"frankl_regime", params.frankl_regime()}};
}

Json to_json(const KSubset& set) { return Json(set.elements()); }

Json to_json(const Family& family) {
  Json out = Json::array();
  for (const auto& a : family) out.push_back(to_json(a));
  return out;
}

Json quantities_json(const Params& params, std::optional<double> p) {
  const auto q = derive(params);
  Json n_i = Json::array();
  for (const auto& x : q.N_i) n_i.push_back(big_to_json(x));
  Json out{{"params", to_json(params)},
           {"V", big_to_json(q.V)},
           {"N", big_to_json(q.N)},
           {"N_i", n_i},
           {"M", big_to_json(q.M)},
           {"H", big_to_json(q.H)},
           {"total_edges", big_to_json(q.total_edges)},
           {"trivial_plus_one_pairs", big_to_json(q.trivial_plus_one)},
           {"log_V", q.log_V},
           {"log_N", q.log_N},
           {"log_M", q.log_M},
           {"log_total_edges", q.log_total_edges},
           {"log_trivial_plus_one_pairs", q.log_trivial_plus_one}};
  if (params.emc_regime()) {
    const auto pc = p_critical(params);
    out["p_c"] = pc.value;
    out["p_c_exceeds_one"] = pc.exceeds_one;
  } else {
    out["p_c"] = nullptr;
    out["p_c_exceeds_one"] = nullptr;
  }
  if (params.n() >= params.r() * params.k() - 1)
    out["emc_value"] = big_to_json(emc_value(params).value);
  else
    out["emc_value"] = nullptr;
  if (p) {
    out["p"] = *p;
    out["expected_Y"] = expected_trivial_plus_one(params, *p);
  }
  return out;
}

// ---------------------------------------------------------------------------

Json to_json(const SampledHypergraph& sample) {
  Json retained = Json::array();
  for (std::size_t e = 0; e < sample.retained.size(); ++e) {
    const auto key = sample.retained[e];
    retained.push_back(Json(std::vector<VertexId>(key.begin(), key.end())));
  }
  return Json{{"params", Json{{"n", sample.params.n()}, {"k", sample.params.k()}, {"r", sample.params.r()}}},
              {"p", sample.p},
              {"seed", sample.seed},
              {"sampler_kind", std::string(to_string(sample.sampler_kind))},
              {"retained", retained}};
}

SampledHypergraph sample_from_json(const Json& j) {
  try {
    require(j.is_object(), "sample: expected an object");
    const auto& pj = j.at("params");
    const Params params(pj.at("n").get<int>(), pj.at("k").get<int>(), pj.at("r").get<int>());
    const double p = j.at("p").get<double>();
    require(p >= 0.0 && p <= 1.0, "sample: p outside [0, 1]");
    SampledHypergraph out{params, p, j.at("seed").get<std::uint64_t>(),
                          parse_sampler_kind(j.at("sampler_kind").get<std::string>()), EdgeSet(params.r())};
    const auto masks = vertex_masks(params.n(), params.k());
    const auto& edges = j.at("retained");
    require(edges.is_array(), "sample: retained must be an array");
    out.retained.reserve(edges.size());
    for (const auto& e : edges) {
      const auto key = e.get<std::vector<VertexId>>();
      require(key.size() == static_cast<std::size_t>(params.r()), "sample: edge of the wrong size");
      std::uint64_t seen = 0;
      for (std::size_t i = 0; i < key.size(); ++i) {
        require(key[i] < masks.size(), "sample: rank out of range");
        require(i == 0 || key[i] > key[i - 1], "sample: edge ranks must be ascending");
        require((seen & masks[key[i]]) == 0, "sample: edge members are not pairwise disjoint");
        seen |= masks[key[i]];
      }
      out.retained.push_back(key);
    }
    const auto before = out.retained.size();
    out.retained.canonicalize();
    require(out.retained.size() == before, "sample: repeated edge");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sample: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

Json to_json(const SolveResult& result) {
  return Json{{"alpha", result.alpha ? Json(*result.alpha) : Json(nullptr)},
              {"witness", Json(result.witness.ranks())},
              {"nodes_explored", result.nodes_explored},
              {"status", std::string(to_string(result.status))}};
}

Json to_json(const MinimalityReport& report) {
  return Json{{"n", report.n},
              {"k", report.k},
              {"r", report.r},
              {"s", report.s},
              {"lex_edges", report.lex_edges},
              {"min_edges", report.min_edges},
              {"min_attained_by_lex", report.min_attained_by_lex},
              {"families_enumerated", report.families_enumerated},
              {"exhaustive", report.exhaustive},
              {"stars_needed", report.stars_needed},
              {"theorem_hypothesis_holds",
               report.theorem_hypothesis_holds ? Json(*report.theorem_hypothesis_holds) : Json(nullptr)}};
}

Json to_json(const OracleRecord& record) {
  return Json{{"alpha", record.alpha},
              {"formula_value", big_to_json(record.formula_value)},
              {"matches_formula", record.matches_formula},
              {"maximum_sets_found", record.maximum_sets_found},
              {"all_maximum_trivial",
               record.all_maximum_trivial ? Json(*record.all_maximum_trivial) : Json(nullptr)},
              {"witness_independent", record.witness_independent},
              {"frankl_regime", record.frankl_regime}};
}

Json to_json(const TrialRecord& record) {
  return Json{{"p", record.p},
              {"seed", record.seed},
              {"Y", record.y ? Json(*record.y) : Json(nullptr)},
              {"alpha", std::string(to_string(record.alpha))},
              {"nodes_explored", record.nodes_explored},
              {"inconsistent", record.inconsistent}};
}

// ---------------------------------------------------------------------------

Json to_json(const SweepConfig& config) {
  return Json{{"params", Json{{"n", config.params.n()}, {"k", config.params.k()}, {"r", config.params.r()}}},
              {"p_grid", config.p_grid},
              {"trials_per_p", config.trials_per_p},
              {"master_seed", config.master_seed},
              {"sampler_kind", std::string(to_string(config.sampler_kind))},
              {"solver_budget", config.solver_budget},
              {"mode", std::string(to_string(config.mode))}};
}

SweepConfig sweep_config_from_json(const Json& j) {
  static const std::set<std::string> top_keys{"params",      "p_grid",        "trials_per_p", "master_seed",
                                              "sampler_kind", "solver_budget", "mode"};
  static const std::set<std::string> param_keys{"n", "k", "r"};
  try {
    require(j.is_object(), "config: expected an object");
    for (const auto& [key, _] : j.items()) require(top_keys.count(key) == 1, "config: unknown key '" + key + "'");
    const auto& pj = j.at("params");
    require(pj.is_object(), "config: params must be an object");
    for (const auto& [key, _] : pj.items())
      require(param_keys.count(key) == 1, "config: unknown key 'params." + key + "'");
    SweepConfig config;
    config.params = Params(pj.at("n").get<int>(), pj.at("k").get<int>(), pj.at("r").get<int>());
    config.p_grid = j.at("p_grid").get<std::vector<double>>();
    config.trials_per_p = j.at("trials_per_p").get<std::uint64_t>();
    require(j.at("master_seed").is_number_unsigned(), "config: master_seed must be a non-negative integer");
    config.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("sampler_kind")) config.sampler_kind = parse_sampler_kind(j.at("sampler_kind").get<std::string>());
    if (j.contains("solver_budget")) config.solver_budget = j.at("solver_budget").get<std::uint64_t>();
    if (j.contains("mode")) config.mode = parse_sweep_mode(j.at("mode").get<std::string>());
    config.validate();
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

Json to_json(const SweepResult& result) {
  Json rows = Json::array();
  for (const auto& row : result.rows) {
    rows.push_back(Json{{"p", row.p},
                        {"p_over_pc", row.p_over_pc},
                        {"trials", row.trials},
                        {"n_alpha_eq_N", row.n_alpha_eq_N},
                        {"n_alpha_gt_N", row.n_alpha_gt_N},
                        {"n_budget", row.n_budget},
                        {"frac_success", optional_number(row.frac_success)},
                        {"wilson_95_interval", wilson_json(row.wilson)},
                        {"mean_alpha", optional_number(row.mean_alpha)},
                        {"mean_Y", optional_number(row.mean_Y)},
                        {"n_Y_positive", row.n_Y_positive},
                        {"expected_Y_formula", row.expected_Y_formula},
                        {"inconsistent_trials", row.inconsistent_trials}});
  }
  return Json{{"config", to_json(result.config)},
              {"N", big_to_json(derive(result.config.params).N)},
              {"p_c", result.p_c},
              {"p_c_exceeds_one", result.p_c_exceeds_one},
              {"rows", rows}};
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "p,trials,n_alpha_eq_N,frac_success,wilson_lo,wilson_hi,mean_alpha,mean_Y,expected_Y,p_over_pc\n";
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  for (const auto& row : result.rows) {
    const bool has_alpha = row.frac_success.has_value();
    out += format_double(row.p) + ',' + std::to_string(row.trials) + ',' + std::to_string(row.n_alpha_eq_N) + ',' +
           opt(row.frac_success) + ',' + (has_alpha ? format_double(row.wilson.lo) : "") + ',' +
           (has_alpha ? format_double(row.wilson.hi) : "") + ',' + opt(row.mean_alpha) + ',' + opt(row.mean_Y) + ',' +
           format_double(row.expected_Y_formula) + ',' + format_double(row.p_over_pc) + '\n';
  }
  return out;
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"seed", report.seed}, {"fast", report.fast}, {"passed", report.passed()}, {"checks", checks}};
}

std::string dump(const Json& j) { return j.dump(2) + '\n'; }

}  // namespace kneser::io
