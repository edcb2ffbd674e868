#include <doctest.h>

#include <sstream>

#include "kneser/io.hpp"

using namespace kneser;
using io::Json;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Json base_config() {
  return Json::parse(R"({"params": {"n": 12, "k": 2, "r": 2}, "p_grid": [0.2, 0.5], "trials_per_p": 4,
                        "master_seed": 9})");
}

}  // namespace

TEST_CASE("big integers become numbers or strings") {
  CHECK(io::big_to_json(BigInt(42)).is_number_unsigned());
  CHECK(io::big_to_json(BigInt(42)).dump() == "42");
  CHECK(io::big_to_json(binomial(64, 32)).dump() == "1832624140942590534");
  const auto huge = io::big_to_json(binomial(200, 100));
  CHECK(huge.is_string());
  CHECK(huge.get<std::string>() == binomial(200, 100).str());
}

TEST_CASE("KSubset and Family serialize as element lists") {
  CHECK(io::to_json(KSubset(9, {7, 1, 3})).dump() == "[1,3,7]");
  CHECK(io::to_json(star(Params(4, 2, 2), 1)).dump() == "[[1,2],[1,3],[1,4]]");
}

TEST_CASE("quantities JSON") {
  const auto j = io::quantities_json(Params(10, 2, 3), 0.2);
  CHECK(j["N"] == 17);
  CHECK(j["N_i"].dump() == "[9,8]");
  CHECK(j["M"] == 30);
  CHECK(j["emc_value"] == 17);
  CHECK(j["p_c"].get<double>() == doctest::Approx(p_critical(Params(10, 2, 3)).value));
  CHECK(j["expected_Y"].get<double>() == doctest::Approx(expected_trivial_plus_one(Params(10, 2, 3), 0.2)));
  const auto outside = io::quantities_json(Params(6, 2, 3));
  CHECK(outside["p_c"].is_null());
  CHECK_FALSE(outside.contains("expected_Y"));
  CHECK(io::quantities_json(Params(6, 2, 4))["emc_value"].is_null());
}

TEST_CASE("sample JSON round trip is byte stable") {
  for (auto kind : {SamplerKind::explicit_enumeration, SamplerKind::by_count}) {
    const auto g = sample(Params(8, 2, 3), 0.4, 123, kind);
    const auto text = io::dump(io::to_json(g));
    const auto back = io::sample_from_json(Json::parse(text));
    CHECK(back.retained == g.retained);
    CHECK(back.seed == 123);
    CHECK(back.sampler_kind == kind);
    CHECK(io::dump(io::to_json(back)) == text);
    CHECK(io::dump(io::to_json(sample(Params(8, 2, 3), 0.4, 123, kind))) == text);
  }
  const auto j = io::to_json(sample_explicit(Params(6, 2, 2), 1.0, 0));
  CHECK(j["retained"].size() == 45);
  CHECK(j["retained"][0].dump() == "[0,9]");
  CHECK(j["sampler_kind"] == "explicit");
}

TEST_CASE("malformed samples are rejected") {
  auto good = io::to_json(sample_explicit(Params(6, 2, 2), 0.5, 3));
  CHECK_NOTHROW(io::sample_from_json(good));
  auto bad = good;
  bad["retained"].push_back(Json::array({14, 0}));
  CHECK_THROWS_AS(io::sample_from_json(bad), std::invalid_argument);
  bad = good;
  bad["retained"].push_back(Json::array({0, 15}));
  CHECK_THROWS_AS(io::sample_from_json(bad), std::invalid_argument);
  bad = good;
  bad["retained"].push_back(Json::array({0, 1}));  // {1,2} and {1,3} intersect
  CHECK_THROWS_AS(io::sample_from_json(bad), std::invalid_argument);
  bad = good;
  bad["retained"].push_back(Json::array({0, 14, 9}));
  CHECK_THROWS_AS(io::sample_from_json(bad), std::invalid_argument);
  bad = good;
  bad["retained"].push_back(bad["retained"][0]);
  CHECK_THROWS_AS(io::sample_from_json(bad), std::invalid_argument);
  bad = good;
  bad["p"] = 1.5;
  CHECK_THROWS_AS(io::sample_from_json(bad), std::invalid_argument);
  bad = good;
  bad.erase("seed");
  CHECK_THROWS_AS(io::sample_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(io::sample_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("SolveResult JSON") {
  const auto g = sample_explicit(Params(5, 2, 2), 1.0, 0);
  const auto j = io::to_json(max_independent_set(g));
  CHECK(j["alpha"] == 4);
  CHECK(j["witness"].size() == 4);
  CHECK(j["status"] == "exact");
  const auto starved = io::to_json(max_independent_set(sample_explicit(Params(30, 2, 2), 0.3, 1), 5));
  CHECK(starved["alpha"].is_null());
  CHECK(starved["status"] == "budget_exceeded");
}

TEST_CASE("report JSON") {
  const auto m = io::to_json(verify_lex_minimality(6, 2, 2, 6));
  CHECK(m["lex_edges"] == 3);
  CHECK(m["min_attained_by_lex"] == true);
  CHECK(m["theorem_hypothesis_holds"] == false);
  const auto o = io::to_json(emc_oracle(8, 2, 3));
  CHECK(o["alpha"] == 13);
  CHECK(o["all_maximum_trivial"] == true);
  TrialRecord t;
  t.y = 3;
  t.alpha = AlphaOutcome::exceeds_N;
  CHECK(io::to_json(t)["alpha"] == "exceeds_N");
  CHECK(io::to_json(t)["Y"] == 3);
}

TEST_CASE("sweep config parsing") {
  const auto c = io::sweep_config_from_json(base_config());
  CHECK(c.params == Params(12, 2, 2));
  CHECK(c.p_grid == std::vector<double>{0.2, 0.5});
  CHECK(c.trials_per_p == 4);
  CHECK(c.master_seed == 9);
  CHECK(c.mode == SweepMode::both);
  CHECK(c.sampler_kind == SamplerKind::explicit_enumeration);
  CHECK(c.solver_budget == kDefaultSolverBudget);

  auto full = base_config();
  full["mode"] = "y_only";
  full["sampler_kind"] = "by-count";
  full["solver_budget"] = 1000;
  const auto d = io::sweep_config_from_json(full);
  CHECK(d.mode == SweepMode::y_only);
  CHECK(d.sampler_kind == SamplerKind::by_count);
  CHECK(d.solver_budget == 1000);
  CHECK(io::sweep_config_from_json(io::to_json(d)).mode == SweepMode::y_only);
  CHECK(io::to_json(io::sweep_config_from_json(io::to_json(d))) == io::to_json(d));

  auto extra = base_config();
  extra["threads"] = 4;
  CHECK_THROWS_AS(io::sweep_config_from_json(extra), std::invalid_argument);
  extra = base_config();
  extra["params"]["p"] = 0.5;
  CHECK_THROWS_AS(io::sweep_config_from_json(extra), std::invalid_argument);
  auto missing = base_config();
  missing.erase("master_seed");
  CHECK_THROWS_AS(io::sweep_config_from_json(missing), std::invalid_argument);
  auto negative = base_config();
  negative["master_seed"] = -1;
  CHECK_THROWS_AS(io::sweep_config_from_json(negative), std::invalid_argument);
  auto unsorted = base_config();
  unsorted["p_grid"] = Json::array({0.5, 0.2});
  CHECK_THROWS_AS(io::sweep_config_from_json(unsorted), std::invalid_argument);
  auto bad_mode = base_config();
  bad_mode["mode"] = "fast";
  CHECK_THROWS_AS(io::sweep_config_from_json(bad_mode), std::invalid_argument);
  auto wrong_type = base_config();
  wrong_type["trials_per_p"] = "many";
  CHECK_THROWS_AS(io::sweep_config_from_json(wrong_type), std::invalid_argument);
}

TEST_CASE("sweep JSON and CSV") {
  const auto config = io::sweep_config_from_json(base_config());
  const auto result = threshold_sweep(config, 1);
  const auto j = io::to_json(result);
  CHECK(j["rows"].size() == 2);
  CHECK(j["N"] == 11);
  CHECK(j["rows"][0]["wilson_95_interval"].size() == 2);
  CHECK(io::dump(io::to_json(threshold_sweep(config, 4))) == io::dump(j));

  const auto csv = io::sweep_csv(result);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "p,trials,n_alpha_eq_N,frac_success,wilson_lo,wilson_hi,mean_alpha,mean_Y,expected_Y,p_over_pc");
  int rows = 0;
  while (std::getline(in, line)) {
    const auto f = split(line, ',');
    REQUIRE(f.size() == 10);
    CHECK(std::stod(f[0]) == result.rows[rows].p);
    CHECK(std::stoull(f[1]) == 4);
    CHECK(std::stod(f[7]) == *result.rows[rows].mean_Y);
    ++rows;
  }
  CHECK(rows == 2);

  auto y_only = config;
  y_only.mode = SweepMode::y_only;
  const auto csv2 = io::sweep_csv(threshold_sweep(y_only));
  std::istringstream in2(csv2);
  std::getline(in2, line);
  std::getline(in2, line);
  const auto f = split(line, ',');
  CHECK(f[3].empty());
  CHECK(f[4].empty());
  CHECK(f[6].empty());
  CHECK_FALSE(f[7].empty());
}

TEST_CASE("verify report JSON is deterministic") {
  VerifyOptions o;
  o.fast = true;
  const auto a = io::dump(io::to_json(verify_suite(o)));
  o.threads = 4;
  const auto b = io::dump(io::to_json(verify_suite(o)));
  CHECK(a == b);
  CHECK(Json::parse(a)["passed"] == true);
}
