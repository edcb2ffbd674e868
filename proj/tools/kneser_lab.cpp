#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kneser/experiments.hpp"
#include "kneser/extremal.hpp"
#include "kneser/io.hpp"

using namespace kneser;

namespace {

io::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return io::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kneser hypergraph lab: random Kneser hypergraphs, exact independence numbers, threshold sweeps"};
  app.require_subcommand(1);

  int n = 0, k = 0, r = 0;
  double p = 0;
  std::uint64_t seed = 0, budget = kDefaultSolverBudget, s = 0;
  std::string in_path, out_path, csv_path, config_path, sampler = "explicit";
  unsigned threads = 0;
  bool fast = false;

  auto* quantities = app.add_subcommand("quantities", "Derived quantities, p_c and E[Y]");
  quantities->add_option("--n", n)->required();
  quantities->add_option("--k", k)->required();
  quantities->add_option("--r", r)->required();
  auto* q_p = quantities->add_option("--p", p, "Edge probability for E[Y]")->check(CLI::Range(0.0, 1.0));

  auto* sample_cmd = app.add_subcommand("sample", "Sample KG^r_{n,k}(p)");
  sample_cmd->add_option("--n", n)->required();
  sample_cmd->add_option("--k", k)->required();
  sample_cmd->add_option("--r", r)->required();
  sample_cmd->add_option("--p", p)->required()->check(CLI::Range(0.0, 1.0));
  sample_cmd->add_option("--seed", seed)->required();
  sample_cmd->add_option("--sampler", sampler, "explicit or by-count");
  sample_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* alpha_cmd = app.add_subcommand("alpha", "Exact independence number of a sample");
  alpha_cmd->add_option("--in", in_path)->required();
  alpha_cmd->add_option("--budget", budget, "Search node budget");

  auto* ystat = app.add_subcommand("ystat", "Count of (Q, A) pairs spanning no retained edge");
  ystat->add_option("--in", in_path)->required();

  auto* sweep = app.add_subcommand("sweep", "Threshold sweep over a p grid");
  sweep->add_option("--config", config_path)->required();
  sweep->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");
  sweep->add_option("--out", out_path, "JSON output file (default stdout)");
  sweep->add_option("--csv", csv_path, "Also write the per-p rows as CSV");

  auto* extremal = app.add_subcommand("extremal", "Lex-initial minimality check");
  extremal->add_option("--n", n)->required();
  extremal->add_option("--k", k)->required();
  extremal->add_option("--r", r)->required();
  extremal->add_option("--s", s)->required();

  auto* verify = app.add_subcommand("verify", "Run the oracle battery; nonzero exit on any failure");
  verify->add_flag("--fast", fast, "Smaller sample counts");
  verify->add_option("--seed", seed, "Seed for the randomized checks")->default_val(VerifyOptions{}.seed);
  verify->add_option("--threads", threads, "Worker threads (default 1)")->default_val(1);
  verify->add_option("--out", out_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*quantities) {
      const Params params(n, k, r);
      const auto j = io::quantities_json(params, q_p->count() ? std::optional<double>(p) : std::nullopt);
      std::cout << io::dump(j);
    } else if (*sample_cmd) {
      const auto g = kneser::sample(Params(n, k, r), p, seed, parse_sampler_kind(sampler));
      write_text(out_path, io::to_json(g).dump() + '\n');
    } else if (*alpha_cmd) {
      const auto g = io::sample_from_json(read_json_file(in_path));
      std::cout << io::dump(io::to_json(max_independent_set(g, budget)));
    } else if (*ystat) {
      const auto g = io::sample_from_json(read_json_file(in_path));
      const auto y = y_statistic(g);
      io::Json detail{{"Y", y},
                      {"pairs_total", io::big_to_json(derive(g.params).trivial_plus_one)},
                      {"expected_Y", expected_trivial_plus_one(g.params, g.p)},
                      {"first_pair", nullptr}};
      if (const auto w = first_y_witness(g)) detail["first_pair"] = io::Json{{"Q", w->centers}, {"A", io::to_json(w->extra)}};
      std::cout << y << '\n' << io::dump(detail);
    } else if (*sweep) {
      const auto config = io::sweep_config_from_json(read_json_file(config_path));
      const auto result = threshold_sweep(config, resolve_threads(threads));
      write_text(out_path, io::dump(io::to_json(result)));
      if (!csv_path.empty()) write_text(csv_path, io::sweep_csv(result));
    } else if (*extremal) {
      std::cout << io::dump(io::to_json(verify_lex_minimality(n, k, r, s)));
    } else if (*verify) {
      VerifyOptions options;
      options.seed = seed;
      options.fast = fast;
      options.threads = resolve_threads(threads);
      const auto report = verify_suite(options);
      write_text(out_path, io::dump(io::to_json(report)));
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
