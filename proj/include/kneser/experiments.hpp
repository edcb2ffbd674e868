#pragma once

// Monte Carlo layer: the (Q, A) statistic Y, single trials, threshold sweeps
// over a p grid, the coupled monotonicity check, and the one-shot oracle
// battery behind `verify`.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneser/combinatorics.hpp"
#include "kneser/model.hpp"
#include "kneser/solver.hpp"

namespace kneser {

enum class SweepMode { alpha, y_only, both };
std::string_view to_string(SweepMode mode) noexcept;
/// Accepts "alpha", "y_only" and "both". Throws std::invalid_argument otherwise.
SweepMode parse_sweep_mode(std::string_view text);

struct SweepConfig {
  Params params{4, 2, 2};
  std::vector<double> p_grid;
  std::uint64_t trials_per_p = 1;
  std::uint64_t master_seed = 0;
  SamplerKind sampler_kind = SamplerKind::explicit_enumeration;
  std::uint64_t solver_budget = kDefaultSolverBudget;
  SweepMode mode = SweepMode::both;

  /// Throws std::invalid_argument on an empty, unsorted or out-of-range grid,
  /// zero trials, or an alpha mode outside the emc regime.
  void validate() const;
};

// ---------------------------------------------------------------------------

/// Number of pairs (Q, A), |Q| = r-1, A disjoint from Q, such that S_Q plus A
/// spans no retained edge. Only edges through A can lie there, and such an
/// edge blocks exactly the Q that pick one element from each other member.
std::uint64_t y_statistic(const SampledHypergraph& sample);

struct YWitness {
  std::vector<int> centers;  // Q
  KSubset extra;             // A
};

/// The first counted pair, A in lex order then Q in lex order; nullopt when Y = 0.
std::optional<YWitness> first_y_witness(const SampledHypergraph& sample);

/// S_Q with A added: an independent family of size N + 1 whenever the pair is counted.
Family y_witness_family(const Params& params, const YWitness& witness);

// ---------------------------------------------------------------------------

enum class AlphaOutcome { equals_N, exceeds_N, budget_exceeded, not_computed };
std::string_view to_string(AlphaOutcome outcome) noexcept;

struct TrialRecord {
  double p = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> y;  // absent in alpha mode
  AlphaOutcome alpha = AlphaOutcome::not_computed;
  std::uint64_t nodes_explored = 0;
  /// Y > 0 came with alpha = N, or a reported witness failed its independence check.
  bool inconsistent = false;
};

/// One sample and its statistics. alpha is decided by searching for an
/// independent set of size N + 1; deterministic given the seed.
TrialRecord run_trial(const Params& params, double p, std::uint64_t trial_seed, std::uint64_t budget, SweepMode mode,
                      SamplerKind kind = SamplerKind::explicit_enumeration);

/// Seed of trial `trial` at grid position `p_index`.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t p_index, std::uint64_t trial);

// ---------------------------------------------------------------------------

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct WilsonInterval {
  double lo = 0;
  double hi = 1;
};

/// Wilson score interval for successes out of n; [0, 1] when n = 0.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n, double z = kWilsonZ95);

struct SweepRow {
  double p = 0;
  double p_over_pc = 0;
  std::uint64_t trials = 0;
  std::uint64_t n_alpha_eq_N = 0;
  std::uint64_t n_alpha_gt_N = 0;
  std::uint64_t n_budget = 0;
  std::optional<double> frac_success;  // absent in y_only mode or when every trial ran out of budget
  WilsonInterval wilson;
  /// Present only when every decided trial has alpha = N, the one case the
  /// decision pins alpha down exactly.
  std::optional<double> mean_alpha;
  std::optional<double> mean_Y;
  std::uint64_t n_Y_positive = 0;
  double expected_Y_formula = 0;
  std::uint64_t inconsistent_trials = 0;
};

struct SweepResult {
  SweepConfig config;
  double p_c = 0;
  bool p_c_exceeds_one = false;
  std::vector<SweepRow> rows;
};

/// KNESER_LAB_THREADS when set to a positive integer, otherwise `requested`,
/// otherwise the hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

/// Runs every trial of the grid; rows are reduced in (p_index, trial) order so
/// the result does not depend on the thread count.
SweepResult threshold_sweep(const SweepConfig& config, unsigned threads = 1);

/// Row i is a non-decreasing step from row i-1 when the Wilson intervals overlap or frac rises.
bool sweep_trend_non_decreasing(const SweepResult& result);

// ---------------------------------------------------------------------------

struct CoupledCheck {
  std::uint64_t chains = 0;
  std::uint64_t comparisons = 0;      // consecutive grid pairs compared across all chains
  std::uint64_t skipped_budget = 0;   // pairs where either side ran out of budget
  std::vector<std::string> failures;  // empty when the check passes

  bool passed() const noexcept { return failures.empty(); }
};

/// Chains of explicit samples sharing one seed across the grid, so the edge
/// sets are nested. Per consecutive pair it checks nesting, Y non-increasing
/// in p, that alpha = N at the lower p forces alpha = N at the higher p, and
/// that an (N+1)-witness at the higher p is independent at the lower p.
CoupledCheck coupled_monotonicity_check(const Params& params, const std::vector<double>& p_grid, std::uint64_t chains,
                                        std::uint64_t master_seed, std::uint64_t budget, unsigned threads = 1);

// ---------------------------------------------------------------------------

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  bool fast = false;
  unsigned threads = 1;
  /// Formula the M oracle is compared against; defaults to derive(params).M.
  std::function<BigInt(const Params&)> m_formula;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  bool fast = false;
  std::vector<VerifyCheck> checks;

  bool passed() const noexcept;
};

/// Identities, M and total-edge oracles, sampler equivalence, duality,
/// solver against exhaustive search, p = 1 classical values, lex minimality.
VerifyReport verify_suite(const VerifyOptions& options = {});

/// Calls body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& body);

}  // namespace kneser
