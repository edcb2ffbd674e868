#include "kneser/extremal.hpp"

#include <algorithm>
#include <numeric>

#include "kneser/random.hpp"

namespace kneser {

Family lex_initial_family(int n, int k, std::uint64_t s) {
  const std::uint64_t total = binomial_u64(n, k);
  if (s < 1 || s > total) throw std::out_of_range("lex_initial_family: s outside [1, C(n,k)]");
  std::vector<KSubset> members;
  members.reserve(s);
  for (std::uint64_t i = 0; i < s; ++i) members.push_back(lex_unrank(n, k, i));
  return Family(n, k, std::move(members));
}

MinimalityReport verify_lex_minimality(int n, int k, int r, std::uint64_t s, std::uint64_t family_budget) {
  const Params params(n, k, r);
  MinimalityReport report;
  report.n = n;
  report.k = k;
  report.r = r;
  report.s = s;

  const Family lex = lex_initial_family(n, k, s);
  report.lex_edges = induced_edge_count(lex, r);
  report.stars_needed = star_count_for_size(n, k, BigInt(s)).value_or(n);
  if (r == 2) report.theorem_hypothesis_holds = n > 108 * k * k * (report.stars_needed + k);

  const auto masks = vertex_masks(n, k);
  const std::size_t v = masks.size();
  std::vector<std::uint64_t> chosen(s);
  std::uint64_t best = report.lex_edges;
  auto consider = [&](std::span<const std::uint32_t> idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) chosen[i] = masks[idx[i]];
    best = std::min(best, count_disjoint_tuples(chosen, r));
    ++report.families_enumerated;
  };

  const BigInt families = binomial(static_cast<std::int64_t>(v), static_cast<std::int64_t>(s));
  if (families <= BigInt(family_budget)) {
    // All s-subsets of [0, v) in lex order.
    std::vector<std::uint32_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0U);
    while (true) {
      consider(idx);
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == v - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    // Uniform random s-subsets under a seed fixed by (n, k, r, s).
    report.exhaustive = false;
    CounterRng rng(derive_seed(0x6c6578ULL, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
                                              static_cast<std::uint64_t>(r), s}));
    std::vector<std::uint32_t> pool(v);
    std::iota(pool.begin(), pool.end(), 0U);
    for (std::uint64_t t = 0; t < family_budget; ++t) {
      for (std::size_t i = 0; i < s; ++i) std::swap(pool[i], pool[i + rng.below(v - i)]);
      std::vector<std::uint32_t> idx(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
      std::sort(idx.begin(), idx.end());
      consider(idx);
    }
  }
  report.min_edges = best;
  report.min_attained_by_lex = report.lex_edges == report.min_edges;
  return report;
}

BigInt corollary_lower_bound(int n, int k, int q, std::uint64_t m) {
  if (q < 2) throw std::out_of_range("corollary_lower_bound: q must be at least 2");
  if (m < 1 || m > binomial_u64(n - q, k - 1)) throw std::out_of_range("corollary_lower_bound: m outside [1, N_q]");
  BigInt bound = m;
  for (int i = 1; i <= q - 1; ++i) bound *= binomial(n - i * k - q + i, k - 1);
  return bound;
}

bool check_corollary_on_lex(int n, int k, int q, std::uint64_t m) {
  const BigInt bound = corollary_lower_bound(n, k, q, m);
  std::uint64_t s = m;
  for (int i = 1; i <= q - 1; ++i) s += binomial_u64(n - i, k - 1);
  const Family lex = lex_initial_family(n, k, s);
  return BigInt(induced_edge_count(lex, q)) >= bound;
}

SampledHypergraph complete_hypergraph(const Params& params) { return sample_explicit(params, 1.0, 0); }

namespace {

OracleRecord run_oracle(const Params& params, BigInt formula, std::uint64_t solver_budget) {
  const auto full = complete_hypergraph(params);
  const auto solved = max_independent_set(full, solver_budget);
  if (solved.status != SolveStatus::exact) throw BudgetExceeded("oracle: solver budget exceeded");
  OracleRecord record;
  record.alpha = *solved.alpha;
  record.formula_value = std::move(formula);
  record.matches_formula = BigInt(record.alpha) == record.formula_value;
  record.witness_independent = is_independent(full, solved.witness) && solved.witness.size() == record.alpha;
  record.frankl_regime = params.frankl_regime();

  bool all_trivial = true;
  std::uint64_t outcome_cap_left = kMaximaEnumerationCap;
  const auto outcome = enumerate_independent_sets(
      full, record.alpha,
      [&](const Family& f) {
        if (!is_trivial_union(f, params)) all_trivial = false;
        return outcome_cap_left-- > 1;
      },
      solver_budget);
  record.maximum_sets_found = outcome.visited;
  if (outcome.completed) record.all_maximum_trivial = all_trivial;
  return record;
}

}  // namespace

OracleRecord ekr_oracle(int n, int k, std::uint64_t solver_budget) {
  const Params params(n, k, 2);
  return run_oracle(params, binomial(n - 1, k - 1), solver_budget);
}

OracleRecord emc_oracle(int n, int k, int r, std::uint64_t solver_budget) {
  const Params params(n, k, r);
  return run_oracle(params, emc_value(params).value, solver_budget);
}

}  // namespace kneser
