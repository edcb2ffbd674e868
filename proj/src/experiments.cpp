#include "kneser/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kneser/extremal.hpp"
#include "kneser/random.hpp"

namespace kneser {

std::string_view to_string(SweepMode mode) noexcept {
  switch (mode) {
    case SweepMode::alpha: return "alpha";
    case SweepMode::y_only: return "y_only";
    default: return "both";
  }
}

SweepMode parse_sweep_mode(std::string_view text) {
  if (text == "alpha") return SweepMode::alpha;
  if (text == "y_only") return SweepMode::y_only;
  if (text == "both") return SweepMode::both;
  throw std::invalid_argument("unknown sweep mode: " + std::string(text));
}

std::string_view to_string(AlphaOutcome outcome) noexcept {
  switch (outcome) {
    case AlphaOutcome::equals_N: return "equals_N";
    case AlphaOutcome::exceeds_N: return "exceeds_N";
    case AlphaOutcome::budget_exceeded: return "budget_exceeded";
    default: return "not_computed";
  }
}

void SweepConfig::validate() const {
  if (p_grid.empty()) throw std::invalid_argument("p_grid must not be empty");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] >= 0.0 && p_grid[i] <= 1.0)) throw std::invalid_argument("p_grid values must lie in [0, 1]");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1])) throw std::invalid_argument("p_grid must be strictly ascending");
  }
  if (trials_per_p < 1) throw std::invalid_argument("trials_per_p must be at least 1");
  if (mode != SweepMode::y_only && !params.emc_regime())
    throw std::invalid_argument("alpha modes need the emc regime, where alpha >= N always holds");
}

// ---------------------------------------------------------------------------

namespace {

// Retained edges through each vertex, as lists of the other members' masks.
struct Incidence {
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::uint32_t>> through;  // vertex -> edge indices
};

Incidence incidence(const SampledHypergraph& sample) {
  Incidence inc;
  inc.masks = vertex_masks(sample.params.n(), sample.params.k());
  inc.through.resize(inc.masks.size());
  for (std::size_t e = 0; e < sample.retained.size(); ++e)
    for (auto v : sample.retained[e]) inc.through[v].push_back(static_cast<std::uint32_t>(e));
  return inc;
}

// Masks of the Q blocked for vertex a: one element from every other member of each edge through a.
std::vector<std::uint64_t> blocked_centers(const SampledHypergraph& sample, const Incidence& inc, VertexId a) {
  std::vector<std::uint64_t> out;
  std::vector<std::vector<int>> parts;
  for (auto e : inc.through[a]) {
    parts.clear();
    for (auto v : sample.retained[e]) {
      if (v == a) continue;
      std::vector<int> bits;
      for (std::uint64_t m = inc.masks[v]; m != 0; m &= m - 1) bits.push_back(std::countr_zero(m));
      parts.push_back(std::move(bits));
    }
    // Cartesian product of the parts.
    std::vector<std::size_t> idx(parts.size(), 0);
    while (true) {
      std::uint64_t q = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) q |= std::uint64_t{1} << parts[i][idx[i]];
      out.push_back(q);
      std::size_t i = 0;
      while (i < parts.size() && ++idx[i] == parts[i].size()) idx[i++] = 0;
      if (i == parts.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

std::uint64_t y_statistic(const SampledHypergraph& sample) {
  const auto& params = sample.params;
  const int n = params.n(), k = params.k(), r = params.r();
  const auto inc = incidence(sample);
  const std::uint64_t all = full_mask(n);
  const std::uint64_t per_vertex = binomial_u64(n - k, r - 1);
  std::uint64_t y = 0;
  for (VertexId a = 0; a < inc.masks.size(); ++a) {
    if (r == 2) {
      std::uint64_t blocked = 0;
      for (auto e : inc.through[a])
        for (auto v : sample.retained[e])
          if (v != a) blocked |= inc.masks[v];
      y += static_cast<std::uint64_t>(std::popcount(all & ~inc.masks[a] & ~blocked));
    } else {
      y += per_vertex - blocked_centers(sample, inc, a).size();
    }
  }
  return y;
}

std::optional<YWitness> first_y_witness(const SampledHypergraph& sample) {
  const auto& params = sample.params;
  const int n = params.n(), r = params.r();
  const auto inc = incidence(sample);
  for (VertexId a = 0; a < inc.masks.size(); ++a) {
    const auto blocked = blocked_centers(sample, inc, a);
    // Q over [n] \ A in lex order.
    std::vector<int> free;
    for (int x = 1; x <= n; ++x)
      if (!((inc.masks[a] >> (x - 1)) & 1U)) free.push_back(x);
    std::vector<std::size_t> c(static_cast<std::size_t>(r - 1));
    std::iota(c.begin(), c.end(), std::size_t{0});
    const std::size_t m = free.size(), q = c.size();
    while (true) {
      std::uint64_t mask = 0;
      for (auto i : c) mask |= std::uint64_t{1} << (free[i] - 1);
      if (!std::binary_search(blocked.begin(), blocked.end(), mask)) {
        YWitness w{{}, KSubset::from_bits(n, inc.masks[a])};
        for (auto i : c) w.centers.push_back(free[i]);
        return w;
      }
      std::size_t i = q;
      while (i > 0 && c[i - 1] == m - q + (i - 1)) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < q; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Family y_witness_family(const Params& params, const YWitness& witness) {
  Family family = star_union(params, witness.centers);
  if (!family.insert(witness.extra)) throw std::invalid_argument("y_witness_family: A already lies in S_Q");
  return family;
}

// ---------------------------------------------------------------------------

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t p_index, std::uint64_t trial) {
  return derive_seed(master_seed, {p_index, trial});
}

TrialRecord run_trial(const Params& params, double p, std::uint64_t seed, std::uint64_t budget, SweepMode mode,
                      SamplerKind kind) {
  TrialRecord record;
  record.p = p;
  record.seed = seed;
  const auto g = sample(params, p, seed, kind);
  if (mode != SweepMode::alpha) {
    record.y = y_statistic(g);
    if (*record.y > 0) {
      const auto w = first_y_witness(g);
      if (!w || !is_independent(g, y_witness_family(params, *w))) record.inconsistent = true;
    }
  }
  if (mode != SweepMode::y_only) {
    const std::uint64_t n_plus_one = derive(params).N.convert_to<std::uint64_t>() + 1;
    const auto decision = exists_independent_of_size(g, n_plus_one, budget);
    record.nodes_explored = decision.nodes_explored;
    switch (decision.answer) {
      case Answer::yes:
        record.alpha = AlphaOutcome::exceeds_N;
        if (!decision.witness || decision.witness->size() != n_plus_one || !is_independent(g, *decision.witness))
          record.inconsistent = true;
        break;
      case Answer::no: record.alpha = AlphaOutcome::equals_N; break;
      default: record.alpha = AlphaOutcome::budget_exceeded; break;
    }
    if (record.y && *record.y > 0 && record.alpha == AlphaOutcome::equals_N) record.inconsistent = true;
  }
  return record;
}

// ---------------------------------------------------------------------------

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t n, double z) {
  if (n == 0) return {};
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double centre = (phat + z2 / (2 * nn)) / (1 + z2 / nn);
  const double half = z / (1 + z2 / nn) * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("KNESER_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& body) {
  threads = std::max(1U, threads);
  if (threads == 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const auto i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  const auto n = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

SweepResult threshold_sweep(const SweepConfig& config, unsigned threads) {
  config.validate();
  const auto& params = config.params;
  SweepResult result;
  result.config = config;
  if (params.emc_regime()) {
    const auto pc = p_critical(params);
    result.p_c = pc.value;
    result.p_c_exceeds_one = pc.exceeds_one;
  }
  const std::uint64_t per = config.trials_per_p;
  const std::uint64_t total = per * config.p_grid.size();
  std::vector<TrialRecord> records(total);
  parallel_for(total, threads, [&](std::uint64_t job) {
    const std::uint64_t pi = job / per, t = job % per;
    records[job] = run_trial(params, config.p_grid[pi], trial_seed(config.master_seed, pi, t), config.solver_budget,
                             config.mode, config.sampler_kind);
  });

  const double big_n = derive(params).N.convert_to<double>();
  for (std::size_t pi = 0; pi < config.p_grid.size(); ++pi) {
    SweepRow row;
    row.p = config.p_grid[pi];
    row.p_over_pc = result.p_c > 0 ? row.p / result.p_c : 0.0;
    row.trials = per;
    row.expected_Y_formula = expected_trivial_plus_one(params, row.p);
    double y_sum = 0;
    for (std::uint64_t t = 0; t < per; ++t) {
      const auto& rec = records[pi * per + t];
      if (rec.inconsistent) ++row.inconsistent_trials;
      if (rec.y) {
        y_sum += static_cast<double>(*rec.y);
        if (*rec.y > 0) ++row.n_Y_positive;
      }
      switch (rec.alpha) {
        case AlphaOutcome::equals_N: ++row.n_alpha_eq_N; break;
        case AlphaOutcome::exceeds_N: ++row.n_alpha_gt_N; break;
        case AlphaOutcome::budget_exceeded: ++row.n_budget; break;
        default: break;
      }
    }
    if (config.mode != SweepMode::alpha) row.mean_Y = y_sum / static_cast<double>(per);
    if (config.mode != SweepMode::y_only) {
      const std::uint64_t decided = per - row.n_budget;
      if (decided > 0) {
        row.frac_success = static_cast<double>(row.n_alpha_eq_N) / static_cast<double>(decided);
        if (row.n_alpha_gt_N == 0) row.mean_alpha = big_n;
      }
      row.wilson = wilson_interval(row.n_alpha_eq_N, decided);
    }
    result.rows.push_back(row);
  }
  return result;
}

bool sweep_trend_non_decreasing(const SweepResult& result) {
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    const auto& a = result.rows[i - 1];
    const auto& b = result.rows[i];
    if (!a.frac_success || !b.frac_success) continue;
    if (*b.frac_success >= *a.frac_success) continue;
    if (b.wilson.hi < a.wilson.lo) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

bool nested(const EdgeSet& small, const EdgeSet& large) {
  for (std::size_t e = 0; e < small.size(); ++e)
    if (!large.contains(small[e])) return false;
  return true;
}

struct ChainPoint {
  EdgeSet retained{2};
  std::uint64_t y = 0;
  Answer answer = Answer::unknown;
  std::optional<Family> witness;
};

constexpr std::uint64_t kCoupledTag = 0x636f75706c6564ULL;  // "coupled"

}  // namespace

CoupledCheck coupled_monotonicity_check(const Params& params, const std::vector<double>& p_grid, std::uint64_t chains,
                                        std::uint64_t master_seed, std::uint64_t budget, unsigned threads) {
  if (!params.emc_regime()) throw std::invalid_argument("coupled check needs the emc regime");
  for (std::size_t i = 1; i < p_grid.size(); ++i)
    if (!(p_grid[i] > p_grid[i - 1])) throw std::invalid_argument("p_grid must be strictly ascending");
  const std::uint64_t n_plus_one = derive(params).N.convert_to<std::uint64_t>() + 1;
  const std::size_t points = p_grid.size();
  std::vector<std::vector<std::string>> failures(chains);
  std::vector<std::uint64_t> compared(chains, 0), skipped(chains, 0);

  std::vector<ChainPoint> points_data(chains * points);
  parallel_for(chains * points, threads, [&](std::uint64_t job) {
    const std::uint64_t c = job / points, i = job % points;
    const auto g = sample_explicit(params, p_grid[i], derive_seed(master_seed, {kCoupledTag, c}));
    auto& pt = points_data[job];
    pt.retained = g.retained;
    pt.y = y_statistic(g);
    const auto d = exists_independent_of_size(g, n_plus_one, budget);
    pt.answer = d.answer;
    pt.witness = d.witness;
  });

  for (std::uint64_t c = 0; c < chains; ++c) {
    for (std::size_t i = 1; i < points; ++i) {
      const auto& lo = points_data[c * points + i - 1];
      const auto& hi = points_data[c * points + i];
      std::ostringstream where;
      where << "chain " << c << ", p " << p_grid[i - 1] << " -> " << p_grid[i] << ": ";
      if (!nested(lo.retained, hi.retained)) failures[c].push_back(where.str() + "edge sets not nested");
      if (lo.y < hi.y) failures[c].push_back(where.str() + "Y increased with p");
      if (lo.answer == Answer::unknown || hi.answer == Answer::unknown) {
        ++skipped[c];
        continue;
      }
      ++compared[c];
      if (lo.answer == Answer::no && hi.answer == Answer::yes)
        failures[c].push_back(where.str() + "alpha = N at the lower p but alpha > N at the higher p");
      if (hi.answer == Answer::yes) {
        SampledHypergraph lower{params, p_grid[i - 1], 0, SamplerKind::explicit_enumeration, lo.retained};
        if (!hi.witness || !is_independent(lower, *hi.witness))
          failures[c].push_back(where.str() + "witness at the higher p is not independent at the lower p");
      }
    }
  }

  CoupledCheck check;
  check.chains = chains;
  for (std::uint64_t c = 0; c < chains; ++c) {
    check.comparisons += compared[c];
    check.skipped_budget += skipped[c];
    for (auto& f : failures[c]) check.failures.push_back(std::move(f));
  }
  return check;
}

// ---------------------------------------------------------------------------

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

// Exhaustive alpha over all vertex subsets; V <= 24.
std::uint64_t brute_force_alpha(const SampledHypergraph& g) {
  const std::size_t v = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> by_top(v);  // edge masks keyed by their largest vertex
  for (std::size_t e = 0; e < g.retained.size(); ++e) {
    std::uint32_t m = 0;
    for (auto x : g.retained[e]) m |= std::uint32_t{1} << x;
    by_top[static_cast<std::size_t>(31 - std::countl_zero(m))].push_back(m);
  }
  std::vector<std::uint8_t> ok(std::size_t{1} << v, 0);
  ok[0] = 1;
  std::uint64_t best = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << v); ++s) {
    const auto top = static_cast<std::size_t>(31 - std::countl_zero(s));
    if (!ok[s & ~(std::uint32_t{1} << top)]) continue;
    bool good = true;
    for (auto m : by_top[top])
      if ((m & s) == m) {
        good = false;
        break;
      }
    if (!good) continue;
    ok[s] = 1;
    best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::popcount(s)));
  }
  return best;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

VerifyCheck check_identities() {
  std::vector<std::string> bad;
  std::uint64_t cases = 0;
  for (int k = 2; k <= 5; ++k)
    for (int r = 2; r <= 5; ++r)
      for (int n = r * k; n <= 40; ++n) {
        const Params params(n, k, r);
        const auto q = derive(params);
        ++cases;
        BigInt sum = 0;
        for (const auto& ni : q.N_i) sum += ni;
        const bool ok = q.N == sum && q.H <= k * binomial(n - 2, k - 2) &&
                        (r - 1) * binomial(n - r + 1, k - 1) <= q.N && q.N <= (r - 1) * binomial(n - 1, k - 1);
        if (!ok) bad.push_back("(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ")");
      }
  return {"identities", bad.empty(), bad.empty() ? std::to_string(cases) + " parameter triples" : join(bad)};
}

VerifyCheck check_m_oracle(const VerifyOptions& options) {
  const int draws = options.fast ? 5 : 20;
  const int cases[][3] = {{8, 2, 2}, {10, 2, 2}, {10, 2, 3}, {12, 3, 2}, {11, 2, 4}};
  std::vector<std::string> bad;
  CounterRng rng(derive_seed(options.seed, {0x4d}));
  for (const auto& c : cases) {
    const Params params(c[0], c[1], c[2]);
    const BigInt expected = options.m_formula ? options.m_formula(params) : derive(params).M;
    for (int d = 0; d < draws; ++d) {
      // Q: r - 1 distinct elements; A: k elements outside Q.
      std::vector<int> ground(static_cast<std::size_t>(c[0]));
      std::iota(ground.begin(), ground.end(), 1);
      for (std::size_t i = ground.size() - 1; i > 0; --i) std::swap(ground[i], ground[rng.below(i + 1)]);
      std::vector<int> q(ground.begin(), ground.begin() + (c[2] - 1));
      std::vector<int> a(ground.begin() + (c[2] - 1), ground.begin() + (c[2] - 1 + c[1]));
      std::sort(q.begin(), q.end());
      const auto count = trivial_plus_one_edge_count(params, q, KSubset(c[0], a));
      if (BigInt(count) != expected) {
        bad.push_back("(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
                      "): brute " + std::to_string(count) + " vs formula " + expected.str());
        break;
      }
    }
  }
  return {"m_oracle", bad.empty(), bad.empty() ? "5 parameter triples" : join(bad)};
}

VerifyCheck check_total_edges() {
  std::vector<std::string> bad;
  std::uint64_t cases = 0;
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k; binomial_u64(n, k) <= 30; ++n)
      for (int r = 2; r * k <= n; ++r) {
        const Params params(n, k, r);
        const auto masks = vertex_masks(n, k);
        const auto brute = count_disjoint_tuples(masks, r);
        ++cases;
        if (BigInt(brute) != total_edge_count(params))
          bad.push_back("(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ")");
      }
  return {"total_edge_oracle", bad.empty(), bad.empty() ? std::to_string(cases) + " instances" : join(bad)};
}

VerifyCheck check_sampler_equivalence(const VerifyOptions& options) {
  const Params params(6, 2, 2);
  const double p = 0.3;
  const std::uint64_t seeds = options.fast ? 400 : 2000;
  const auto masks = vertex_masks(6, 2);
  std::vector<std::vector<VertexId>> all;
  for_each_edge(params, masks, [&](std::span<const VertexId> key) { all.emplace_back(key.begin(), key.end()); });
  std::vector<std::string> bad;
  for (auto kind : {SamplerKind::explicit_enumeration, SamplerKind::by_count}) {
    std::vector<std::uint64_t> hits(all.size(), 0);
    double sum = 0, sum_sq = 0;
    for (std::uint64_t s = 0; s < seeds; ++s) {
      const auto g = sample(params, p, derive_seed(options.seed, {0x53, s}), kind);
      const double m = static_cast<double>(g.retained.size());
      sum += m;
      sum_sq += m * m;
      for (std::size_t e = 0; e < all.size(); ++e)
        if (g.retained.contains(all[e])) ++hits[e];
    }
    const double ns = static_cast<double>(seeds);
    const double sigma = std::sqrt(p * (1 - p) / ns);
    for (std::size_t e = 0; e < all.size(); ++e)
      if (std::abs(static_cast<double>(hits[e]) / ns - p) > 4 * sigma) {
        bad.push_back(std::string(to_string(kind)) + ": edge frequency outside 4 sigma");
        break;
      }
    const double mean = sum / ns;
    const double var = (sum_sq - ns * mean * mean) / (ns - 1);
    const double expected = p * static_cast<double>(all.size());
    if (std::abs(mean - expected) > 3 * std::sqrt(var / ns))
      bad.push_back(std::string(to_string(kind)) + ": mean edge count outside 3 standard errors");
  }
  return {"sampler_equivalence", bad.empty(), bad.empty() ? std::to_string(seeds) + " seeds per sampler" : join(bad)};
}

struct SmallCase {
  int n, k, r;
  double p;
};

std::vector<SmallCase> small_cases() {
  std::vector<SmallCase> out;
  for (double p : {0.2, 0.5, 0.8}) {
    out.push_back({6, 2, 2, p});
    out.push_back({6, 2, 3, p});
    out.push_back({6, 3, 2, p});
  }
  return out;
}

VerifyCheck check_solver_vs_exhaustive(const VerifyOptions& options) {
  const auto cases = small_cases();
  const std::uint64_t per_case = options.fast ? 4 : 12;
  const std::uint64_t total = per_case * cases.size();
  std::vector<std::string> bad(total);
  parallel_for(total, options.threads, [&](std::uint64_t job) {
    const auto& c = cases[job / per_case];
    const Params params(c.n, c.k, c.r);
    const auto g = sample_explicit(params, c.p, derive_seed(options.seed, {0x42, job}));
    const auto solved = max_independent_set(g);
    const auto brute = brute_force_alpha(g);
    if (!solved.alpha || *solved.alpha != brute || !is_independent(g, solved.witness) ||
        solved.witness.size() != brute)
      bad[job] = "sample " + std::to_string(job);
  });
  std::vector<std::string> found;
  for (auto& b : bad)
    if (!b.empty()) found.push_back(b);
  return {"solver_vs_exhaustive", found.empty(),
          found.empty() ? std::to_string(total) + " samples" : join(found)};
}

VerifyCheck check_duality(const VerifyOptions& options) {
  const auto cases = small_cases();
  const std::uint64_t per_case = options.fast ? 2 : 6;
  const std::uint64_t total = per_case * cases.size();
  std::vector<std::string> bad(total);
  parallel_for(total, options.threads, [&](std::uint64_t job) {
    const auto& c = cases[job / per_case];
    const Params params(c.n, c.k, c.r);
    const auto g = sample_explicit(params, c.p, derive_seed(options.seed, {0x44, job}));
    const auto alpha = max_independent_set(g);
    const auto tau = min_hitting_set(g.retained, g.vertex_count());
    if (!alpha.alpha || !tau.tau || *alpha.alpha + *tau.tau != g.vertex_count()) bad[job] = "sample " + std::to_string(job);
  });
  std::vector<std::string> found;
  for (auto& b : bad)
    if (!b.empty()) found.push_back(b);
  return {"duality", found.empty(), found.empty() ? std::to_string(total) + " samples" : join(found)};
}

VerifyCheck check_classical() {
  std::vector<std::string> bad;
  auto expect = [&](const char* name, const OracleRecord& rec, std::uint64_t value) {
    if (rec.alpha != value || !rec.matches_formula || !rec.witness_independent) bad.push_back(name);
  };
  expect("KG(5,2)", ekr_oracle(5, 2), 4);
  expect("KG(6,2)", ekr_oracle(6, 2), 5);
  expect("KG(10,2)", ekr_oracle(10, 2), 9);
  const auto frankl = emc_oracle(8, 2, 3);
  expect("KG3(8,2)", frankl, 13);
  if (frankl.all_maximum_trivial != true) bad.push_back("KG3(8,2) maxima not all unions of two stars");
  return {"classical_p1", bad.empty(), bad.empty() ? "4 instances" : join(bad)};
}

VerifyCheck check_lex_minimality(const VerifyOptions& options) {
  std::vector<std::string> bad;
  const std::uint64_t top = options.fast ? 5 : 7;
  for (std::uint64_t s = 1; s <= top; ++s) {
    const auto report = verify_lex_minimality(6, 2, 2, s);
    if (!report.exhaustive || !report.min_attained_by_lex) bad.push_back("s=" + std::to_string(s));
  }
  return {"lex_minimality", bad.empty(), bad.empty() ? "n=6 k=2 r=2 s=1.." + std::to_string(top) : join(bad)};
}

VerifyCheck check_expected_y(const VerifyOptions& options) {
  const Params params(10, 2, 2);
  const std::uint64_t trials = options.fast ? 300 : 1000;
  std::vector<std::string> bad;
  for (double p : {0.05, 0.1, 0.2}) {
    std::vector<double> ys(trials);
    parallel_for(trials, options.threads, [&](std::uint64_t t) {
      ys[t] = static_cast<double>(y_statistic(sample_explicit(params, p, derive_seed(options.seed, {0x59, t}))));
    });
    const double n = static_cast<double>(trials);
    const double mean = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double ss = 0;
    for (double y : ys) ss += (y - mean) * (y - mean);
    const double se = std::sqrt(ss / (n - 1) / n);
    if (std::abs(mean - expected_trivial_plus_one(params, p)) > 3 * se)
      bad.push_back("p=" + std::to_string(p));
  }
  return {"expected_y", bad.empty(), bad.empty() ? std::to_string(trials) + " trials per p" : join(bad)};
}

}  // namespace

VerifyReport verify_suite(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  report.fast = options.fast;
  report.checks.push_back(check_identities());
  report.checks.push_back(check_m_oracle(options));
  report.checks.push_back(check_total_edges());
  report.checks.push_back(check_sampler_equivalence(options));
  report.checks.push_back(check_solver_vs_exhaustive(options));
  report.checks.push_back(check_duality(options));
  report.checks.push_back(check_classical());
  report.checks.push_back(check_lex_minimality(options));
  report.checks.push_back(check_expected_y(options));
  return report;
}

}  // namespace kneser
