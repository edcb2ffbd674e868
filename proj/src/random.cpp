#include "kneser/random.hpp"

#include <cmath>

namespace kneser {

std::uint64_t derive_seed(std::uint64_t seed, std::span<const std::uint32_t> words) noexcept {
  std::uint64_t h = splitmix64(seed);
  for (auto w : words) h = splitmix64(h ^ splitmix64(std::uint64_t{w} + 0x632be59bd9b4e019ULL));
  return h;
}

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

namespace {

// Count of Bernoulli(p) successes as the number of geometric gaps fitting in
// `trials`; each gap is drawn by inverting the geometric CDF.
std::uint64_t binomial_inversion(CounterRng& rng, std::uint64_t trials, double p) {
  const double log_q = std::log1p(-p);
  double position = 0;
  std::uint64_t successes = 0;
  const auto limit = static_cast<double>(trials);
  while (true) {
    double u = rng.uniform();
    while (u == 0.0) u = rng.uniform();
    position += std::ceil(std::log(u) / log_q);
    if (position > limit) return successes;
    ++successes;
  }
}

double stirling_tail(double k) {
  static constexpr double kTail[] = {0.0810614667953272,  0.0413406959554092,  0.0276779256849983,
                                     0.02079067210376509, 0.0166446911898211,  0.0138761288230707,
                                     0.0118967099458917,  0.0104112652619720,  0.00925546218271273,
                                     0.00833056343336287};
  if (k <= 9) return kTail[static_cast<int>(k)];
  const double kp1sq = (k + 1) * (k + 1);
  return (1.0 / 12 - (1.0 / 360 - 1.0 / 1260 / kp1sq) / kp1sq) / (k + 1);
}

// Hormann (1993), "The generation of binomial random variates", algorithm BTRS.
std::uint64_t binomial_btrs(CounterRng& rng, std::uint64_t trials, double p) {
  const auto n = static_cast<double>(trials);
  const double spq = std::sqrt(n * p * (1 - p));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = n * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / (1 - p);
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double m = std::floor((n + 1) * p);

  while (true) {
    const double u = rng.uniform() - 0.5;
    double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2 * a / us + b) * u + c);
    if (k < 0 || k > n) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
    if (v == 0.0) continue;
    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound = (m + 0.5) * std::log((m + 1) / (r * (n - m + 1))) +
                         (n + 1) * std::log((n - m + 1) / (n - k + 1)) +
                         (k + 0.5) * std::log(r * (n - k + 1) / (k + 1)) + stirling_tail(m) +
                         stirling_tail(n - m) - stirling_tail(k) - stirling_tail(n - k);
    if (v <= bound) return static_cast<std::uint64_t>(k);
  }
}

}  // namespace

std::uint64_t sample_binomial(CounterRng& rng, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  const bool flip = p > 0.5;
  const double q = flip ? 1.0 - p : p;
  const double work = static_cast<double>(trials) * q;
  // BTRS needs n q >= 10 for its hat to dominate.
  const std::uint64_t draw = (work <= kBinomialInversionLimit || work < 10)
                                 ? binomial_inversion(rng, trials, q)
                                 : binomial_btrs(rng, trials, q);
  return flip ? trials - draw : draw;
}

}  // namespace kneser
