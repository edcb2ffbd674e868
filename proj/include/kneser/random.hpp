#pragma once

// Seeded random streams. Every stream is a pure function of a 64-bit key, so
// draws never depend on thread scheduling or enumeration order.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>

namespace kneser {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-sensitive combination of a seed with further words.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = splitmix64(seed);
  for (auto w : words) h = splitmix64(h ^ splitmix64(w + 0x632be59bd9b4e019ULL));
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::span<const std::uint32_t> words) noexcept;

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Counter-based stream: the i-th output is splitmix64(key + i * golden).
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) noexcept : key_(splitmix64(key)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++); }

  double uniform() noexcept { return to_unit((*this)()); }

  /// Uniform integer in [0, bound), bound > 0. Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound) noexcept;

  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Exact Binomial(trials, p) variate. Inversion when trials * min(p, 1-p) is
/// at most kBinomialInversionLimit, Hormann's BTRS transformed rejection otherwise.
std::uint64_t sample_binomial(CounterRng& rng, std::uint64_t trials, double p);

inline constexpr double kBinomialInversionLimit = 1e6;

}  // namespace kneser
