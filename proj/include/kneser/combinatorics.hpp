#pragma once

// Subset arithmetic over [n] = {1..n}, the lexicographic order on k-subsets,
// exact binomials, and the closed-form counts attached to KG^r_{n,k}.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kneser {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxGround = 64;

/// Exact C(n, k). Zero when k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// C(n, k) for 0 <= n <= 64 from a precomputed table. Zero outside the range.
std::uint64_t binomial_u64(int n, int k) noexcept;

/// Natural log of C(n, k) via lgamma. Throws std::domain_error unless 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

/// Natural log of a non-negative exact integer, accurate for values far beyond double range.
double log_big(const BigInt& value);

// ---------------------------------------------------------------------------

/// A k-subset of [n] stored as a 64-bit mask; element i lives in bit i-1.
class KSubset {
 public:
  KSubset(int n, std::span<const int> elements);
  KSubset(int n, std::initializer_list<int> elements)
      : KSubset(n, std::span<const int>(elements.begin(), elements.size())) {}

  /// Throws std::invalid_argument if bits has set positions above n or violates 1 <= k, 2k <= n.
  static KSubset from_bits(int n, std::uint64_t bits);

  std::uint64_t bits() const noexcept { return bits_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  bool contains(int element) const noexcept {
    return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U) != 0;
  }
  std::vector<int> elements() const;

  /// "[1,3,7]"
  std::string to_string() const;

  friend bool operator==(const KSubset& a, const KSubset& b) noexcept {
    return a.bits_ == b.bits_ && a.n_ == b.n_;
  }
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b);

 private:
  KSubset(int n, int k, std::uint64_t bits) : bits_(bits), n_(n), k_(k) {}
  static void validate(int n, int k, std::uint64_t bits);

  std::uint64_t bits_ = 0;
  int n_ = 0;
  int k_ = 0;
};

/// A < B iff min(A xor B) lies in A. Throws std::invalid_argument on mismatched (n, k).
std::strong_ordering lex_compare(const KSubset& a, const KSubset& b);

/// Position of the set in the lex order of C([n], k), starting at 0.
std::uint64_t lex_rank(const KSubset& a);
/// Inverse of lex_rank. Throws std::out_of_range when idx >= C(n, k).
KSubset lex_unrank(int n, int k, std::uint64_t idx);

inline bool are_disjoint(const KSubset& a, const KSubset& b) noexcept {
  return (a.bits() & b.bits()) == 0;
}

/// Rank-unrank on raw masks, no validation. Used by hot loops.
std::uint64_t lex_rank_bits(int n, int k, std::uint64_t bits) noexcept;
std::uint64_t lex_unrank_bits(int n, int k, std::uint64_t idx) noexcept;

// ---------------------------------------------------------------------------

/// Duplicate-free collection of k-subsets sharing (n, k), held in lex order.
class Family {
 public:
  Family(int n, int k) : n_(n), k_(k) {}
  /// Throws std::invalid_argument on duplicates or heterogeneous (n, k).
  Family(int n, int k, std::vector<KSubset> members);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<KSubset>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const KSubset& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const KSubset& a) const;
  /// Inserts in lex position; returns false if already present.
  bool insert(const KSubset& a);
  bool erase(const KSubset& a);

  std::vector<std::uint64_t> ranks() const;
  static Family from_ranks(int n, int k, std::span<const std::uint64_t> ranks);

  std::string to_string() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_;
  int k_;
  std::vector<KSubset> members_;
};

// ---------------------------------------------------------------------------

/// (n, k, r) for a Kneser hypergraph with the derived regime flags.
class Params {
 public:
  /// Requires k >= 2, r >= 2, 2k <= n <= 64.
  Params(int n, int k, int r);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int r() const noexcept { return r_; }

  /// n >= r(k + 1/2): the conjectured maximum is C(n,k) - C(n-r+1,k).
  bool emc_regime() const noexcept { return emc_regime_; }
  /// n >= (2r-1)k - r + 1: the value above is a theorem.
  bool frankl_regime() const noexcept { return frankl_regime_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int n_;
  int k_;
  int r_;
  bool emc_regime_;
  bool frankl_regime_;
};

struct DerivedQuantities {
  BigInt V;                  // C(n,k)
  BigInt N;                  // C(n,k) - C(n-r+1,k)
  std::vector<BigInt> N_i;   // C(n-i,k-1), i = 1..r-1
  BigInt M;                  // prod_{i=1}^{r-1} C(n-ik-(r-i), k-1)
  BigInt H;                  // C(n-1,k-1) - C(n-k-1,k-1)
  BigInt total_edges;        // (1/r!) prod_{i=0}^{r-1} C(n-ik, k)
  BigInt trivial_plus_one;   // C(n,r-1) * C(n-r+1,k), the number of (Q, A) pairs

  double log_V = 0;
  double log_N = 0;
  double log_M = 0;
  double log_total_edges = 0;
  double log_trivial_plus_one = 0;

  /// ln(trivial_plus_one) / M; infinity when M = 0.
  double p_c = 0;
  bool p_c_exceeds_one = false;
};

DerivedQuantities derive(const Params& params);

/// Edge count inside S_Q with one extra set A; the exponent in the (Q, A) expectation.
BigInt trivial_plus_one_edge_product(int n, int k, int r);

struct CriticalProbability {
  double value;
  bool exceeds_one;
};

/// ln(C(n,r-1) C(n-r+1,k)) / M in the log domain. Throws std::domain_error outside the emc regime.
CriticalProbability p_critical(const Params& params);

/// C(n,r-1) C(n-r+1,k) (1-p)^M. Throws std::domain_error unless 0 <= p <= 1.
double expected_trivial_plus_one(const Params& params, double p);

enum class EmcBranch { matching, stars };

struct EmcValue {
  BigInt value;
  EmcBranch branch;  // which term attains max{C(rk-1,k), C(n,k)-C(n-r+1,k)}; stars on ties
};

/// Conjectured independence number of KG^r_{n,k}. Throws std::domain_error when n < rk-1.
EmcValue emc_value(const Params& params);

/// C(n-1,k-1) - C(n-k-1,k-1) + 1. Throws std::domain_error unless n > 2k.
BigInt hilton_milner_bound(int n, int k);

/// Smallest l >= 1 with s <= C(n,k) - C(n-l,k); nullopt when s > C(n,k).
std::optional<int> star_count_for_size(int n, int k, const BigInt& s);

}  // namespace kneser
