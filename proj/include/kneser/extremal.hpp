#pragma once

// Lexicographic initial families and exhaustive checks of the extremal
// statements about them, plus the classical p = 1 values (EKR, EMC).

#include <cstdint>
#include <optional>

#include "kneser/combinatorics.hpp"
#include "kneser/solver.hpp"

namespace kneser {

inline constexpr std::uint64_t kExhaustiveFamilyBudget = 10'000'000;
inline constexpr std::uint64_t kMaximaEnumerationCap = 1'000'000;

/// The s lex-smallest k-subsets of [n]. Throws std::out_of_range unless 1 <= s <= C(n,k).
Family lex_initial_family(int n, int k, std::uint64_t s);

struct MinimalityReport {
  int n = 0, k = 0, r = 0;
  std::uint64_t s = 0;
  std::uint64_t lex_edges = 0;
  std::uint64_t min_edges = 0;
  bool min_attained_by_lex = false;
  std::uint64_t families_enumerated = 0;
  bool exhaustive = true;    // false when the family budget forced a partial check
  int stars_needed = 0;      // smallest l with s <= C(n,k) - C(n-l,k)
  /// n > 108 k^2 (l + k) for r = 2. For r >= 3 the hypothesis carries an
  /// unspecified constant and is left unset.
  std::optional<bool> theorem_hypothesis_holds;
};

/// Compares the induced r-edge count of L_{n,k}(s) with every s-subset of C([n],k).
/// Past family_budget families the check stops and reports exhaustive = false.
MinimalityReport verify_lex_minimality(int n, int k, int r, std::uint64_t s,
                                       std::uint64_t family_budget = kExhaustiveFamilyBudget);

/// m * prod_{i=1}^{q-1} C(n-ik-q+i, k-1). Throws std::out_of_range unless q >= 2 and 1 <= m <= C(n-q, k-1).
BigInt corollary_lower_bound(int n, int k, int q, std::uint64_t m);

/// Whether L_{n,k}(N_1 + ... + N_{q-1} + m) induces at least corollary_lower_bound edges of KG^q.
bool check_corollary_on_lex(int n, int k, int q, std::uint64_t m);

struct OracleRecord {
  std::uint64_t alpha = 0;
  BigInt formula_value;
  bool matches_formula = false;
  std::uint64_t maximum_sets_found = 0;
  /// Every maximum independent set is a union of r - 1 stars; unset when the
  /// enumeration hit its cap.
  std::optional<bool> all_maximum_trivial;
  bool witness_independent = false;
  bool frankl_regime = false;
};

/// Exact alpha of KG_{n,k} against C(n-1,k-1), with every maximum independent set enumerated.
OracleRecord ekr_oracle(int n, int k, std::uint64_t solver_budget = kDefaultSolverBudget);

/// Exact alpha of KG^r_{n,k} against max{C(rk-1,k), C(n,k)-C(n-r+1,k)}.
OracleRecord emc_oracle(int n, int k, int r, std::uint64_t solver_budget = kDefaultSolverBudget);

/// KG^r_{n,k} with every edge kept.
SampledHypergraph complete_hypergraph(const Params& params);

}  // namespace kneser
