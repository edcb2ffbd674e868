#pragma once

// Exact independence machinery for r-uniform hypergraphs on the vertex set
// C([n], k): maximum independent sets, minimum hitting sets (the dual), size
// queries, star-union detection and the size-N family classifier.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kneser/combinatorics.hpp"
#include "kneser/model.hpp"

namespace kneser {

inline constexpr std::uint64_t kDefaultSolverBudget = 50'000'000;

enum class SolveStatus { exact, budget_exceeded };
std::string_view to_string(SolveStatus status) noexcept;

struct SolveResult {
  std::optional<std::uint64_t> alpha;  // absent unless status == exact
  Family witness;                      // one maximum independent set when exact
  std::uint64_t nodes_explored = 0;
  SolveStatus status = SolveStatus::exact;
};

struct HittingSetResult {
  std::optional<std::uint64_t> tau;  // absent unless status == exact
  std::vector<VertexId> witness;     // ascending vertex ids
  std::uint64_t nodes_explored = 0;
  SolveStatus status = SolveStatus::exact;
};

enum class Answer { yes, no, unknown };
std::string_view to_string(Answer answer) noexcept;

struct Decision {
  Answer answer = Answer::unknown;
  std::optional<Family> witness;  // an independent set of the requested size when yes
  std::uint64_t nodes_explored = 0;
};

/// True iff no retained edge has all of its members in the family.
bool is_independent(const SampledHypergraph& sample, const Family& family);

/// Minimum number of vertices of [0, vertex_count) meeting every edge. Branches
/// on the vertices of an uncovered edge; a greedy packing of pairwise disjoint
/// uncovered edges is the lower bound.
HittingSetResult min_hitting_set(const EdgeSet& edges, std::uint64_t vertex_count,
                                 std::uint64_t node_budget = kDefaultSolverBudget);

SolveResult max_independent_set(const SampledHypergraph& sample, std::uint64_t node_budget = kDefaultSolverBudget);

/// Whether alpha >= t, stopping at the first independent set of size t.
Decision exists_independent_of_size(const SampledHypergraph& sample, std::uint64_t t,
                                    std::uint64_t node_budget = kDefaultSolverBudget);

/// Q with |Q| = r - 1 and family = S_Q, if one exists.
std::optional<std::vector<int>> is_trivial_union(const Family& family, const Params& params);

/// Whether some independent set of size exactly t is not a union of r - 1 stars.
/// unknown when the budget runs out first.
Decision exists_nontrivial_independent_of_size(const SampledHypergraph& sample, std::uint64_t t,
                                               std::uint64_t node_budget = kDefaultSolverBudget);

/// Visits every independent set of size exactly t, each once, in a
/// deterministic order. The visitor returns false to stop early; a budget
/// overrun leaves both completed and stopped false.
struct EnumerationOutcome {
  bool completed = false;  // every size-t independent set was visited
  bool stopped = false;    // the visitor asked to stop
  std::uint64_t visited = 0;
  std::uint64_t nodes_explored = 0;
};
EnumerationOutcome enumerate_independent_sets(const SampledHypergraph& sample, std::uint64_t t,
                                              const std::function<bool(const Family&)>& visit,
                                              std::uint64_t node_budget = kDefaultSolverBudget);

enum class FamilyClass { trivial, C1, C2, C3 };
std::string_view to_string(FamilyClass label) noexcept;

struct Classification {
  FamilyClass label;
  std::vector<int> x_order;          // x_1..x_n, by |A_x| descending, ties to the smaller element
  std::vector<std::int64_t> z;       // z_1..z_{r-1}
  std::vector<std::uint64_t> degrees;  // |A_x| for x = 1..n
};

/// Classifies a family of size exactly N. Throws std::invalid_argument on other sizes.
Classification classify_family(const Family& family, const Params& params);

}  // namespace kneser
