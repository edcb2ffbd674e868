#pragma once

// The Kneser hypergraph KG^r_{n,k}: vertices are k-subsets of [n] addressed by
// lex rank, edges are r pairwise disjoint vertices. Includes the random model
// KG^r_{n,k}(p) with two samplers that agree in distribution.

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "kneser/combinatorics.hpp"
#include "kneser/errors.hpp"
#include "kneser/random.hpp"

namespace kneser {

using VertexId = std::uint32_t;

/// Vertices beyond this many are not materialized.
inline constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kExplicitSamplerBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultCountBudget = 4'000'000'000ULL;
inline constexpr std::uint64_t kMaxConsecutiveDuplicates = 10'000;

/// Bitmask of every vertex, indexed by lex rank. Throws BudgetExceeded above kMaxVertices.
std::vector<std::uint64_t> vertex_masks(int n, int k);

/// r pairwise disjoint k-subsets, held in increasing lex order.
class Edge {
 public:
  /// Throws std::invalid_argument unless the members are pairwise disjoint and share (n, k).
  explicit Edge(std::vector<KSubset> members);

  const std::vector<KSubset>& members() const noexcept { return members_; }
  std::size_t r() const noexcept { return members_.size(); }
  /// Ascending lex ranks; the canonical identity of the edge.
  std::vector<VertexId> key() const;

 private:
  std::vector<KSubset> members_;
};

/// Flat list of canonical edge keys, r ranks per edge.
class EdgeSet {
 public:
  explicit EdgeSet(int r = 2) : r_(r) {}

  int r() const noexcept { return r_; }
  std::size_t size() const noexcept { return data_.size() / static_cast<std::size_t>(r_); }
  bool empty() const noexcept { return data_.empty(); }

  std::span<const VertexId> operator[](std::size_t i) const noexcept {
    return {data_.data() + i * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }
  const std::vector<VertexId>& data() const noexcept { return data_; }

  /// Appends a key; the caller keeps it ascending.
  void push_back(std::span<const VertexId> key);
  void reserve(std::size_t edges) { data_.reserve(edges * static_cast<std::size_t>(r_)); }
  /// Sorts keys lexicographically and drops repeats.
  void canonicalize();
  /// Binary search; requires canonical order.
  bool contains(std::span<const VertexId> key) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int r_;
  std::vector<VertexId> data_;
};

enum class SamplerKind { explicit_enumeration, by_count };

std::string_view to_string(SamplerKind kind) noexcept;
/// Accepts "explicit", "by-count" and "by_count". Throws std::invalid_argument otherwise.
SamplerKind parse_sampler_kind(std::string_view text);

/// A realization of KG^r_{n,k}(p). Regenerating from (params, p, seed, kind) reproduces it exactly.
struct SampledHypergraph {
  Params params;
  double p;
  std::uint64_t seed;
  SamplerKind sampler_kind;
  EdgeSet retained;

  std::uint64_t vertex_count() const { return binomial_u64(params.n(), params.k()); }
};

// ---------------------------------------------------------------------------

/// S_x, lex sorted. Throws std::out_of_range unless 1 <= x <= n.
Family star(const Params& params, int x);

/// Union of the stars centred on Q. Throws std::invalid_argument unless |Q| = r - 1 with distinct elements of [n].
Family star_union(const Params& params, std::span<const int> centers);

/// Number of r-subsets of the family that are pairwise disjoint, by backtracking
/// over members in lex order. Throws BudgetExceeded once more than node_budget
/// search nodes have been expanded.
std::uint64_t induced_edge_count(const Family& family, int r, std::uint64_t node_budget = kDefaultCountBudget);

/// The same count over raw member masks.
std::uint64_t count_disjoint_tuples(std::span<const std::uint64_t> masks, int r,
                                    std::uint64_t node_budget = kDefaultCountBudget);

/// Brute-force edge count inside S_Q with A added. Throws std::invalid_argument when A lies in S_Q.
std::uint64_t trivial_plus_one_edge_count(const Params& params, std::span<const int> centers, const KSubset& a);

/// |E(KG^r_{n,k})| from the closed form.
BigInt total_edge_count(const Params& params);

/// Calls visit(key) for every edge of KG^r_{n,k} in canonical order.
void for_each_edge(const Params& params, const std::vector<std::uint64_t>& masks,
                   const std::function<void(std::span<const VertexId>)>& visit);

/// Uniform edge of KG^r_{n,k}: A_1 uniform in C([n],k), A_2 uniform among
/// k-subsets of the remaining elements, and so on. Requires n >= rk.
Edge sample_uniform_edge(const Params& params, CounterRng& rng);

/// Per-edge Bernoulli(p) with the uniform keyed by (seed, edge key). Throws
/// BudgetExceeded above edge_budget edges; use sample_by_count there.
SampledHypergraph sample_explicit(const Params& params, double p, std::uint64_t seed,
                                  std::uint64_t edge_budget = kExplicitSamplerBudget);

/// m ~ Binomial(|E|, p) followed by m distinct uniform edges.
SampledHypergraph sample_by_count(const Params& params, double p, std::uint64_t seed);

SampledHypergraph sample(const Params& params, double p, std::uint64_t seed, SamplerKind kind);

/// The uniform in [0, 1) that sample_explicit compares against p for this edge.
double edge_uniform(std::uint64_t seed, std::span<const VertexId> key) noexcept;

/// Retained edges with every member in the family, in canonical order.
EdgeSet retained_edges_within(const SampledHypergraph& sample, const Family& family);

}  // namespace kneser
