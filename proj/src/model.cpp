#include "kneser/model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace kneser {

namespace {

constexpr std::uint64_t kByCountStreamTag = 0x6279636f756e74ULL;  // "bycount"

std::uint64_t edge_count_u64(const Params& params) {
  const BigInt total = total_edge_count(params);
  if (total > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw BudgetExceeded("edge count does not fit in 63 bits");
  return total.convert_to<std::uint64_t>();
}

// Enumerates r-subsets of `masks` (positions in increasing order) that are pairwise disjoint.
template <typename Visit>
void enumerate_disjoint(std::span<const std::uint64_t> masks, int r, std::uint64_t node_budget, Visit&& visit) {
  std::vector<std::vector<std::uint32_t>> candidates(static_cast<std::size_t>(r));
  std::vector<VertexId> chosen(static_cast<std::size_t>(r));
  candidates[0].resize(masks.size());
  std::iota(candidates[0].begin(), candidates[0].end(), 0U);
  std::uint64_t nodes = 0;

  auto descend = [&](auto&& self, int depth) -> void {
    const auto& pool = candidates[static_cast<std::size_t>(depth)];
    if (depth == r - 1) {
      for (auto v : pool) {
        chosen[static_cast<std::size_t>(depth)] = v;
        visit(std::span<const VertexId>(chosen));
      }
      return;
    }
    auto& next = candidates[static_cast<std::size_t>(depth) + 1];
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (++nodes > node_budget) throw BudgetExceeded("edge enumeration exceeded its node budget");
      const auto v = pool[i];
      chosen[static_cast<std::size_t>(depth)] = v;
      next.clear();
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if ((masks[pool[j]] & masks[v]) == 0) next.push_back(pool[j]);
      if (next.size() + 1 + static_cast<std::size_t>(depth) >= static_cast<std::size_t>(r)) self(self, depth + 1);
    }
  };
  if (r == 1) {
    for (std::uint32_t v = 0; v < masks.size(); ++v) {
      chosen[0] = v;
      visit(std::span<const VertexId>(chosen));
    }
    return;
  }
  descend(descend, 0);
}

}  // namespace

std::vector<std::uint64_t> vertex_masks(int n, int k) {
  const std::uint64_t count = binomial_u64(n, k);
  if (count > kMaxVertices) throw BudgetExceeded("vertex set too large to materialize");
  std::vector<std::uint64_t> masks;
  masks.reserve(count);
  // Walk the lex order directly: next k-combination of bit positions.
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    std::uint64_t m = 0;
    for (int e : c) m |= std::uint64_t{1} << e;
    masks.push_back(m);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
  }
  return masks;
}

// ---------------------------------------------------------------------------

Edge::Edge(std::vector<KSubset> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("Edge: no members");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (!are_disjoint(members_[i], members_[j])) throw std::invalid_argument("Edge: members not pairwise disjoint");
}

std::vector<VertexId> Edge::key() const {
  std::vector<VertexId> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(static_cast<VertexId>(lex_rank(m)));
  return out;
}

void EdgeSet::push_back(std::span<const VertexId> key) {
  if (key.size() != static_cast<std::size_t>(r_)) throw std::invalid_argument("EdgeSet: key of wrong arity");
  data_.insert(data_.end(), key.begin(), key.end());
}

void EdgeSet::canonicalize() {
  const std::size_t count = size();
  const auto r = static_cast<std::size_t>(r_);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto key_of = [&](std::size_t i) { return std::span<const VertexId>(data_.data() + i * r, r); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ka = key_of(a), kb = key_of(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  std::vector<VertexId> sorted;
  sorted.reserve(data_.size());
  for (std::size_t idx = 0; idx < count; ++idx) {
    auto key = key_of(order[idx]);
    if (idx > 0) {
      auto prev = key_of(order[idx - 1]);
      if (std::equal(key.begin(), key.end(), prev.begin())) continue;
    }
    sorted.insert(sorted.end(), key.begin(), key.end());
  }
  data_ = std::move(sorted);
}

bool EdgeSet::contains(std::span<const VertexId> key) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto k = (*this)[mid];
    if (std::lexicographical_compare(k.begin(), k.end(), key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == size()) return false;
  auto k = (*this)[lo];
  return std::equal(k.begin(), k.end(), key.begin(), key.end());
}

std::string_view to_string(SamplerKind kind) noexcept {
  return kind == SamplerKind::explicit_enumeration ? "explicit" : "by-count";
}

SamplerKind parse_sampler_kind(std::string_view text) {
  if (text == "explicit") return SamplerKind::explicit_enumeration;
  if (text == "by-count" || text == "by_count") return SamplerKind::by_count;
  throw std::invalid_argument("unknown sampler kind: " + std::string(text));
}

// ---------------------------------------------------------------------------

Family star(const Params& params, int x) {
  if (x < 1 || x > params.n()) throw std::out_of_range("star: centre outside [n]");
  const std::uint64_t bit = std::uint64_t{1} << (x - 1);
  std::vector<KSubset> members;
  for (auto m : vertex_masks(params.n(), params.k()))
    if (m & bit) members.push_back(KSubset::from_bits(params.n(), m));
  return Family(params.n(), params.k(), std::move(members));
}

Family star_union(const Params& params, std::span<const int> centers) {
  if (centers.size() != static_cast<std::size_t>(params.r() - 1))
    throw std::invalid_argument("star_union: need exactly r - 1 centres");
  std::uint64_t q = 0;
  for (int x : centers) {
    if (x < 1 || x > params.n()) throw std::invalid_argument("star_union: centre outside [n]");
    const std::uint64_t bit = std::uint64_t{1} << (x - 1);
    if (q & bit) throw std::invalid_argument("star_union: repeated centre");
    q |= bit;
  }
  std::vector<KSubset> members;
  for (auto m : vertex_masks(params.n(), params.k()))
    if (m & q) members.push_back(KSubset::from_bits(params.n(), m));
  return Family(params.n(), params.k(), std::move(members));
}

std::uint64_t count_disjoint_tuples(std::span<const std::uint64_t> masks, int r, std::uint64_t node_budget) {
  if (r < 1) throw std::invalid_argument("induced_edge_count: r must be positive");
  std::uint64_t count = 0;
  enumerate_disjoint(masks, r, node_budget, [&](std::span<const VertexId>) { ++count; });
  return count;
}

std::uint64_t induced_edge_count(const Family& family, int r, std::uint64_t node_budget) {
  std::vector<std::uint64_t> masks;
  masks.reserve(family.size());
  for (const auto& m : family) masks.push_back(m.bits());
  return count_disjoint_tuples(masks, r, node_budget);
}

std::uint64_t trivial_plus_one_edge_count(const Params& params, std::span<const int> centers, const KSubset& a) {
  Family family = star_union(params, centers);
  if (family.contains(a)) throw std::invalid_argument("trivial_plus_one_edge_count: A lies in S_Q");
  family.insert(a);
  return induced_edge_count(family, params.r());
}

BigInt total_edge_count(const Params& params) {
  BigInt ordered = 1, r_factorial = 1;
  for (int i = 0; i < params.r(); ++i) {
    ordered *= binomial(params.n() - i * params.k(), params.k());
    r_factorial *= i + 1;
  }
  return ordered / r_factorial;
}

void for_each_edge(const Params& params, const std::vector<std::uint64_t>& masks,
                   const std::function<void(std::span<const VertexId>)>& visit) {
  enumerate_disjoint(masks, params.r(), std::numeric_limits<std::uint64_t>::max(), visit);
}

Edge sample_uniform_edge(const Params& params, CounterRng& rng) {
  const int n = params.n(), k = params.k(), r = params.r();
  if (n < r * k) throw std::invalid_argument("sample_uniform_edge: requires n >= rk");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<KSubset> members;
  members.reserve(static_cast<std::size_t>(r));
  std::size_t used = 0;
  for (int i = 0; i < r; ++i) {
    // Partial Fisher-Yates over pool[used..n): the next k slots become a uniform k-subset.
    std::uint64_t bits = 0;
    for (int j = 0; j < k; ++j, ++used) {
      const auto pick = used + rng.below(pool.size() - used);
      std::swap(pool[used], pool[pick]);
      bits |= std::uint64_t{1} << (pool[used] - 1);
    }
    members.push_back(KSubset::from_bits(n, bits));
  }
  return Edge(std::move(members));
}

double edge_uniform(std::uint64_t seed, std::span<const VertexId> key) noexcept {
  return to_unit(derive_seed(seed, key));
}

SampledHypergraph sample_explicit(const Params& params, double p, std::uint64_t seed, std::uint64_t edge_budget) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_explicit: p outside [0, 1]");
  if (total_edge_count(params) > BigInt(edge_budget))
    throw BudgetExceeded("explicit sampler: edge count exceeds budget; use the by-count sampler");
  SampledHypergraph out{params, p, seed, SamplerKind::explicit_enumeration, EdgeSet(params.r())};
  if (p == 0.0) return out;
  const auto masks = vertex_masks(params.n(), params.k());
  enumerate_disjoint(masks, params.r(), std::numeric_limits<std::uint64_t>::max(),
                     [&](std::span<const VertexId> key) {
                       if (edge_uniform(seed, key) < p) out.retained.push_back(key);
                     });
  return out;
}

SampledHypergraph sample_by_count(const Params& params, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_by_count: p outside [0, 1]");
  SampledHypergraph out{params, p, seed, SamplerKind::by_count, EdgeSet(params.r())};
  const std::uint64_t total = edge_count_u64(params);
  CounterRng rng(derive_seed(seed, {kByCountStreamTag}));
  const std::uint64_t m = sample_binomial(rng, total, p);
  if (m == 0) return out;

  // Past half the edges, draw the complement instead: a uniform (|E| - m)-subset
  // of excluded edges leaves a uniform m-subset of retained ones.
  const bool complement = m > total / 2 && total <= kExplicitSamplerBudget;
  const std::uint64_t draws = complement ? total - m : m;

  struct KeyHash {
    std::size_t operator()(const std::vector<VertexId>& key) const noexcept {
      return static_cast<std::size_t>(derive_seed(0, key));
    }
  };
  std::unordered_set<std::vector<VertexId>, KeyHash> chosen;
  chosen.reserve(static_cast<std::size_t>(draws));
  std::uint64_t duplicates = 0;
  while (chosen.size() < draws) {
    auto key = sample_uniform_edge(params, rng).key();
    if (chosen.insert(std::move(key)).second) {
      duplicates = 0;
    } else if (++duplicates >= kMaxConsecutiveDuplicates) {
      throw BudgetExceeded("by-count sampler: too many consecutive duplicate edges");
    }
  }

  if (complement) {
    const auto masks = vertex_masks(params.n(), params.k());
    std::vector<VertexId> probe;
    enumerate_disjoint(masks, params.r(), std::numeric_limits<std::uint64_t>::max(),
                       [&](std::span<const VertexId> key) {
                         probe.assign(key.begin(), key.end());
                         if (!chosen.contains(probe)) out.retained.push_back(key);
                       });
    return out;
  }
  out.retained.reserve(chosen.size());
  for (const auto& key : chosen) out.retained.push_back(key);
  out.retained.canonicalize();
  return out;
}

SampledHypergraph sample(const Params& params, double p, std::uint64_t seed, SamplerKind kind) {
  return kind == SamplerKind::explicit_enumeration ? sample_explicit(params, p, seed) : sample_by_count(params, p, seed);
}

EdgeSet retained_edges_within(const SampledHypergraph& sample, const Family& family) {
  if (family.n() != sample.params.n() || family.k() != sample.params.k())
    throw std::invalid_argument("retained_edges_within: family over different (n, k)");
  std::vector<bool> inside(sample.vertex_count(), false);
  for (const auto& m : family) inside[lex_rank(m)] = true;
  EdgeSet out(sample.params.r());
  for (std::size_t e = 0; e < sample.retained.size(); ++e) {
    auto key = sample.retained[e];
    if (std::all_of(key.begin(), key.end(), [&](VertexId v) { return inside[v]; })) out.push_back(key);
  }
  return out;
}

}  // namespace kneser
