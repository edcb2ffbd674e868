#include "kneser/solver.hpp"

#include <algorithm>
#include <numeric>

#include "bitset.hpp"

namespace kneser {

using detail::Bitset;

std::string_view to_string(SolveStatus status) noexcept {
  return status == SolveStatus::exact ? "exact" : "budget_exceeded";
}

std::string_view to_string(Answer answer) noexcept {
  switch (answer) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    default: return "unknown";
  }
}

std::string_view to_string(FamilyClass label) noexcept {
  switch (label) {
    case FamilyClass::trivial: return "trivial";
    case FamilyClass::C1: return "C1";
    case FamilyClass::C2: return "C2";
    default: return "C3";
  }
}

namespace {

struct OutOfBudget {};

// Search over independent sets of an r-uniform hypergraph. Two modes share one
// driver: maximize (beat an incumbent size) and enumerate (every independent
// set of exactly `target` vertices). For r = 2 the kernel is a colour-bounded
// clique search on the complement (each colour class is a clique of the graph,
// so it holds at most one vertex of an independent set). For r >= 3 it is an
// include/exclude branching bounded by |P| minus a greedy packing of residual
// edges.
class IndependenceSearch {
 public:
  IndependenceSearch(std::size_t vertex_count, const EdgeSet& edges, std::uint64_t budget)
      : n_(vertex_count), r_(edges.r()), budget_(budget) {
    if (r_ == 2) {
      build_graph(edges);
    } else {
      build_hypergraph(edges);
    }
  }

  // Returns the best set, at least as large as `incumbent`.
  std::vector<VertexId> maximize(std::vector<VertexId> incumbent) {
    enumerate_ = false;
    best_ = std::move(incumbent);
    need_ = best_.size() + 1;
    current_.clear();
    run();
    return best_;
  }

  void enumerate(std::size_t target, const std::function<bool(std::span<const VertexId>)>& visit) {
    enumerate_ = true;
    need_ = target;
    visit_ = &visit;
    stopped_ = false;
    current_.clear();
    if (target == 0) {
      stopped_ = !visit({});
      return;
    }
    run();
  }

  bool stopped() const noexcept { return stopped_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void tick() {
    if (++nodes_ > budget_) throw OutOfBudget{};
  }

  void run() {
    Bitset all(n_);
    all.set_all();
    if (n_ == 0) {
      if (!enumerate_ && need_ == 0) best_.clear();
      return;
    }
    if (r_ == 2) {
      // One scratch slot per depth; sized up front so references stay valid.
      order_.resize(n_ + 1);
      colour_.resize(n_ + 1);
      branch_.resize(n_ + 1);
      expand_graph(all, 0);
    } else {
      hyper_counts_.assign(hyper_edges_.size() / static_cast<std::size_t>(r_), 0);
      expand_hyper(all);
    }
  }

  // Records C when it beats or meets the goal. Returns true when the search should halt.
  bool reached() {
    if (enumerate_) {
      if (current_.size() != need_) return false;
      std::vector<VertexId> ids;
      ids.reserve(current_.size());
      for (auto v : current_) ids.push_back(original_[v]);
      std::sort(ids.begin(), ids.end());
      if (!(*visit_)(ids)) stopped_ = true;
      return stopped_;
    }
    if (current_.size() >= need_) {
      best_.clear();
      for (auto v : current_) best_.push_back(original_[v]);
      std::sort(best_.begin(), best_.end());
      need_ = best_.size() + 1;
    }
    return false;
  }

  // ---- r = 2 ---------------------------------------------------------------

  void build_graph(const EdgeSet& edges) {
    std::vector<std::uint32_t> degree(n_, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      ++degree[edges[e][0]];
      ++degree[edges[e][1]];
    }
    // Ascending degree: vertices with few conflicts get low indices and are coloured first.
    original_.resize(n_);
    std::iota(original_.begin(), original_.end(), 0U);
    std::stable_sort(original_.begin(), original_.end(),
                     [&](VertexId a, VertexId b) { return degree[a] < degree[b]; });
    std::vector<VertexId> position(n_);
    for (std::size_t i = 0; i < n_; ++i) position[original_[i]] = static_cast<VertexId>(i);
    adjacency_.assign(n_, Bitset(n_));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto a = position[edges[e][0]], b = position[edges[e][1]];
      adjacency_[a].set(b);
      adjacency_[b].set(a);
    }
  }

  // Greedy partition of P into cliques of the graph; order/colour are filled
  // with colours non-decreasing along the order.
  void colour_sort(const Bitset& p, std::vector<VertexId>& order, std::vector<std::uint32_t>& colour) {
    order.clear();
    colour.clear();
    auto& uncoloured = uncoloured_;
    auto& candidates = candidates_;
    uncoloured = p;
    std::uint32_t c = 0;
    const std::size_t words = p.word_count();
    std::size_t low_word = 0;  // words below this one are empty in `uncoloured`
    std::uint64_t* un = uncoloured.data();
    while (true) {
      while (low_word < words && un[low_word] == 0) ++low_word;
      if (low_word == words) break;
      ++c;
      candidates = uncoloured;
      std::uint64_t* cand = candidates.data();
      std::size_t w = low_word;
      while (true) {
        while (w < words && cand[w] == 0) ++w;
        if (w == words) break;
        const std::size_t v = (w << 6) + static_cast<std::size_t>(std::countr_zero(cand[w]));
        un[w] &= ~(std::uint64_t{1} << (v & 63));
        const std::uint64_t* a = adjacency_[v].data();
        cand[w] &= a[w] & ~(std::uint64_t{1} << (v & 63));
        for (std::size_t x = w + 1; x < words; ++x) cand[x] &= a[x];
        order.push_back(static_cast<VertexId>(v));
        colour.push_back(c);
      }
    }
  }

  // Vertices of colour >= k_min are branching candidates. A candidate v is
  // dropped when unit propagation over the lower classes shows that v plus a
  // set of those classes holds no more independent vertices than classes
  // (each lower class is used by at most one such argument).
  void select_branching(const std::vector<VertexId>& order, const std::vector<std::uint32_t>& colour,
                        std::size_t k_min, std::vector<VertexId>& branch) {
    branch.clear();
    if (k_min <= 1) {
      branch = order;
      return;
    }
    const std::size_t low = k_min - 1;
    class_start_.clear();
    std::size_t i = 0;
    for (; i < order.size() && colour[i] <= low; ++i)
      if (i == 0 || colour[i] != colour[i - 1]) class_start_.push_back(i);
    const std::size_t classes = class_start_.size();
    class_start_.push_back(i);
    used_.assign(classes, false);
    for (; i < order.size(); ++i)
      if (!absorb(order[i], order, classes)) branch.push_back(order[i]);
  }

  bool absorb(VertexId v, const std::vector<VertexId>& order, std::size_t classes) {
    // compat_ holds the vertices independent of v and of every forced vertex.
    compat_ = adjacency_[v];
    std::uint64_t* m = compat_.data();
    for (std::size_t w = 0; w < compat_.word_count(); ++w) m[w] = ~m[w];
    state_.assign(classes, 0);
    involved_.clear();
    while (true) {
      std::size_t unit = classes;
      VertexId unit_vertex = 0;
      for (std::size_t c = 0; c < classes; ++c) {
        if (used_[c] || state_[c]) continue;
        std::size_t seen = 0;
        VertexId where = 0;
        for (std::size_t j = class_start_[c]; j < class_start_[c + 1] && seen < 2; ++j)
          if (compat_.test(order[j])) {
            ++seen;
            where = order[j];
          }
        if (seen == 0) {
          involved_.push_back(c);
          for (auto d : involved_) used_[d] = true;
          return true;
        }
        if (seen == 1 && unit == classes) {
          unit = c;
          unit_vertex = where;
        }
      }
      if (unit == classes) return false;
      state_[unit] = 1;
      involved_.push_back(unit);
      compat_.and_not(adjacency_[unit_vertex]);
    }
  }

  void expand_graph(Bitset p, std::size_t depth) {
    tick();
    auto& order = order_[depth];
    auto& colour = colour_[depth];
    auto& branch = branch_[depth];
    colour_sort(p, order, colour);
    const std::size_t k_min = need_ > current_.size() ? need_ - current_.size() : 0;
    select_branching(order, colour, k_min, branch);
    for (std::size_t i = branch.size(); i-- > 0;) {
      const auto v = branch[i];
      current_.push_back(v);
      if (reached()) return;
      if (!(enumerate_ && current_.size() == need_)) {
        Bitset next = p;
        next.reset(v);
        next.and_not(adjacency_[v]);
        if (!next.none()) {
          expand_graph(std::move(next), depth + 1);
          if (stopped_) return;
        }
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  // ---- r >= 3 --------------------------------------------------------------

  void build_hypergraph(const EdgeSet& edges) {
    original_.resize(n_);
    std::iota(original_.begin(), original_.end(), 0U);
    hyper_edges_ = edges.data();
    incident_.assign(n_, {});
    for (std::size_t e = 0; e < edges.size(); ++e)
      for (auto v : edges[e]) incident_[v].push_back(static_cast<std::uint32_t>(e));
  }

  std::span<const VertexId> hyper_edge(std::size_t e) const {
    return {hyper_edges_.data() + e * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }

  // Upper bound on independent vertices still addable from P.
  std::size_t hyper_bound(const Bitset& p) {
    Bitset free = p;
    std::size_t packed = 0;
    const std::size_t edge_count = hyper_counts_.size();
    for (std::size_t e = 0; e < edge_count; ++e) {
      auto key = hyper_edge(e);
      std::size_t in_p = 0;
      bool usable = true;
      for (auto v : key) {
        if (free.test(v)) {
          ++in_p;
        } else if (!in_current_[v]) {
          usable = false;
          break;
        }
      }
      if (!usable || in_p + hyper_counts_[e] != static_cast<std::size_t>(r_) || in_p == 0) continue;
      for (auto v : key)
        if (!in_current_[v]) free.reset(v);
      ++packed;
    }
    return p.count() - packed;
  }

  void expand_hyper(Bitset p) {
    if (in_current_.size() != n_) in_current_.assign(n_, false);
    tick();
    if (reached()) return;
    if (enumerate_ && current_.size() == need_) return;
    if (p.none()) return;
    if (current_.size() + hyper_bound(p) < need_) return;

    const auto v = p.first();
    p.reset(v);

    // Include v: any edge left with a single vertex outside C loses that vertex.
    Bitset with_v = p;
    current_.push_back(static_cast<VertexId>(v));
    in_current_[v] = true;
    for (auto e : incident_[v]) {
      if (++hyper_counts_[e] == static_cast<std::uint8_t>(r_ - 1)) {
        for (auto u : hyper_edge(e))
          if (!in_current_[u]) with_v.reset(u);
      }
    }
    expand_hyper(std::move(with_v));
    for (auto e : incident_[v]) --hyper_counts_[e];
    in_current_[v] = false;
    current_.pop_back();
    if (stopped_) return;

    expand_hyper(std::move(p));
  }

  std::size_t n_;
  int r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;

  bool enumerate_ = false;
  std::size_t need_ = 0;
  const std::function<bool(std::span<const VertexId>)>* visit_ = nullptr;
  bool stopped_ = false;
  std::vector<VertexId> best_;
  std::vector<VertexId> current_;  // internal ids
  std::vector<VertexId> original_;

  std::vector<Bitset> adjacency_;
  std::vector<std::vector<VertexId>> order_;
  std::vector<std::vector<std::uint32_t>> colour_;
  std::vector<std::vector<VertexId>> branch_;
  std::vector<std::size_t> class_start_;
  Bitset uncoloured_, candidates_, compat_;
  std::vector<bool> used_;
  std::vector<std::uint8_t> state_;
  std::vector<std::size_t> involved_;

  std::vector<VertexId> hyper_edges_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint8_t> hyper_counts_;
  std::vector<bool> in_current_;
};

Family family_from_ids(const Params& params, std::span<const VertexId> ids) {
  std::vector<KSubset> members;
  members.reserve(ids.size());
  for (auto v : ids) members.push_back(KSubset::from_bits(params.n(), lex_unrank_bits(params.n(), params.k(), v)));
  return Family(params.n(), params.k(), std::move(members));
}

// S_{1..r-1} truncated to t members; independent in every subhypergraph.
std::vector<VertexId> leading_star_union(const Params& params, std::size_t t) {
  std::uint64_t centres = (std::uint64_t{1} << (params.r() - 1)) - 1;
  const auto masks = vertex_masks(params.n(), params.k());
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < masks.size() && out.size() < t; ++v)
    if (masks[v] & centres) out.push_back(static_cast<VertexId>(v));
  return out;
}

std::size_t trivial_size(const Params& params) {
  return static_cast<std::size_t>(
      binomial_u64(params.n(), params.k()) - binomial_u64(params.n() - params.r() + 1, params.k()));
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_independent(const SampledHypergraph& sample, const Family& family) {
  return retained_edges_within(sample, family).empty();
}

HittingSetResult min_hitting_set(const EdgeSet& edges, std::uint64_t vertex_count, std::uint64_t node_budget) {
  HittingSetResult result;
  const std::size_t m = edges.size();
  const auto r = static_cast<std::size_t>(edges.r());
  if (m == 0) {
    result.tau = 0;
    return result;
  }
  std::vector<std::vector<std::uint32_t>> incident(vertex_count);
  for (std::size_t e = 0; e < m; ++e)
    for (auto v : edges[e]) {
      if (v >= vertex_count) throw std::invalid_argument("min_hitting_set: vertex outside universe");
      incident[v].push_back(static_cast<std::uint32_t>(e));
    }

  std::vector<std::uint32_t> cover(m, 0);
  std::vector<bool> chosen(vertex_count, false), excluded(vertex_count, false);
  std::vector<VertexId> current;

  // Greedy upper bound: repeatedly take the vertex meeting most uncovered edges.
  {
    std::vector<std::uint32_t> gain(vertex_count, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) gain[v] = static_cast<std::uint32_t>(incident[v].size());
    std::vector<bool> covered(m, false);
    std::size_t left = m;
    std::vector<VertexId> greedy;
    while (left > 0) {
      const auto v = static_cast<VertexId>(std::max_element(gain.begin(), gain.end()) - gain.begin());
      greedy.push_back(v);
      for (auto e : incident[v]) {
        if (covered[e]) continue;
        covered[e] = true;
        --left;
        for (auto u : edges[e]) --gain[u];
      }
    }
    std::sort(greedy.begin(), greedy.end());
    result.witness = greedy;
  }
  std::size_t best = result.witness.size();
  std::uint64_t nodes = 0;

  std::vector<bool> packed_vertex(vertex_count, false);
  std::vector<VertexId> touched;

  auto solve = [&](auto&& self) -> void {
    if (++nodes > node_budget) throw OutOfBudget{};
    // Lower bound from pairwise disjoint uncovered edges restricted to available vertices.
    std::size_t packing = 0;
    std::size_t branch_edge = m;
    std::size_t branch_width = r + 1;
    touched.clear();
    for (std::size_t e = 0; e < m; ++e) {
      if (cover[e]) continue;
      std::size_t width = 0;
      bool overlaps = false;
      for (auto v : edges[e]) {
        if (excluded[v]) continue;
        ++width;
        if (packed_vertex[v]) overlaps = true;
      }
      if (width == 0) {
        for (auto v : touched) packed_vertex[v] = false;
        return;
      }
      if (width < branch_width) {
        branch_width = width;
        branch_edge = e;
      }
      if (!overlaps) {
        ++packing;
        for (auto v : edges[e])
          if (!excluded[v]) {
            packed_vertex[v] = true;
            touched.push_back(v);
          }
      }
    }
    for (auto v : touched) packed_vertex[v] = false;
    if (branch_edge == m) {
      if (current.size() < best) {
        best = current.size();
        result.witness = current;
        std::sort(result.witness.begin(), result.witness.end());
      }
      return;
    }
    if (current.size() + packing >= best) return;

    std::vector<VertexId> newly_excluded;
    for (auto v : edges[branch_edge]) {
      if (excluded[v]) continue;
      chosen[v] = true;
      current.push_back(v);
      for (auto e : incident[v]) ++cover[e];
      self(self);
      for (auto e : incident[v]) --cover[e];
      current.pop_back();
      chosen[v] = false;
      excluded[v] = true;
      newly_excluded.push_back(v);
    }
    for (auto v : newly_excluded) excluded[v] = false;
  };

  try {
    solve(solve);
    result.tau = best;
  } catch (const OutOfBudget&) {
    result.status = SolveStatus::budget_exceeded;
    result.witness.clear();
  }
  result.nodes_explored = std::min(nodes, node_budget);
  return result;
}

SolveResult max_independent_set(const SampledHypergraph& sample, std::uint64_t node_budget) {
  const auto& params = sample.params;
  const std::size_t v = sample.vertex_count();
  SolveResult result{std::nullopt, Family(params.n(), params.k()), 0, SolveStatus::exact};
  IndependenceSearch search(v, sample.retained, node_budget);
  std::vector<VertexId> incumbent;
  if (params.emc_regime()) incumbent = leading_star_union(params, trivial_size(params));
  try {
    auto best = search.maximize(std::move(incumbent));
    result.alpha = best.size();
    result.witness = family_from_ids(params, best);
  } catch (const OutOfBudget&) {
    result.status = SolveStatus::budget_exceeded;
  }
  result.nodes_explored = std::min(search.nodes(), node_budget);
  return result;
}

EnumerationOutcome enumerate_independent_sets(const SampledHypergraph& sample, std::uint64_t t,
                                              const std::function<bool(const Family&)>& visit,
                                              std::uint64_t node_budget) {
  const auto& params = sample.params;
  EnumerationOutcome outcome;
  if (t > sample.vertex_count()) {
    outcome.completed = true;
    return outcome;
  }
  IndependenceSearch search(sample.vertex_count(), sample.retained, node_budget);
  const std::function<bool(std::span<const VertexId>)> adapter = [&](std::span<const VertexId> ids) {
    ++outcome.visited;
    return visit(family_from_ids(params, ids));
  };
  try {
    search.enumerate(static_cast<std::size_t>(t), adapter);
    outcome.stopped = search.stopped();
    outcome.completed = !outcome.stopped;
  } catch (const OutOfBudget&) {
  }
  outcome.nodes_explored = std::min(search.nodes(), node_budget);
  return outcome;
}

Decision exists_independent_of_size(const SampledHypergraph& sample, std::uint64_t t, std::uint64_t node_budget) {
  const auto& params = sample.params;
  Decision decision;
  if (t > sample.vertex_count()) {
    decision.answer = Answer::no;
    return decision;
  }
  if (params.emc_regime() && t <= trivial_size(params)) {
    decision.answer = Answer::yes;
    decision.witness = family_from_ids(params, leading_star_union(params, static_cast<std::size_t>(t)));
    return decision;
  }
  auto outcome = enumerate_independent_sets(
      sample, t,
      [&](const Family& f) {
        decision.witness = f;
        return false;
      },
      node_budget);
  decision.nodes_explored = outcome.nodes_explored;
  if (outcome.stopped) {
    decision.answer = Answer::yes;
  } else {
    decision.answer = outcome.completed ? Answer::no : Answer::unknown;
  }
  return decision;
}

std::optional<std::vector<int>> is_trivial_union(const Family& family, const Params& params) {
  if (family.n() != params.n() || family.k() != params.k()) return std::nullopt;
  const int n = params.n(), k = params.k(), r = params.r();
  if (family.size() != trivial_size(params)) return std::nullopt;
  std::vector<std::uint64_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : family)
    for (int x : a.elements()) ++degree[static_cast<std::size_t>(x)];
  const std::uint64_t star_size = binomial_u64(n - 1, k - 1);
  std::vector<int> full;
  for (int x = 1; x <= n; ++x)
    if (degree[static_cast<std::size_t>(x)] == star_size) full.push_back(x);
  // Every S_x in `full` lies inside the family and any r - 1 of them already
  // have N members, so |family| = N forces family = S_Q for those r - 1.
  if (full.size() < static_cast<std::size_t>(r - 1)) return std::nullopt;
  full.resize(static_cast<std::size_t>(r - 1));
  return full;
}

Decision exists_nontrivial_independent_of_size(const SampledHypergraph& sample, std::uint64_t t,
                                               std::uint64_t node_budget) {
  Decision decision;
  auto outcome = enumerate_independent_sets(
      sample, t,
      [&](const Family& f) {
        if (is_trivial_union(f, sample.params)) return true;
        decision.witness = f;
        return false;
      },
      node_budget);
  decision.nodes_explored = outcome.nodes_explored;
  if (outcome.stopped) {
    decision.answer = Answer::yes;
  } else {
    decision.answer = outcome.completed ? Answer::no : Answer::unknown;
  }
  return decision;
}

Classification classify_family(const Family& family, const Params& params) {
  const int n = params.n(), k = params.k(), r = params.r();
  if (family.n() != n || family.k() != k) throw std::invalid_argument("classify_family: family over different (n, k)");
  const std::uint64_t big_n = trivial_size(params);
  if (family.size() != big_n) throw std::invalid_argument("classify_family: family size must equal N");

  Classification c;
  c.degrees.assign(static_cast<std::size_t>(n), 0);
  for (const auto& a : family)
    for (int x : a.elements()) ++c.degrees[static_cast<std::size_t>(x - 1)];
  c.x_order.resize(static_cast<std::size_t>(n));
  std::iota(c.x_order.begin(), c.x_order.end(), 1);
  std::stable_sort(c.x_order.begin(), c.x_order.end(), [&](int a, int b) {
    return c.degrees[static_cast<std::size_t>(a - 1)] > c.degrees[static_cast<std::size_t>(b - 1)];
  });

  std::uint64_t seen = 0;  // mask of x_1..x_{i-1}
  std::int64_t z_sum = 0;
  for (int i = 1; i <= r - 1; ++i) {
    const int x = c.x_order[static_cast<std::size_t>(i - 1)];
    const std::uint64_t bit = std::uint64_t{1} << (x - 1);
    std::int64_t fresh = 0;
    for (const auto& a : family)
      if ((a.bits() & bit) && !(a.bits() & seen)) ++fresh;
    const auto z = static_cast<std::int64_t>(binomial_u64(n - i, k - 1)) - fresh;
    c.z.push_back(z);
    z_sum += z;
    seen |= bit;
  }

  const auto r2 = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(r);
  const std::uint64_t last_degree = c.degrees[static_cast<std::size_t>(c.x_order[static_cast<std::size_t>(r - 2)] - 1)];
  if (is_trivial_union(family, params)) {
    c.label = FamilyClass::trivial;
  } else if (2 * r2 * static_cast<std::uint64_t>(k) * last_degree < big_n) {
    c.label = FamilyClass::C1;
  } else if (4 * r2 * static_cast<std::uint64_t>(z_sum) >= big_n) {
    c.label = FamilyClass::C2;
  } else {
    c.label = FamilyClass::C3;
  }
  return c;
}

}  // namespace kneser
