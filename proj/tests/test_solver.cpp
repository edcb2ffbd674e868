#include <doctest.h>

#include <algorithm>
#include <set>

#include "kneser/solver.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

std::vector<std::vector<std::uint32_t>> edge_list(const EdgeSet& edges) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t e = 0; e < edges.size(); ++e) out.emplace_back(edges[e].begin(), edges[e].end());
  return out;
}

Family all_vertices(int n, int k) {
  std::vector<std::uint64_t> ranks(oracle::binom(n, k));
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = i;
  return Family::from_ranks(n, k, ranks);
}

// Independence checked directly against the retained keys.
bool independent_by_hand(const SampledHypergraph& g, const Family& f) {
  const auto ranks = f.ranks();
  const std::set<std::uint64_t> in(ranks.begin(), ranks.end());
  for (std::size_t e = 0; e < g.retained.size(); ++e) {
    bool all = true;
    for (auto v : g.retained[e]) all = all && in.count(v);
    if (all) return false;
  }
  return true;
}

// Number of independent t-subsets of [0, v), by subset enumeration.
std::uint64_t brute_count(std::size_t v, const std::vector<std::vector<std::uint32_t>>& edges, int t) {
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s < (1U << v); ++s) {
    if (__builtin_popcount(s) != t) continue;
    bool ok = true;
    for (const auto& e : edges) {
      std::uint32_t m = 0;
      for (auto x : e) m |= 1U << x;
      if ((s & m) == m) ok = false;
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("is_independent") {
  const Params params(8, 2, 3);
  const auto full = sample_explicit(params, 1.0, 0);
  CHECK(is_independent(full, star_union(params, std::vector<int>{2, 5})));
  CHECK_FALSE(is_independent(full, all_vertices(8, 2)));
  CHECK(is_independent(full, Family(8, 2)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = sample_explicit(params, 0.5, seed);
    CounterRng rng(seed);
    Family f(8, 2);
    for (int i = 0; i < 12; ++i) f.insert(lex_unrank(8, 2, rng.below(28)));
    CHECK(is_independent(g, f) == independent_by_hand(g, f));
  }
}

TEST_CASE("min_hitting_set basics") {
  CHECK(min_hitting_set(EdgeSet(2), 10).tau == 0u);
  EdgeSet one(3);
  one.push_back(std::vector<VertexId>{1, 4, 7});
  const auto h = min_hitting_set(one, 10);
  CHECK(h.tau == 1u);
  CHECK(h.witness.size() == 1);
  const auto full = sample_explicit(Params(6, 2, 2), 1.0, 0);
  const auto all = min_hitting_set(full.retained, 15);
  CHECK(all.tau == 15u - oracle::brute_alpha(15, edge_list(full.retained)));
  CHECK(all.tau == 10u);
  CHECK_THROWS_AS(min_hitting_set(one, 5), std::invalid_argument);
}

TEST_CASE("max_independent_set extremes and classical values") {
  const auto empty = sample_explicit(Params(7, 2, 3), 0.0, 0);
  const auto r0 = max_independent_set(empty);
  CHECK(r0.alpha == 21u);
  CHECK(r0.witness.size() == 21);

  struct Case {
    int n, k, r;
    std::uint64_t alpha;
  };
  for (auto c : {Case{5, 2, 2, 4}, Case{6, 2, 2, 5}, Case{8, 2, 3, 13}, Case{9, 2, 2, 8}}) {
    const auto g = sample_explicit(Params(c.n, c.k, c.r), 1.0, 0);
    const auto res = max_independent_set(g);
    CHECK(res.status == SolveStatus::exact);
    CHECK(res.alpha == c.alpha);
    CHECK(res.witness.size() == c.alpha);
    CHECK(independent_by_hand(g, res.witness));
    if (g.vertex_count() <= 22) CHECK(oracle::brute_alpha(g.vertex_count(), edge_list(g.retained)) == c.alpha);
  }
}

TEST_CASE("solver matches exhaustive search on small samples") {
  int cases = 0;
  for (auto [n, k, r] : {std::tuple{6, 2, 2}, {6, 2, 3}, {6, 3, 2}, {7, 2, 2}, {7, 2, 3}})
    for (double p : {0.1, 0.2, 0.5, 0.8, 1.0})
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto g = sample_explicit(Params(n, k, r), p, seed * 31 + 7);
        const auto res = max_independent_set(g);
        const auto brute = oracle::brute_alpha(g.vertex_count(), edge_list(g.retained));
        REQUIRE(res.alpha == brute);
        REQUIRE(independent_by_hand(g, res.witness));
        REQUIRE(res.witness.size() == brute);
        const auto d = exists_independent_of_size(g, brute, 1'000'000);
        CHECK(d.answer == Answer::yes);
        CHECK(d.witness->size() == brute);
        CHECK(independent_by_hand(g, *d.witness));
        if (brute < g.vertex_count()) CHECK(exists_independent_of_size(g, brute + 1).answer == Answer::no);
        ++cases;
      }
  CHECK(cases >= 100);
}

TEST_CASE("duality alpha + tau = V on mid-sized samples") {
  int cases = 0;
  for (auto [n, k, r] : {std::tuple{10, 2, 2}, {12, 2, 2}, {8, 3, 2}, {9, 2, 3}, {10, 2, 3}, {9, 3, 2}, {8, 2, 4}, {9, 2, 4}})
    for (double p : {0.2, 0.4, 0.7})
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = sample_explicit(Params(n, k, r), p, 1000 + seed);
        const auto a = max_independent_set(g);
        const auto t = min_hitting_set(g.retained, g.vertex_count());
        REQUIRE(a.alpha.has_value());
        REQUIRE(t.tau.has_value());
        CHECK(*a.alpha + *t.tau == g.vertex_count());
        CHECK(is_independent(g, a.witness));
        // complement of the hitting set is independent
        std::vector<bool> hit(g.vertex_count(), false);
        for (auto v : t.witness) hit[v] = true;
        std::vector<std::uint64_t> rest;
        for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
          if (!hit[v]) rest.push_back(v);
        CHECK(independent_by_hand(g, Family::from_ranks(n, k, rest)));
        if (Params(n, k, r).emc_regime()) CHECK(BigInt(*a.alpha) >= derive(Params(n, k, r)).N);
        ++cases;
      }
  CHECK(cases >= 200);
}

TEST_CASE("adding edges never increases alpha") {
  const Params params(7, 2, 2);
  const auto full = sample_explicit(params, 1.0, 0);
  CounterRng rng(8);
  std::vector<std::size_t> order(full.retained.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  SampledHypergraph g{params, 0.0, 0, SamplerKind::explicit_enumeration, EdgeSet(2)};
  std::uint64_t last = g.vertex_count();
  for (auto idx : order) {
    g.retained.push_back(full.retained[idx]);
    g.retained.canonicalize();
    const auto a = *max_independent_set(g).alpha;
    CHECK(a <= last);
    last = a;
  }
  CHECK(last == 6);
}

TEST_CASE("budget exhaustion is reported, never approximated") {
  const auto g = sample_explicit(Params(30, 2, 2), 0.3, 1);
  const auto res = max_independent_set(g, 10);
  CHECK(res.status == SolveStatus::budget_exceeded);
  CHECK_FALSE(res.alpha.has_value());
  CHECK(exists_independent_of_size(g, 31, 10).answer == Answer::unknown);
  const auto h = min_hitting_set(sample_explicit(Params(9, 2, 3), 0.5, 1).retained, 36, 3);
  CHECK(h.status == SolveStatus::budget_exceeded);
  CHECK_FALSE(h.tau.has_value());
}

TEST_CASE("exists_independent_of_size examples") {
  const auto kg10 = sample_explicit(Params(10, 2, 2), 1.0, 0);
  CHECK(exists_independent_of_size(kg10, 9).answer == Answer::yes);
  CHECK(exists_independent_of_size(kg10, 10).answer == Answer::no);
  const auto g = sample_explicit(Params(9, 2, 3), 0.3, 4);
  CHECK(exists_independent_of_size(g, 36).answer == (g.retained.empty() ? Answer::yes : Answer::no));
  CHECK(exists_independent_of_size(g, 15).answer == Answer::yes);  // N = 36 - 21
  CHECK(exists_independent_of_size(g, 0).answer == Answer::yes);
}

TEST_CASE("is_trivial_union") {
  const Params params(10, 2, 3);
  const auto f = star_union(params, std::vector<int>{3, 7});
  CHECK(is_trivial_union(f, params) == std::vector<int>{3, 7});
  auto swapped = f;
  swapped.erase(KSubset(10, {3, 4}));
  swapped.insert(KSubset(10, {1, 2}));
  CHECK_FALSE(is_trivial_union(swapped, params).has_value());
  const Params p2(8, 3, 2);
  CHECK(is_trivial_union(star(p2, 1), p2) == std::vector<int>{1});
  CHECK_FALSE(is_trivial_union(Family(8, 3), p2).has_value());
}

TEST_CASE("exists_nontrivial_independent_of_size") {
  const Params params(8, 2, 3);
  CHECK(exists_nontrivial_independent_of_size(sample_explicit(Params(9, 2, 2), 0.0, 0), 8).answer == Answer::yes);
  CHECK(exists_nontrivial_independent_of_size(sample_explicit(params, 1.0, 0), 13).answer == Answer::no);
  CHECK(exists_nontrivial_independent_of_size(sample_explicit(params, 1.0, 0), 14).answer == Answer::no);
  const auto d = exists_nontrivial_independent_of_size(sample_explicit(params, 0.0, 0), 13);
  REQUIRE(d.answer == Answer::yes);
  CHECK_FALSE(is_trivial_union(*d.witness, params).has_value());
}

TEST_CASE("enumerate_independent_sets counts match brute force") {
  for (auto [n, k, r, p] : {std::tuple{6, 2, 2, 0.5}, {6, 2, 3, 0.7}, {7, 2, 2, 0.3}}) {
    const auto g = sample_explicit(Params(n, k, r), p, 12);
    const auto edges = edge_list(g.retained);
    for (int t = 0; t <= 7; ++t) {
      std::set<std::vector<std::uint64_t>> seen;
      const auto out = enumerate_independent_sets(g, t, [&](const Family& f) {
        CHECK(f.size() == static_cast<std::size_t>(t));
        CHECK(independent_by_hand(g, f));
        seen.insert(f.ranks());
        return true;
      });
      CHECK(out.completed);
      CHECK_FALSE(out.stopped);
      CHECK(out.visited == seen.size());
      CHECK(seen.size() == brute_count(g.vertex_count(), edges, t));
    }
  }
  const auto g = sample_explicit(Params(6, 2, 2), 0.0, 0);
  int calls = 0;
  const auto out = enumerate_independent_sets(g, 3, [&](const Family&) { return ++calls < 4; });
  CHECK(out.stopped);
  CHECK_FALSE(out.completed);
  CHECK(calls == 4);
}

TEST_CASE("classify_family on the worked example") {
  const Params params(6, 2, 2);
  const Family f(6, 2, {KSubset(6, {1, 2}), KSubset(6, {1, 3}), KSubset(6, {1, 4}), KSubset(6, {2, 3}), KSubset(6, {2, 4})});
  const auto c = classify_family(f, params);
  CHECK(c.x_order[0] == 1);
  CHECK(c.x_order[1] == 2);
  CHECK(c.degrees[0] == 3);
  CHECK(c.z == std::vector<std::int64_t>{2});
  CHECK(c.label == FamilyClass::C2);
  CHECK(classify_family(star(params, 4), params).label == FamilyClass::trivial);
  CHECK_THROWS_AS(classify_family(Family(6, 2, {KSubset(6, {1, 2})}), params), std::invalid_argument);
}

TEST_CASE("classify_family agrees with a direct evaluation of the definitions") {
  for (auto [n, k, r] : {std::tuple{6, 2, 2}, {8, 2, 3}, {9, 3, 2}, {12, 2, 4}}) {
    const Params params(n, k, r);
    const auto sets = oracle::k_subsets(n, k);
    std::uint64_t big_n = oracle::binom(n, k) - oracle::binom(n - r + 1, k);
    CounterRng rng(static_cast<std::uint64_t>(n * 100 + k * 10 + r));
    for (int t = 0; t < 60; ++t) {
      // mostly near-trivial families: a star union with a few members replaced
      std::vector<std::size_t> idx;
      std::set<std::size_t> chosen;
      const int swaps = static_cast<int>(rng.below(4));
      for (std::size_t i = 0; i < sets.size(); ++i) {
        bool in_star = false;
        for (int x : sets[i]) in_star = in_star || x <= r - 1;
        if (in_star) chosen.insert(i);
      }
      for (int s = 0; s < swaps && t % 3 != 0; ++s) {
        auto it = chosen.begin();
        std::advance(it, static_cast<long>(rng.below(chosen.size())));
        chosen.erase(it);
        std::size_t add;
        do add = rng.below(sets.size());
        while (chosen.count(add));
        chosen.insert(add);
      }
      if (t % 3 == 0) {  // uniformly random family of size N
        chosen.clear();
        while (chosen.size() < big_n) chosen.insert(rng.below(sets.size()));
      }
      std::vector<KSubset> members;
      for (auto i : chosen) members.push_back(KSubset(n, sets[i]));
      const Family f(n, k, members);
      const auto c = classify_family(f, params);

      std::vector<std::uint64_t> deg(n + 1, 0);
      for (auto i : chosen)
        for (int x : sets[i]) ++deg[x];
      std::vector<int> order(n);
      for (int x = 1; x <= n; ++x) order[x - 1] = x;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
      REQUIRE(c.x_order == order);
      std::int64_t z_sum = 0;
      std::set<std::size_t> covered;
      for (int i = 1; i <= r - 1; ++i) {
        std::int64_t fresh = 0;
        for (auto s : chosen) {
          const auto& a = sets[s];
          if (std::find(a.begin(), a.end(), order[i - 1]) == a.end()) continue;
          if (covered.insert(s).second) ++fresh;
        }
        const auto z = static_cast<std::int64_t>(oracle::binom(n - i, k - 1)) - fresh;
        REQUIRE(c.z[i - 1] == z);
        z_sum += z;
      }
      CHECK(static_cast<std::size_t>(z_sum) == chosen.size() - covered.size());

      bool trivial = true;
      for (auto s : chosen) {
        bool hit = false;
        for (int i = 0; i < r - 1; ++i)
          hit = hit || std::find(sets[s].begin(), sets[s].end(), order[i]) != sets[s].end();
        trivial = trivial && hit;
      }
      const double nd = static_cast<double>(big_n);
      FamilyClass expected;
      if (trivial) expected = FamilyClass::trivial;
      else if (static_cast<double>(deg[order[r - 2]]) < nd / (2.0 * r * r * k)) expected = FamilyClass::C1;
      else if (static_cast<double>(z_sum) >= nd / (4.0 * r * r)) expected = FamilyClass::C2;
      else expected = FamilyClass::C3;
      CHECK(c.label == expected);
    }
  }
}
