#include <doctest.h>

#include <cmath>

#include "kneser/combinatorics.hpp"
#include "oracles.hpp"

using namespace kneser;

TEST_CASE("binomial small values") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(9, 2) == oracle::binom(9, 2));
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial agrees with Pascal's triangle up to n = 66") {
  for (int n = 0; n <= 66; ++n)
    for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == oracle::binom(n, k));
}

TEST_CASE("binomial beyond 64 bits obeys Pascal's rule") {
  for (int n = 70; n <= 140; n += 7)
    for (int k = 1; k < n; k += 5) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("log_binomial") {
  CHECK(log_binomial(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-12));
  CHECK(log_binomial(17, 0) == doctest::Approx(0.0));
  CHECK(log_binomial(30, 2) == doctest::Approx(std::log(435.0)).epsilon(1e-12));
  for (int n = 1; n <= 60; ++n)
    for (int k = 0; k <= n; ++k)
      REQUIRE(std::abs(log_binomial(n, k) - std::log(static_cast<double>(oracle::binom(n, k)))) <= 1e-9);
  CHECK_THROWS_AS(log_binomial(3, 5), std::domain_error);
  CHECK_THROWS_AS(log_binomial(-1, 0), std::domain_error);
}

TEST_CASE("KSubset construction and validation") {
  const KSubset a(7, {3, 1, 7});
  CHECK(a.k() == 3);
  CHECK(a.to_string() == "[1,3,7]");
  CHECK(a.contains(7));
  CHECK_FALSE(a.contains(2));
  CHECK_THROWS_AS(KSubset(7, {1, 8}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(7, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(4, {1, 2, 3}), std::invalid_argument);  // 2k > n
  CHECK_THROWS_AS(KSubset::from_bits(4, 0b10000), std::invalid_argument);
  CHECK(KSubset::from_bits(64, std::uint64_t{1} << 63 | 1).elements() == std::vector<int>{1, 64});
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare(KSubset(6, {1, 3}), KSubset(6, {2, 3})) == std::strong_ordering::less);
  CHECK(lex_compare(KSubset(6, {1, 2}), KSubset(6, {1, 2})) == std::strong_ordering::equal);
  CHECK(lex_compare(KSubset(6, {1, 6}), KSubset(6, {2, 3})) == std::strong_ordering::less);
  CHECK(lex_compare(KSubset(6, {2, 3}), KSubset(6, {1, 6})) == std::strong_ordering::greater);
  CHECK_THROWS_AS(lex_compare(KSubset(6, {1, 2}), KSubset(7, {1, 2})), std::invalid_argument);
}

TEST_CASE("lex rank and unrank follow the generated order") {
  CHECK(lex_unrank(6, 2, 0) == KSubset(6, {1, 2}));
  CHECK(lex_unrank(6, 2, 5) == KSubset(6, {2, 3}));
  for (auto [n, k] : {std::pair{6, 2}, {9, 3}, {10, 4}, {12, 5}}) {
    const auto all = oracle::k_subsets(n, k);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto a = lex_unrank(n, k, i);
      REQUIRE(a.elements() == all[i]);
      REQUIRE(lex_rank(a) == i);
      if (i > 0) REQUIRE(lex_compare(lex_unrank(n, k, i - 1), a) == std::strong_ordering::less);
    }
  }
  CHECK_THROWS_AS(lex_unrank(6, 2, 15), std::out_of_range);
}

TEST_CASE("lex rank at the 64-element ceiling") {
  const KSubset last(64, {62, 63, 64});
  CHECK(lex_rank(last) == oracle::binom(64, 3) - 1);
  CHECK(lex_unrank(64, 3, oracle::binom(64, 3) - 1) == last);
}

TEST_CASE("are_disjoint") {
  CHECK(are_disjoint(KSubset(6, {1, 2}), KSubset(6, {3, 4})));
  CHECK_FALSE(are_disjoint(KSubset(6, {1, 2}), KSubset(6, {2, 3})));
  const KSubset a(6, {4, 5});
  CHECK_FALSE(are_disjoint(a, a));
}

TEST_CASE("Family keeps lex order and rejects duplicates") {
  Family f(6, 2);
  CHECK(f.insert(KSubset(6, {2, 3})));
  CHECK(f.insert(KSubset(6, {1, 6})));
  CHECK_FALSE(f.insert(KSubset(6, {2, 3})));
  CHECK(f[0] == KSubset(6, {1, 6}));
  CHECK(f.ranks() == std::vector<std::uint64_t>{4, 5});
  CHECK(Family::from_ranks(6, 2, f.ranks()) == f);
  CHECK_THROWS_AS(Family(6, 2, {KSubset(6, {1, 2}), KSubset(6, {1, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(Family(6, 2, {KSubset(7, {1, 2})}), std::invalid_argument);
}

TEST_CASE("Params validation and regime flags") {
  CHECK_THROWS_AS(Params(6, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Params(6, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params(5, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Params(65, 2, 2), std::invalid_argument);
  // emc: 2n >= r(2k+1); frankl: n >= (2r-1)k - r + 1
  for (int r = 2; r <= 5; ++r)
    for (int k = 2; k <= 5; ++k)
      for (int n = 2 * k; n <= 40; ++n) {
        const Params params(n, k, r);
        REQUIRE(params.emc_regime() == (2 * n >= r * (2 * k + 1)));
        REQUIRE(params.frankl_regime() == (n >= (2 * r - 1) * k - r + 1));
      }
}

TEST_CASE("derive on small instances") {
  const auto a = derive(Params(10, 2, 2));
  CHECK(a.V == 45);
  CHECK(a.N == 9);
  CHECK(a.N_i == std::vector<BigInt>{9});
  CHECK(a.M == 7);
  CHECK(a.H == 2);

  const auto b = derive(Params(10, 2, 3));
  CHECK(b.N == 17);
  CHECK(b.N_i == std::vector<BigInt>{9, 8});
  CHECK(b.M == 30);

  for (int k = 2; k <= 8; ++k) CHECK(derive(Params(2 * k, k, 2)).N == oracle::binom(2 * k - 1, k - 1));
}

TEST_CASE("derive invariants over a grid") {
  for (int k = 2; k <= 6; ++k)
    for (int r = 2; r <= 5; ++r)
      for (int n = 2 * k; n <= 60; ++n) {
        const Params params(n, k, r);
        const auto q = derive(params);
        BigInt sum = 0;
        for (int i = 1; i <= r - 1; ++i) sum += oracle::binom(n - i, k - 1);
        REQUIRE(q.N == sum);
        REQUIRE(q.V == oracle::binom(n, k));
        REQUIRE(q.H <= k * binomial(n - 2, k - 2));
        REQUIRE((r - 1) * binomial(n - r + 1, k - 1) <= q.N);
        REQUIRE(q.N <= (r - 1) * binomial(n - 1, k - 1));
        BigInt ordered = 1, fact = 1;
        for (int i = 0; i <= r - 1; ++i) ordered *= binomial(n - i * k, k);
        for (int i = 2; i <= r; ++i) fact *= i;
        REQUIRE(q.total_edges * fact == ordered);
      }
}

TEST_CASE("p_critical") {
  auto exact = [](int n, int k, int r) {
    double m = 1;
    for (int i = 1; i <= r - 1; ++i) m *= static_cast<double>(oracle::binom(n - i * k - (r - i), k - 1));
    return std::log(static_cast<double>(oracle::binom(n, r - 1)) * static_cast<double>(oracle::binom(n - r + 1, k))) / m;
  };
  CHECK(p_critical(Params(10, 2, 2)).value == doctest::Approx(std::log(360.0) / 7).epsilon(1e-12));
  CHECK(p_critical(Params(10, 2, 2)).value == doctest::Approx(0.8409).epsilon(1e-4));
  // ln(20 * C(19,2)) / 17 and ln(30 * C(29,2)) / 27
  CHECK(p_critical(Params(20, 2, 2)).value == doctest::Approx(std::log(20.0 * 171) / 17).epsilon(1e-12));
  CHECK(p_critical(Params(20, 2, 2)).value == doctest::Approx(0.47867).epsilon(1e-4));
  CHECK(p_critical(Params(30, 2, 2)).value == doctest::Approx(std::log(30.0 * 406) / 27).epsilon(1e-12));
  CHECK(p_critical(Params(30, 2, 2)).value == doctest::Approx(0.34843).epsilon(1e-4));
  for (auto [n, k, r] : {std::tuple{12, 2, 3}, {15, 3, 2}, {20, 3, 3}, {40, 4, 4}, {60, 5, 5}, {9, 2, 3}})
    CHECK(p_critical(Params(n, k, r)).value == doctest::Approx(exact(n, k, r)).epsilon(1e-9));
  const auto small = p_critical(Params(5, 2, 2));
  CHECK(small.exceeds_one == (small.value > 1.0));
  CHECK(small.exceeds_one);
  CHECK_THROWS_AS(p_critical(Params(6, 2, 3)), std::domain_error);
}

TEST_CASE("expected_trivial_plus_one") {
  const Params params(10, 2, 2);
  CHECK(expected_trivial_plus_one(params, 0.1) == doctest::Approx(360 * std::pow(0.9, 7)).epsilon(1e-12));
  CHECK(expected_trivial_plus_one(params, 0.1) == doctest::Approx(172.187).epsilon(1e-5));
  CHECK(expected_trivial_plus_one(params, 0.0) == doctest::Approx(360.0));
  CHECK(expected_trivial_plus_one(params, 1.0) == 0.0);
  CHECK(expected_trivial_plus_one(Params(10, 2, 3), 0.2) ==
        doctest::Approx(45.0 * 28 * std::pow(0.8, 30)).epsilon(1e-12));
  CHECK_THROWS_AS(expected_trivial_plus_one(params, 1.5), std::domain_error);
}

TEST_CASE("emc_value") {
  auto a = emc_value(Params(8, 2, 3));
  CHECK(a.value == 13);
  CHECK(a.branch == EmcBranch::stars);
  auto b = emc_value(Params(7, 2, 3));
  CHECK(b.value == 11);
  CHECK(b.branch == EmcBranch::stars);
  for (int k = 2; k <= 6; ++k)
    for (int n = 2 * k; n <= 20; ++n) CHECK(emc_value(Params(n, k, 2)).value == oracle::binom(n - 1, k - 1));
  // n = rk - 1 with a large k: the matching term wins
  CHECK(emc_value(Params(11, 4, 3)).branch == EmcBranch::matching);
  CHECK(emc_value(Params(11, 4, 3)).value == oracle::binom(11, 4));
  CHECK_THROWS_AS(emc_value(Params(6, 2, 4)), std::domain_error);
}

TEST_CASE("hilton_milner_bound") {
  CHECK(hilton_milner_bound(6, 2) == 3);
  CHECK(hilton_milner_bound(5, 2) == 3);
  for (int k = 2; k <= 8; ++k)
    CHECK(hilton_milner_bound(2 * k + 1, k) == oracle::binom(2 * k, k - 1) - oracle::binom(k, k - 1) + 1);
  CHECK_THROWS_AS(hilton_milner_bound(4, 2), std::domain_error);
}
