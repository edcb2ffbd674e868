#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms; sets are plain sorted vectors of elements.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

using Set = std::vector<int>;

/// Pascal's triangle, exact for n <= 66.
inline std::uint64_t binom(int n, int k) {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> t(67, std::vector<std::uint64_t>(67, 0));
    for (int i = 0; i <= 66; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (n < 0 || k < 0 || k > n) return 0;
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// All k-subsets of [n] in the order "smaller elements first" (recursive generation).
inline std::vector<Set> k_subsets(int n, int k) {
  std::vector<Set> out;
  Set cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline bool disjoint(const Set& a, const Set& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

/// Index tuples i_1 < ... < i_r into `sets` whose members are pairwise disjoint.
inline std::vector<std::vector<std::size_t>> disjoint_tuples(const std::vector<Set>& sets, int r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = next; i < sets.size(); ++i) {
      bool ok = true;
      for (auto j : cur) ok = ok && disjoint(sets[i], sets[j]);
      if (!ok) continue;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Largest subset of [0, v) containing no edge, by enumerating every subset. v <= 22.
inline std::size_t brute_alpha(std::size_t v, const std::vector<std::vector<std::uint32_t>>& edges) {
  std::vector<std::uint32_t> masks;
  for (const auto& e : edges) {
    std::uint32_t m = 0;
    for (auto x : e) m |= 1U << x;
    masks.push_back(m);
  }
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << v); ++s) {
    const auto c = static_cast<std::size_t>(__builtin_popcount(s));
    if (c <= best) continue;
    bool ok = true;
    for (auto m : masks)
      if ((s & m) == m) {
        ok = false;
        break;
      }
    if (ok) best = c;
  }
  return best;
}

inline double mean(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

/// Standard error of the mean.
inline double std_error(const std::vector<double>& xs) {
  const double m = mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
}

}  // namespace oracle
