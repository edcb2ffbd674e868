#include "kneser/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace kneser {

namespace {

using Table = std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1>;

constexpr Table make_pascal() {
  Table t{};
  for (int n = 0; n <= kMaxGround; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr Table kPascal = make_pascal();

BigInt factorial(int r) {
  BigInt f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_u64(int n, int k) noexcept {
  if (n < 0 || k < 0 || n > kMaxGround || k > n) return 0;
  return kPascal[n][k];
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("log_binomial: requires 0 <= k <= n");
  if (k == 0 || k == n) return 0.0;
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return std::lgamma(nd + 1) - std::lgamma(kd + 1) - std::lgamma(nd - kd + 1);
}

double log_big(const BigInt& value) {
  if (value < 0) throw std::domain_error("log_big: negative argument");
  if (value == 0) return -std::numeric_limits<double>::infinity();
  const auto top = static_cast<long>(boost::multiprecision::msb(value));
  if (top < 1000) return std::log(value.convert_to<double>());
  const long shift = top - 60;
  const BigInt head = value >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

// ---------------------------------------------------------------------------

void KSubset::validate(int n, int k, std::uint64_t bits) {
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("KSubset: n must lie in [1, 64]");
  if (n < kMaxGround && (bits >> n) != 0) throw std::invalid_argument("KSubset: element outside [n]");
  if (k < 1 || 2 * k > n) throw std::invalid_argument("KSubset: requires 1 <= k and 2k <= n");
}

KSubset::KSubset(int n, std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n || e > kMaxGround) throw std::invalid_argument("KSubset: element outside [n]");
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (bits & bit) throw std::invalid_argument("KSubset: repeated element");
    bits |= bit;
  }
  const int k = static_cast<int>(elements.size());
  validate(n, k, bits);
  bits_ = bits;
  n_ = n;
  k_ = k;
}

KSubset KSubset::from_bits(int n, std::uint64_t bits) {
  const int k = std::popcount(bits);
  validate(n, k, bits);
  return KSubset(n, k, bits);
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k_));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string KSubset::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) { return lex_compare(a, b); }

std::strong_ordering lex_compare(const KSubset& a, const KSubset& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw std::invalid_argument("lex_compare: mismatched (n, k)");
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return std::strong_ordering::equal;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::uint64_t lex_rank_bits(int n, int k, std::uint64_t bits) noexcept {
  std::uint64_t rank = 0;
  int prev = 0;
  int i = 1;
  for (std::uint64_t b = bits; b != 0; b &= b - 1, ++i) {
    const int a = std::countr_zero(b) + 1;
    for (int x = prev + 1; x < a; ++x) rank += kPascal[n - x][k - i];
    prev = a;
  }
  return rank;
}

std::uint64_t lex_unrank_bits(int n, int k, std::uint64_t idx) noexcept {
  std::uint64_t bits = 0;
  int x = 1;
  for (int i = 1; i <= k; ++i) {
    while (idx >= kPascal[n - x][k - i]) {
      idx -= kPascal[n - x][k - i];
      ++x;
    }
    bits |= std::uint64_t{1} << (x - 1);
    ++x;
  }
  return bits;
}

std::uint64_t lex_rank(const KSubset& a) { return lex_rank_bits(a.n(), a.k(), a.bits()); }

KSubset lex_unrank(int n, int k, std::uint64_t idx) {
  if (n < 1 || n > kMaxGround || k < 1 || 2 * k > n) throw std::invalid_argument("lex_unrank: bad (n, k)");
  if (idx >= binomial_u64(n, k)) throw std::out_of_range("lex_unrank: index out of range");
  return KSubset::from_bits(n, lex_unrank_bits(n, k, idx));
}

// ---------------------------------------------------------------------------

Family::Family(int n, int k, std::vector<KSubset> members) : n_(n), k_(k), members_(std::move(members)) {
  for (const auto& m : members_)
    if (m.n() != n_ || m.k() != k_) throw std::invalid_argument("Family: heterogeneous (n, k)");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("Family: duplicate member");
}

bool Family::contains(const KSubset& a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool Family::insert(const KSubset& a) {
  if (a.n() != n_ || a.k() != k_) throw std::invalid_argument("Family::insert: mismatched (n, k)");
  auto it = std::lower_bound(members_.begin(), members_.end(), a);
  if (it != members_.end() && *it == a) return false;
  members_.insert(it, a);
  return true;
}

bool Family::erase(const KSubset& a) {
  auto it = std::lower_bound(members_.begin(), members_.end(), a);
  if (it == members_.end() || !(*it == a)) return false;
  members_.erase(it);
  return true;
}

std::vector<std::uint64_t> Family::ranks() const {
  std::vector<std::uint64_t> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(lex_rank(m));
  return out;
}

Family Family::from_ranks(int n, int k, std::span<const std::uint64_t> ranks) {
  std::vector<KSubset> members;
  members.reserve(ranks.size());
  for (auto idx : ranks) members.push_back(lex_unrank(n, k, idx));
  return Family(n, k, std::move(members));
}

std::string Family::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += members_[i].to_string();
  }
  out += ']';
  return out;
}

// ---------------------------------------------------------------------------

Params::Params(int n, int k, int r) : n_(n), k_(k), r_(r) {
  if (k < 2) throw std::invalid_argument("Params: k must be at least 2");
  if (r < 2) throw std::invalid_argument("Params: r must be at least 2");
  if (n < 2 * k) throw std::invalid_argument("Params: n must be at least 2k");
  if (n > kMaxGround) throw std::invalid_argument("Params: n must not exceed 64");
  emc_regime_ = 2 * n >= r * (2 * k + 1);
  frankl_regime_ = n >= (2 * r - 1) * k - r + 1;
}

BigInt trivial_plus_one_edge_product(int n, int k, int r) {
  BigInt m = 1;
  for (int i = 1; i <= r - 1; ++i) m *= binomial(n - i * k - (r - i), k - 1);
  return m;
}

namespace {

// ln(C(n,r-1) C(n-r+1,k)); -inf when n - r + 1 < k leaves no pairs.
double log_pairs(int n, int k, int r) {
  if (n - r + 1 < k) return -std::numeric_limits<double>::infinity();
  return log_binomial(n, r - 1) + log_binomial(n - r + 1, k);
}

}  // namespace

DerivedQuantities derive(const Params& params) {
  const int n = params.n(), k = params.k(), r = params.r();
  DerivedQuantities q;
  q.V = binomial(n, k);
  q.N = q.V - binomial(n - r + 1, k);
  for (int i = 1; i <= r - 1; ++i) q.N_i.push_back(binomial(n - i, k - 1));
  q.M = trivial_plus_one_edge_product(n, k, r);
  q.H = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1);

  BigInt ordered = 1;
  for (int i = 0; i <= r - 1; ++i) ordered *= binomial(n - i * k, k);
  q.total_edges = ordered / factorial(r);
  q.trivial_plus_one = binomial(n, r - 1) * binomial(n - r + 1, k);

  q.log_V = log_big(q.V);
  q.log_N = log_big(q.N);
  q.log_M = log_big(q.M);
  q.log_total_edges = log_big(q.total_edges);
  q.log_trivial_plus_one = log_pairs(n, k, r);

  if (q.M == 0) {
    q.p_c = std::numeric_limits<double>::infinity();
  } else {
    q.p_c = q.log_trivial_plus_one / std::exp(q.log_M);
  }
  q.p_c_exceeds_one = q.p_c > 1.0;
  return q;
}

CriticalProbability p_critical(const Params& params) {
  if (!params.emc_regime()) throw std::domain_error("p_critical: requires n >= r(k + 1/2)");
  const auto q = derive(params);
  return {q.p_c, q.p_c_exceeds_one};
}

double expected_trivial_plus_one(const Params& params, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("expected_trivial_plus_one: p outside [0, 1]");
  const int n = params.n(), k = params.k(), r = params.r();
  const double lp = log_pairs(n, k, r);
  const BigInt m = trivial_plus_one_edge_product(n, k, r);
  if (m == 0 || p == 0.0) return std::exp(lp);
  if (p == 1.0) return 0.0;
  return std::exp(lp + std::exp(log_big(m)) * std::log1p(-p));
}

EmcValue emc_value(const Params& params) {
  const int n = params.n(), k = params.k(), r = params.r();
  if (n < r * k - 1) throw std::domain_error("emc_value: requires n >= rk - 1");
  BigInt matching = binomial(r * k - 1, k);
  BigInt stars = binomial(n, k) - binomial(n - r + 1, k);
  if (stars >= matching) return {stars, EmcBranch::stars};
  return {matching, EmcBranch::matching};
}

BigInt hilton_milner_bound(int n, int k) {
  if (k < 1 || n <= 2 * k) throw std::domain_error("hilton_milner_bound: requires n > 2k");
  return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1;
}

std::optional<int> star_count_for_size(int n, int k, const BigInt& s) {
  const BigInt total = binomial(n, k);
  for (int l = 1; l <= n; ++l)
    if (s <= total - binomial(n - l, k)) return l;
  return std::nullopt;
}

}  // namespace kneser
