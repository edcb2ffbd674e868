#pragma once

#include <bit>
#include <cstdint>
#include <algorithm>
#include <array>
#include <vector>

namespace kneser::detail {

// Fixed-size bitset over [0, size) with word-level access for the search kernels.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), count_((size + 63) / 64) {
    if (count_ > kInline) heap_.assign(count_, 0);
  }
  Bitset(const Bitset& o) : size_(o.size_), count_(o.count_), inline_(o.inline_), heap_(o.heap_) {}
  Bitset& operator=(const Bitset& o) {
    size_ = o.size_;
    count_ = o.count_;
    if (count_ > kInline) {
      heap_ = o.heap_;
    } else {
      std::copy_n(o.inline_.data(), count_, inline_.data());
    }
    return *this;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return count_; }

  void set(std::size_t i) noexcept { data()[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { data()[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (data()[i >> 6] >> (i & 63)) & 1U; }

  void clear() noexcept {
    std::fill_n(data(), count_, std::uint64_t{0});
  }

  void set_all() noexcept {
    std::fill_n(data(), count_, ~std::uint64_t{0});
    trim();
  }

  bool none() const noexcept {
    const auto* d = data();
    for (std::size_t w = 0; w < count_; ++w)
      if (d[w]) return false;
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    const auto* d = data();
    for (std::size_t w = 0; w < count_; ++w) c += static_cast<std::size_t>(std::popcount(d[w]));
    return c;
  }

  /// min(count(), limit), stopping early.
  std::size_t count_upto(std::size_t limit) const noexcept {
    std::size_t c = 0;
    const auto* d = data();
    for (std::size_t w = 0; w < count_; ++w) {
      c += static_cast<std::size_t>(std::popcount(d[w]));
      if (c >= limit) return limit;
    }
    return c;
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    const auto* d = data();
    for (std::size_t w = 0; w < count_; ++w)
      if (d[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(d[w]));
    return size_;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    auto* d = data();
    const auto* s = o.data();
    for (std::size_t w = 0; w < count_; ++w) d[w] &= s[w];
    return *this;
  }
  Bitset& and_not(const Bitset& o) noexcept {
    auto* d = data();
    const auto* s = o.data();
    for (std::size_t w = 0; w < count_; ++w) d[w] &= ~s[w];
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    const auto* d = data();
    for (std::size_t w = 0; w < count_; ++w)
      for (std::uint64_t b = d[w]; b != 0; b &= b - 1)
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(b)));
  }

  std::uint64_t* data() noexcept { return count_ > kInline ? heap_.data() : inline_.data(); }
  const std::uint64_t* data() const noexcept { return count_ > kInline ? heap_.data() : inline_.data(); }

 private:
  void trim() noexcept {
    if (size_ & 63) data()[count_ - 1] &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  static constexpr std::size_t kInline = 8;

  std::size_t size_ = 0;
  std::size_t count_ = 0;
  std::array<std::uint64_t, kInline> inline_{};
  std::vector<std::uint64_t> heap_;
};

}  // namespace kneser::detail
