#ifndef RAMSEY_BITS_HPP
#define RAMSEY_BITS_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey {

/// Dynamic bitset over 64-bit words. Bit i lives in word i/64, bit i%64.
/// Unused high bits of the last word stay zero.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  std::size_t word_count() const { return w_.size(); }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t{0};
    trim();
  }
  void clear_all() {
    for (auto& w : w_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  void and_with(std::span<const std::uint64_t> other) {
    assert(other.size() == w_.size());
    for (std::size_t j = 0; j < w_.size(); ++j) w_[j] &= other[j];
  }
  void and_with(const Bits& other) { and_with(other.words()); }

  void andnot_with(std::span<const std::uint64_t> other) {
    assert(other.size() == w_.size());
    for (std::size_t j = 0; j < w_.size(); ++j) w_[j] &= ~other[j];
  }
  void andnot_with(const Bits& other) { andnot_with(other.words()); }

  /// Index of the lowest set bit, or size() if none.
  std::size_t find_first() const {
    for (std::size_t j = 0; j < w_.size(); ++j)
      if (w_[j]) return (j << 6) + std::countr_zero(w_[j]);
    return n_;
  }

  /// Lowest set bit strictly greater than i, or size() if none.
  std::size_t find_next(std::size_t i) const {
    ++i;
    if (i >= n_) return n_;
    std::size_t j = i >> 6;
    std::uint64_t w = w_[j] & (~std::uint64_t{0} << (i & 63));
    if (w) return (j << 6) + std::countr_zero(w);
    for (++j; j < w_.size(); ++j)
      if (w_[j]) return (j << 6) + std::countr_zero(w_[j]);
    return n_;
  }

  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }

  bool operator==(const Bits& other) const = default;

private:
  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ramsey

#endif
