#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gapmatch {

inline constexpr std::size_t kWordBits = 64;

// Fixed-width bit vector backed by 64-bit words. Bit b lives in word b/64 at
// in-word position b%64, least significant first. Bits at index >= size()
// are always zero.
class BitColumn {
 public:
  BitColumn() = default;
  explicit BitColumn(std::size_t bits)
      : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }
  std::uint64_t word(std::size_t j) const { return words_[j]; }
  std::uint64_t* data() { return words_.data(); }
  const std::uint64_t* data() const { return words_.data(); }

  void set(std::size_t b) {
    assert(b < bits_);
    words_[b / kWordBits] |= std::uint64_t{1} << (b % kWordBits);
  }

  bool test(std::size_t b) const {
    assert(b < bits_);
    return (words_[b / kWordBits] >> (b % kWordBits)) & 1u;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  BitColumn& operator|=(const BitColumn& o) {
    assert(o.bits_ == bits_);
    for (std::size_t j = 0; j < words_.size(); ++j) words_[j] |= o.words_[j];
    return *this;
  }

  BitColumn& operator&=(const BitColumn& o) {
    assert(o.bits_ == bits_);
    for (std::size_t j = 0; j < words_.size(); ++j) words_[j] &= o.words_[j];
    return *this;
  }

  friend BitColumn operator&(BitColumn a, const BitColumn& b) { return a &= b; }
  friend BitColumn operator|(BitColumn a, const BitColumn& b) { return a |= b; }

  bool operator==(const BitColumn&) const = default;

  // Calls f(bit_index) for every set bit in ascending order.
  template <class F>
  void for_each_bit(F&& f) const {
    for (std::size_t j = 0; j < words_.size(); ++j) {
      std::uint64_t w = words_[j];
      while (w) {
        const int b = std::countr_zero(w);
        f(j * kWordBits + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  // Position of the most significant set bit, or npos if empty.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t highest_bit() const {
    for (std::size_t j = words_.size(); j-- > 0;) {
      if (words_[j])
        return j * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[j])));
    }
    return npos;
  }

  void clear_bit(std::size_t b) {
    assert(b < bits_);
    words_[b / kWordBits] &= ~(std::uint64_t{1} << (b % kWordBits));
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gapmatch
