#pragma once

/**
 * @file bits.hpp
 * @brief Fixed-length bit vector with word-parallel shift-or primitives.
 *
 * Every set in the library (IntSet, the engine's per-depth state, ZpSet)
 * sits on top of this. Length is fixed at construction; all shift operations
 * truncate at the end, so "x << s" never grows the vector.
 */

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumfree {

class Bits {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bits() = default;
  explicit Bits(std::size_t length) : length_(length), words_(words_for(length), 0) {}

  static constexpr std::size_t words_for(std::size_t length) {
    return (length + word_bits - 1) / word_bits;
  }

  std::size_t length() const { return length_; }
  std::size_t word_count() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }

  bool test(std::size_t i) const {
    assert(i < length_);
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }
  void set(std::size_t i) {
    assert(i < length_);
    words_[i / word_bits] |= Word{1} << (i % word_bits);
  }
  void reset(std::size_t i) {
    assert(i < length_);
    words_[i / word_bits] &= ~(Word{1} << (i % word_bits));
  }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  /// Copies bits from `other` without reallocating; lengths must match.
  void assign(const Bits& other) {
    assert(other.length_ == length_);
    std::copy(other.words_.begin(), other.words_.end(), words_.begin());
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Number of set bits with index in [lo, hi).
  std::size_t count_range(std::size_t lo, std::size_t hi) const {
    hi = std::min(hi, length_);
    if (lo >= hi) return 0;
    std::size_t c = 0;
    std::size_t wlo = lo / word_bits, whi = (hi - 1) / word_bits;
    for (std::size_t w = wlo; w <= whi; ++w) {
      Word m = ~Word{0};
      if (w == wlo) m &= ~Word{0} << (lo % word_bits);
      if (w == whi && hi % word_bits != 0) m &= ~Word{0} >> (word_bits - hi % word_bits);
      c += static_cast<std::size_t>(std::popcount(words_[w] & m));
    }
    return c;
  }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  bool any() const { return !none(); }

  bool intersects(const Bits& other) const {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Bits& operator|=(const Bits& other) {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] |= other.words_[i];
    trim();
    return *this;
  }
  Bits& operator&=(const Bits& other) {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= other.words_[i];
    for (std::size_t i = n; i < words_.size(); ++i) words_[i] = 0;
    return *this;
  }
  /// this &= ~other
  Bits& subtract(const Bits& other) {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  /// this |= (src << shift), truncated to this->length(). `src` may alias `this`.
  void or_shifted_up(const Bits& src, std::size_t shift) {
    const std::size_t ws = shift / word_bits, bs = shift % word_bits;
    const std::size_t n = words_.size();
    // Descending so that aliasing reads see pre-shift words.
    for (std::size_t i = n; i-- > ws;) {
      std::size_t j = i - ws;
      Word v = 0;
      if (j < src.words_.size()) v = src.words_[j] << bs;
      if (bs != 0 && j >= 1 && j - 1 < src.words_.size()) v |= src.words_[j - 1] >> (word_bits - bs);
      words_[i] |= v;
    }
    trim();
  }

  /// this |= (src >> shift), i.e. bit i of the result picks up src bit i+shift.
  void or_shifted_down(const Bits& src, std::size_t shift) {
    const std::size_t ws = shift / word_bits, bs = shift % word_bits;
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + ws;
      if (j >= src.words_.size()) break;
      Word v = src.words_[j] >> bs;
      if (bs != 0 && j + 1 < src.words_.size()) v |= src.words_[j + 1] << (word_bits - bs);
      words_[i] |= v;
    }
    trim();
  }

  /// Index of the lowest set bit at or above `from`, or length() if none.
  std::size_t next_set(std::size_t from) const {
    if (from >= length_) return length_;
    std::size_t w = from / word_bits;
    Word cur = words_[w] & (~Word{0} << (from % word_bits));
    while (true) {
      if (cur != 0) {
        std::size_t i = w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
        return i < length_ ? i : length_;
      }
      if (++w >= words_.size()) return length_;
      cur = words_[w];
    }
  }

  /// Index of the highest set bit strictly below `below`, or length() if none.
  std::size_t prev_set(std::size_t below) const {
    below = std::min(below, length_);
    if (below == 0) return length_;
    std::size_t w = (below - 1) / word_bits;
    std::size_t top = (below - 1) % word_bits;
    Word cur = words_[w] & (top == word_bits - 1 ? ~Word{0} : ((Word{1} << (top + 1)) - 1));
    while (true) {
      if (cur != 0) return w * word_bits + (word_bits - 1 - static_cast<std::size_t>(std::countl_zero(cur)));
      if (w == 0) return length_;
      cur = words_[--w];
    }
  }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

 private:
  void trim() {
    if (length_ % word_bits != 0 && !words_.empty())
      words_.back() &= ~Word{0} >> (word_bits - length_ % word_bits);
  }

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

}  // namespace sumfree
