#pragma once

/**
 * @file int_set.hpp
 * @brief Finite sets of nonnegative integers over an explicit ground range.
 *
 * An IntSet always carries its ground interval [lo, hi]. Sets over [n],
 * [0, 2t-1] and [2n] all show up side by side, so the range is never
 * implied. An empty ground is written hi == lo - 1.
 *
 * Equality compares members only: {4,5} over [1,5] equals {4,5} over [0,9].
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumfree/bits.hpp"
#include "sumfree/errors.hpp"

namespace sumfree {

class IntSet {
 public:
  /// Empty set over the empty ground [0, -1].
  IntSet() : lo_(0), hi_(-1) {}

  IntSet(int lo, int hi) : lo_(lo), hi_(hi) {
    if (lo < 0) throw PreconditionError("IntSet ground must be nonnegative");
    if (hi < lo - 1) throw PreconditionError("IntSet ground has hi < lo - 1");
    bits_ = Bits(static_cast<std::size_t>(hi - lo + 1));
  }

  IntSet(int lo, int hi, std::initializer_list<int> members) : IntSet(lo, hi) {
    for (int m : members) insert(m);
  }

  IntSet(int lo, int hi, std::span<const int> members) : IntSet(lo, hi) {
    for (int m : members) insert(m);
  }

  /// Smallest ground that holds `members` ([min, max], or empty).
  static IntSet of(std::span<const int> members) {
    if (members.empty()) return IntSet();
    int lo = members[0], hi = members[0];
    for (int m : members) {
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    return IntSet(lo, hi, members);
  }
  static IntSet of(std::initializer_list<int> members) {
    return of(std::span<const int>(members.begin(), members.size()));
  }

  /// The interval [a, b] as a set over itself (empty when b < a).
  static IntSet interval(int a, int b) {
    if (b < a) return IntSet(std::max(a, 0), std::max(a, 0) - 1);
    IntSet s(a, b);
    for (int x = a; x <= b; ++x) s.insert(x);
    return s;
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool ground_contains(int x) const { return x >= lo_ && x <= hi_; }

  bool contains(int x) const {
    return ground_contains(x) && bits_.test(static_cast<std::size_t>(x - lo_));
  }
  void insert(int x) {
    if (!ground_contains(x))
      throw PreconditionError("member " + std::to_string(x) + " outside ground [" +
                              std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    bits_.set(static_cast<std::size_t>(x - lo_));
  }
  void erase(int x) {
    if (ground_contains(x)) bits_.reset(static_cast<std::size_t>(x - lo_));
  }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  std::optional<int> min() const {
    std::size_t i = bits_.next_set(0);
    if (i == bits_.length()) return std::nullopt;
    return lo_ + static_cast<int>(i);
  }
  std::optional<int> max() const {
    std::size_t i = bits_.prev_set(bits_.length());
    if (i == bits_.length()) return std::nullopt;
    return lo_ + static_cast<int>(i);
  }

  /// Raw bit view; bit i stands for the integer lo() + i.
  const Bits& bits() const { return bits_; }
  Bits& bits() { return bits_; }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    const_iterator(const IntSet* s, std::size_t pos) : set_(s), pos_(pos) {}
    int operator*() const { return set_->lo_ + static_cast<int>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->bits_.next_set(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const IntSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  const_iterator begin() const { return {this, bits_.next_set(0)}; }
  const_iterator end() const { return {this, bits_.length()}; }

  std::vector<int> members() const { return {begin(), end()}; }

  /// Same members re-expressed over [lo, hi]; members outside are dropped.
  IntSet regrounded(int lo, int hi) const {
    IntSet out(lo, hi);
    for (int x : *this)
      if (out.ground_contains(x)) out.insert(x);
    return out;
  }

  /// {x + d : x in this}; ground shifts along. Requires lo() + d >= 0.
  IntSet shifted(int d) const {
    IntSet out(lo_ + d, hi_ + d);
    out.bits_.assign(bits_);
    return out;
  }

  friend bool operator==(const IntSet& a, const IntSet& b) {
    if (a.size() != b.size()) return false;
    for (int x : a)
      if (!b.contains(x)) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : *this) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    return s + "}";
  }

 private:
  int lo_;
  int hi_;
  Bits bits_;
};

inline IntSet set_union(const IntSet& a, const IntSet& b) {
  const bool a_ground = a.hi() >= a.lo(), b_ground = b.hi() >= b.lo();
  if (!a_ground) return b;
  if (!b_ground) return a;
  IntSet out(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
  for (int x : a) out.insert(x);
  for (int x : b) out.insert(x);
  return out;
}

/// Members of `a` that are also in `b`, over a's ground.
inline IntSet set_intersection(const IntSet& a, const IntSet& b) {
  IntSet out(a.lo(), a.hi());
  for (int x : a)
    if (b.contains(x)) out.insert(x);
  return out;
}

/// Members of `a` not in `b`, over a's ground.
inline IntSet set_difference(const IntSet& a, const IntSet& b) {
  IntSet out(a.lo(), a.hi());
  for (int x : a)
    if (!b.contains(x)) out.insert(x);
  return out;
}

// JSON: {"lo": .., "hi": .., "members": [sorted]}
inline void to_json(nlohmann::json& j, const IntSet& s) {
  j = nlohmann::json{{"lo", s.lo()}, {"hi", s.hi()}, {"members", s.members()}};
}

inline void from_json(const nlohmann::json& j, IntSet& s) {
  IntSet out(j.at("lo").get<int>(), j.at("hi").get<int>());
  for (int m : j.at("members").get<std::vector<int>>()) out.insert(m);
  s = std::move(out);
}

}  // namespace sumfree
