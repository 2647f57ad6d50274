#pragma once

/**
 * @file cyclic.hpp
 * @brief Subsets of Z_p: predicates, the S_T construction, dilations, and an
 *        exhaustive census of symmetric complete sum-free sets.
 *
 * 2S always allows repetition (x + x counts). The census enumerates a
 * symmetric set through its positive half H ⊆ {1, ..., (p-1)/2}; 0 is never
 * in a sum-free set (0 + 0 = 0), so S = H ∪ -H covers every candidate.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sumfree/bits.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/int_set.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/structures.hpp"

namespace sumfree {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline int mod(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

class ZpSet {
 public:
  explicit ZpSet(int p) : p_(p) {
    if (!is_prime(p)) throw PreconditionError("ZpSet modulus " + std::to_string(p) + " is not prime");
    bits_ = Bits(static_cast<std::size_t>(p));
  }
  ZpSet(int p, std::span<const int> members) : ZpSet(p) {
    for (int x : members) insert(x);
  }
  ZpSet(int p, std::initializer_list<int> members)
      : ZpSet(p, std::span<const int>(members.begin(), members.size())) {}

  int modulus() const { return p_; }
  bool contains(long long x) const { return bits_.test(static_cast<std::size_t>(mod(x, p_))); }
  void insert(long long x) { bits_.set(static_cast<std::size_t>(mod(x, p_))); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  const Bits& bits() const { return bits_; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = bits_.next_set(0); i < bits_.length(); i = bits_.next_set(i + 1))
      out.push_back(static_cast<int>(i));
    return out;
  }

  friend bool operator==(const ZpSet& a, const ZpSet& b) { return a.p_ == b.p_ && a.bits_ == b.bits_; }

  std::string to_string() const {
    std::string s = "{";
    for (int x : members()) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + "}";
  }

 private:
  int p_;
  Bits bits_;
};

/// 2S = {x + y mod p : x, y in S}, repetition allowed.
inline ZpSet doubled(const ZpSet& s) {
  const int p = s.modulus();
  ZpSet out(p);
  Bits acc(static_cast<std::size_t>(p));
  for (int x : s.members()) {
    acc.or_shifted_up(s.bits(), static_cast<std::size_t>(x));
    if (x != 0) acc.or_shifted_down(s.bits(), static_cast<std::size_t>(p - x));
  }
  for (std::size_t i = acc.next_set(0); i < acc.length(); i = acc.next_set(i + 1))
    out.insert(static_cast<int>(i));
  return out;
}

/// S = -S
inline bool is_symmetric(const ZpSet& s) {
  for (int x : s.members())
    if (!s.contains(-x)) return false;
  return true;
}

/// Every g in Z_p \ S is x + y for some x, y in S.
inline bool is_complete(const ZpSet& s) {
  const ZpSet two = doubled(s);
  for (int g = 0; g < s.modulus(); ++g)
    if (!s.contains(g) && !two.contains(g)) return false;
  return true;
}

/// S ∩ 2S = ∅
inline bool is_sum_free_zp(const ZpSet& s) {
  const ZpSet two = doubled(s);
  return !s.bits().intersects(two.bits());
}

struct PrimeParams {
  int p = 0;
  int s = 0;
  int t = 0;

  /// p prime, s even with (p+3)/4 <= s <= (p-1)/3, t = (p-3s+1)/2 >= 1.
  static PrimeParams make(int p, int s) {
    if (!is_prime(p) || p < 5) throw PreconditionError("p must be a prime >= 5");
    if (s % 2 != 0) throw PreconditionError("s must be even");
    if (4 * s < p + 3 || 3 * s > p - 1)
      throw PreconditionError("s must lie in [(p+3)/4, (p-1)/3]");
    const int t = (p - 3 * s + 1) / 2;
    if (t < 1) throw PreconditionError("t = (p-3s+1)/2 must be >= 1");
    return {p, s, t};
  }
};

/// s ∈ [0.318 p, (p-1)/3] with s even, in exact arithmetic.
inline bool in_theorem_range(int p, int s) {
  return s % 2 == 0 && 1000LL * s >= 318LL * p && 3LL * s <= p - 1;
}

/// S_T = [p-2s+1, 2s-1] ∪ (s+T) ∪ -(s+T).
inline ZpSet build_S_T(const PrimeParams& params, const IntSet& T) {
  if (!T.empty() && (*T.min() < 0 || *T.max() > 2 * params.t - 1))
    throw PreconditionError("T must lie in [0, 2t-1]");
  ZpSet out(params.p);
  for (int x = params.p - 2 * params.s + 1; x <= 2 * params.s - 1; ++x) out.insert(x);
  for (int tau : T) {
    out.insert(params.s + tau);
    out.insert(-(params.s + tau));
  }
  return out;
}

/// {lam * x mod p}
inline ZpSet dilate(const ZpSet& s, long long lam) {
  const int p = s.modulus();
  if (mod(lam, p) == 0) throw PreconditionError("dilation factor must be nonzero mod p");
  ZpSet out(p);
  for (int x : s.members()) out.insert(static_cast<long long>(mod(lam, p)) * x);
  return out;
}

/// Lexicographically least sorted member list among all dilations of S.
inline ZpSet canonical_form(const ZpSet& s) {
  const int p = s.modulus();
  ZpSet best = s;
  std::vector<int> best_members = s.members();
  for (int lam = 2; lam < p; ++lam) {
    ZpSet d = dilate(s, lam);
    std::vector<int> m = d.members();
    if (m < best_members) {
      best_members = std::move(m);
      best = std::move(d);
    }
  }
  return best;
}

/// Distinct dilation images of S, sorted by member list.
inline std::vector<ZpSet> dilation_orbit(const ZpSet& s) {
  std::map<std::vector<int>, ZpSet> seen;
  for (int lam = 1; lam < s.modulus(); ++lam) {
    ZpSet d = dilate(s, lam);
    seen.emplace(d.members(), d);
  }
  std::vector<ZpSet> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

inline constexpr int default_census_limit = 43;

struct ZpCensusRow {
  int size = 0;
  std::uint64_t count = 0;
  /// Canonical forms, one per dilation orbit, sorted.
  std::vector<std::vector<int>> representatives;
  bool in_theorem_range = false;
};

namespace detail {

/// Census search on a single 64-bit word (p <= 61).
class ZpCensusSearch {
 public:
  explicit ZpCensusSearch(int p) : p_(p), half_((p - 1) / 2), full_((std::uint64_t{1} << p) - 1) {}

  void run(unsigned mask, int depth, std::vector<std::uint64_t>& out) {
    std::uint64_t s = 0, two = 0;
    for (int x = 1; x <= depth; ++x) {
      if (!((mask >> (x - 1)) & 1U)) continue;
      if (!extend(s, two, x)) return;
    }
    dfs(depth + 1, s, two, out);
  }

 private:
  std::uint64_t rot(std::uint64_t v, int k) const {
    k %= p_;
    if (k == 0) return v;
    return ((v << k) | (v >> (p_ - k))) & full_;
  }

  /// Adds ±x; false if the result is no longer sum-free.
  bool extend(std::uint64_t& s, std::uint64_t& two, int x) const {
    const std::uint64_t ns = s | (std::uint64_t{1} << x) | (std::uint64_t{1} << (p_ - x));
    const std::uint64_t nt = two | rot(ns, x) | rot(ns, p_ - x);
    if (ns & nt) return false;
    s = ns;
    two = nt;
    return true;
  }

  void dfs(int x, std::uint64_t s, std::uint64_t two, std::vector<std::uint64_t>& out) {
    if (x > half_) {
      if ((s | two) == full_) out.push_back(s);
      return;
    }
    std::uint64_t s2 = s, t2 = two;
    if (extend(s2, t2, x)) dfs(x + 1, s2, t2, out);
    dfs(x + 1, s, two, out);
  }

  int p_;
  int half_;
  std::uint64_t full_;
};

inline ZpSet from_mask(int p, std::uint64_t m) {
  ZpSet out(p);
  for (int i = 0; i < p; ++i)
    if ((m >> i) & 1U) out.insert(i);
  return out;
}

}  // namespace detail

/// Every symmetric complete sum-free subset of Z_p (of the given size, when
/// one is given), sorted by member list.
inline std::vector<ZpSet> scsf_members(int p, std::optional<int> size = std::nullopt,
                                       unsigned workers = 1, int limit = default_census_limit) {
  if (!is_prime(p) || p < 3) throw PreconditionError("census needs an odd prime p");
  if (p > limit)
    throw PreconditionError("p = " + std::to_string(p) + " above the census limit " +
                            std::to_string(limit));
  if (p > 61) throw PreconditionError("census supports p <= 61");
  const int half = (p - 1) / 2;
  const int depth = workers <= 1 ? 0 : std::min(half, 8);
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<std::vector<std::uint64_t>> parts(tasks);
  parallel_for(tasks, workers, [&](std::size_t mask) {
    detail::ZpCensusSearch(p).run(static_cast<unsigned>(mask), depth, parts[mask]);
  });
  std::vector<ZpSet> out;
  for (const auto& part : parts)
    for (std::uint64_t m : part)
      if (!size || std::popcount(m) == *size) out.push_back(detail::from_mask(p, m));
  std::sort(out.begin(), out.end(),
            [](const ZpSet& a, const ZpSet& b) { return a.members() < b.members(); });
  return out;
}

/// Exhaustive census of symmetric complete sum-free subsets of Z_p grouped by
/// size. With a size, exactly one row is returned (possibly with count 0).
inline std::vector<ZpCensusRow> census_scsf(int p, std::optional<int> size = std::nullopt,
                                            unsigned workers = 1, int limit = default_census_limit) {
  const auto members = scsf_members(p, size, workers, limit);
  std::map<int, ZpCensusRow> rows;
  if (size) rows[*size] = ZpCensusRow{*size, 0, {}, in_theorem_range(p, *size)};
  std::map<int, std::set<std::vector<int>>> reps;
  for (const auto& s : members) {
    const int k = static_cast<int>(s.size());
    auto& row = rows[k];
    row.size = k;
    row.in_theorem_range = in_theorem_range(p, k);
    ++row.count;
    reps[k].insert(canonical_form(s).members());
  }
  std::vector<ZpCensusRow> out;
  for (auto& [k, row] : rows) {
    row.representatives.assign(reps[k].begin(), reps[k].end());
    out.push_back(std::move(row));
  }
  return out;
}

/// Census of size s against the sets S_T for t-special T.
struct StCrossCheck {
  PrimeParams params;
  std::uint64_t census_count = 0;
  std::uint64_t special_count = 0;
  std::uint64_t special_with_zero = 0;
  /// Census members equal the union of dilation orbits of S_T.
  bool members_match = false;
  /// census_count == (p-1)/2 * special_count
  bool gap_matches = false;
  /// Every census member containing s is a dilation of S_T for a T with 0 ∈ T.
  bool s_members_from_zero_t = false;
  /// Dilation orbits among census members that contain s.
  std::uint64_t orbits_containing_s = 0;
  bool passed() const { return members_match && gap_matches && s_members_from_zero_t; }
};

inline StCrossCheck st_cross_check(int p, int s, unsigned workers = 1,
                                   int limit = default_census_limit) {
  StCrossCheck out;
  out.params = PrimeParams::make(p, s);
  const auto members = scsf_members(p, s, workers, limit);
  out.census_count = members.size();
  const auto specials = enumerate_t_special(out.params.t, false, workers);
  out.special_count = specials.size();

  std::set<std::vector<int>> from_st, from_zero_t;
  for (const auto& T : specials) {
    const bool has_zero = T.members.contains(0);
    if (has_zero) ++out.special_with_zero;
    const ZpSet st = build_S_T(out.params, T.members);
    for (const auto& d : dilation_orbit(st)) {
      from_st.insert(d.members());
      if (has_zero) from_zero_t.insert(d.members());
    }
  }
  std::set<std::vector<int>> census_set;
  std::set<std::vector<int>> orbits;
  out.s_members_from_zero_t = true;
  for (const auto& m : members) {
    census_set.insert(m.members());
    if (m.contains(s)) {
      orbits.insert(canonical_form(m).members());
      if (!from_zero_t.contains(m.members())) out.s_members_from_zero_t = false;
    }
  }
  out.orbits_containing_s = orbits.size();
  out.members_match = census_set == from_st;
  out.gap_matches = out.census_count == static_cast<std::uint64_t>((p - 1) / 2) * out.special_count;
  return out;
}

/// Some B ⊆ A with 1 <= |B| <= 3 (distinct elements) summing to 0 mod n:
/// smallest |B| first, then lexicographically least.
inline std::optional<IntSet> find_small_zero_sum(const IntSet& A, int n) {
  if (n < 1) throw PreconditionError("modulus must be >= 1");
  if (!A.empty() && (*A.min() < 0 || *A.max() > n - 1))
    throw PreconditionError("A must lie in [0, n-1]");
  const std::vector<int> m = A.members();
  auto make = [n](std::initializer_list<int> xs) {
    IntSet b(0, n - 1);
    for (int x : xs) b.insert(x);
    return b;
  };
  for (int x : m)
    if (x % n == 0) return make({x});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if ((m[i] + m[j]) % n == 0) return make({m[i], m[j]});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      for (std::size_t k = j + 1; k < m.size(); ++k)
        if ((m[i] + m[j] + m[k]) % n == 0) return make({m[i], m[j], m[k]});
  return std::nullopt;
}

}  // namespace sumfree
