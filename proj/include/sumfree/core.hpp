#pragma once

/**
 * @file core.hpp
 * @brief Exact set arithmetic over bounded integer ranges.
 *
 * Sumsets and iterated sumsets are computed word-parallel: A + B is the
 * OR of B shifted by every member of A. All sums here are over the
 * integers, with repetition allowed (kA uses a_1..a_k not necessarily
 * distinct). Z_p arithmetic lives in cyclic.hpp.
 */

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sumfree/errors.hpp"
#include "sumfree/int_set.hpp"

namespace sumfree {

struct SumsetResult {
  IntSet set;
  /// Some x + y with x in a, y in b exceeded the cap and was dropped.
  bool overflow = false;
};

/// {x + y : x in a, y in b} restricted to [0, cap].
///
/// The result ground is [a.lo + b.lo, min(a.hi + b.hi, cap)].
inline SumsetResult sumset(const IntSet& a, const IntSet& b, int cap) {
  if (cap < 0) throw PreconditionError("sumset cap must be >= 0");
  const int lo = a.lo() + b.lo();
  const int hi = std::max(lo - 1, std::min(a.hi() + b.hi(), cap));
  SumsetResult r{IntSet(lo, hi), false};
  if (a.empty() || b.empty()) return r;
  r.overflow = *a.max() + *b.max() > cap;
  if (hi < lo) return r;
  // Bit (y - b.lo) of b lands at (x - a.lo) + (y - b.lo) of the result.
  for (int x : a) {
    if (x + *b.min() > cap) break;
    r.set.bits().or_shifted_up(b.bits(), static_cast<std::size_t>(x - a.lo()));
  }
  return r;
}

/// kA restricted to [0, cap]. 0A = {0}, 1A = A.
inline IntSet k_fold_sumset(const IntSet& a, int k, int cap) {
  if (k < 0) throw PreconditionError("k_fold_sumset requires k >= 0");
  if (cap < 0) throw PreconditionError("k_fold_sumset cap must be >= 0");
  if (k == 0) return IntSet(0, 0, {0});
  IntSet acc = a.regrounded(a.lo(), std::max(a.lo() - 1, std::min(a.hi(), cap)));
  for (int i = 1; i < k; ++i) acc = sumset(acc, a, cap).set;
  return acc;
}

/// Whether `target` is a sum of members of `a` with repetition (the empty
/// sum included, so target 0 is always reachable).
inline bool sigma_contains(const IntSet& a, int target) {
  if (target < 0) throw PreconditionError("sigma_contains target must be >= 0");
  Bits reach(static_cast<std::size_t>(target) + 1);
  reach.set(0);
  for (int x : a) {
    if (x == 0) continue;
    if (x > target) break;
    // Doubling: after step j, reach holds R + {0, x, ..., (2^j - 1) x}.
    for (std::size_t shift = static_cast<std::size_t>(x); shift <= static_cast<std::size_t>(target);
         shift *= 2)
      reach.or_shifted_up(reach, shift);
    if (reach.test(static_cast<std::size_t>(target))) return true;
  }
  return reach.test(static_cast<std::size_t>(target));
}

/// No x, y, z in a (x = y allowed) with x + y = z.
inline bool is_sum_free(const IntSet& a) {
  if (a.empty()) return true;
  Bits shifted(a.bits().length());
  for (int x : a) {
    shifted.clear();
    // Bits of a shifted up by x, compared in a's own frame.
    shifted.or_shifted_up(a.bits(), static_cast<std::size_t>(x));
    if (x == 0 || shifted.intersects(a.bits())) return false;
  }
  return true;
}

struct ConfigCount {
  int k = 0;
  std::uint64_t count = 0;
};

namespace detail {

/// Number of k-element subsets of `members` (distinct) summing to `target`.
inline std::uint64_t count_distinct_k_sums(const std::vector<int>& members, int k, int target) {
  if (target < 0) return 0;
  // ways[j][s]: j-subsets of the prefix processed so far with sum s.
  std::vector<std::vector<std::uint64_t>> ways(
      static_cast<std::size_t>(k) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(target) + 1, 0));
  ways[0][0] = 1;
  for (int x : members) {
    if (x > target) break;
    for (int j = k; j >= 1; --j)
      for (int s = target; s >= x; --s) ways[j][s] += ways[j - 1][s - x];
  }
  return ways[k][target];
}

}  // namespace detail

/// Number of k-subsets of `a` lying in F^(k)_n.
///
/// k = 3: distinct {x, y, z} with x + y = z, or with x + y + z = 2n + 1
/// (a triple meeting both conditions counts once). k = 4, 5: distinct
/// k-subsets summing to 2n + 1.
inline ConfigCount count_forbidden_k_subsets(const IntSet& a, int n, int k) {
  if (k < 3 || k > 5)
    throw UnsupportedConfiguration("F^(k)_n counting supports k in {3,4,5}, got " +
                                   std::to_string(k));
  if (!a.empty() && (*a.min() < 1 || *a.max() > n))
    throw PreconditionError("count_forbidden_k_subsets requires a subset of [1, n]");
  const std::vector<int> m = a.members();
  const int target = 2 * n + 1;
  ConfigCount out{k, detail::count_distinct_k_sums(m, k, target)};
  if (k == 3) {
    std::uint64_t schur = 0, both = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        int z = m[i] + m[j];
        if (z > n) break;
        if (a.contains(z)) {
          ++schur;
          if (m[i] + m[j] + z == target) ++both;
        }
      }
    out.count += schur - both;
  }
  return out;
}

/// B_n = [ceil(2(n+1)/3), n] over the ground [1, n].
inline IntSet b_n(int n) {
  if (n < 1) throw PreconditionError("b_n requires n >= 1");
  IntSet out(1, n);
  for (int x = (2 * (n + 1) + 2) / 3; x <= n; ++x) out.insert(x);
  return out;
}

/// |a \ B_n|
inline int distance_to_bn(const IntSet& a, int n) {
  const int start = (2 * (n + 1) + 2) / 3;
  int d = 0;
  for (int x : a)
    if (x < start || x > n) ++d;
  return d;
}

}  // namespace sumfree
