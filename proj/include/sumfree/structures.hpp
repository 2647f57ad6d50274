#pragma once

/**
 * @file structures.hpp
 * @brief t-special sets, addition-closed sets, and the maps between them.
 *
 *   T_t  — t-special T ⊆ [0, 2t-1] with 0 ∈ T
 *   A_n  — A ⊆ [1, n] closed under addition (within [n]) with 2n+1 ∉ 3A
 *   D_n  — sum-free A ⊆ [1, n] with 2n+1 ∉ ΣA
 *
 * g : T_t → A_{t-1} is T ↦ T ∩ [1, t-1] and is a bijection; its inverse adds
 * 0 and the reflections 2t-1-ℓ of the missing ℓ. f : A_n → D_n drops, from
 * the top down, every element that is a sum of two smaller ones; it is
 * injective. The two enumerators below are independent searches, so the
 * bijection can be checked by counting both sides.
 */

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sumfree/core.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/int_set.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/profile.hpp"

namespace sumfree {

struct SpecialSet {
  int t = 1;
  IntSet members;  ///< ground [0, 2t-1]
};

struct ClosedSet {
  int n = 0;
  IntSet members;  ///< ground [1, n]
};

inline bool lex_less(const IntSet& a, const IntSet& b) {
  auto x = a.members(), y = b.members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

/// Definition check: |T| = t, 2t-1 ∉ 3T, and
/// [0, 2t-1+min T] \ (2t-1-T) ⊆ T+T (integer addition).
inline bool is_t_special(const IntSet& T, int t) {
  if (t < 1) throw PreconditionError("t must be >= 1");
  if (T.empty()) throw PreconditionError("t-special check needs a nonempty T");
  const int top = 2 * t - 1;
  if (*T.min() < 0 || *T.max() > top)
    throw PreconditionError("T must lie in [0, 2t-1]");
  if (static_cast<int>(T.size()) != t) return false;
  if (k_fold_sumset(T, 3, top).contains(top)) return false;
  const int reach = top + *T.min();
  const IntSet twice = sumset(T, T, reach).set;
  for (int x = 0; x <= reach; ++x) {
    const bool reflected = top - x >= 0 && T.contains(top - x);
    if (!reflected && !twice.contains(x)) return false;
  }
  return true;
}

inline bool is_closed_under_addition(const IntSet& A, int n) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  if (!A.empty() && (*A.min() < 1 || *A.max() > n))
    throw PreconditionError("closure check needs A ⊆ [1, n]");
  for (int x : A)
    for (int y : A) {
      if (y < x) continue;
      if (x + y > n) break;
      if (!A.contains(x + y)) return false;
    }
  return true;
}

/// Membership in A_n: closed under addition and 2n+1 ∉ 3A.
inline bool in_closed_family(const IntSet& A, int n) {
  if (!is_closed_under_addition(A, n)) return false;
  return !k_fold_sumset(A, 3, 2 * n + 1).contains(2 * n + 1);
}

namespace detail {

/// Running jX ∩ [0, cap] for j = 0..3, updated per inserted element.
struct ThreeLayers {
  explicit ThreeLayers(int cap) : layer(4, Bits(static_cast<std::size_t>(cap) + 1)) {
    layer[0].set(0);
  }
  /// Would x join a set whose 3-fold sumset then hits `target`?
  bool hits_with(int x, int target) const {
    for (int i = 1; i <= 3; ++i) {
      const int v = target - i * x;
      if (v < 0) break;
      if (layer[static_cast<std::size_t>(3 - i)].test(static_cast<std::size_t>(v))) return true;
    }
    return false;
  }
  void add(int x) {
    for (std::size_t j = 1; j <= 3; ++j) layer[j].or_shifted_up(layer[j - 1], static_cast<std::size_t>(x));
  }
  std::vector<Bits> layer;
};

inline int prefix_depth(int elements, unsigned workers) {
  return workers <= 1 ? 0 : std::min(elements, 8);
}

class SpecialSearch {
 public:
  SpecialSearch(int t, bool require_zero)
      : t_(t), top_(2 * t - 1), require_zero_(require_zero), chosen_(0, 2 * t - 1) {}

  /// Decisions for elements [0, depth) fixed by `mask`; searches the rest.
  void run(unsigned mask, int depth, std::vector<IntSet>& out) {
    ThreeLayers layers(top_);
    int size = 0;
    for (int x = 0; x < depth; ++x) {
      const bool take = (mask >> x) & 1U;
      if (x == 0 && require_zero_ && !take) return;
      if (!take) continue;
      if (layers.hits_with(x, top_)) return;
      layers.add(x);
      chosen_.insert(x);
      ++size;
    }
    if (depth == 0 && require_zero_) {
      layers.add(0);
      chosen_.insert(0);
      size = 1;
      dfs(1, size, layers, out);
      return;
    }
    dfs(depth, size, layers, out);
  }

 private:
  void dfs(int x, int size, const ThreeLayers& layers, std::vector<IntSet>& out) {
    if (size == t_) {
      if (is_t_special(chosen_, t_)) out.push_back(chosen_);
      return;
    }
    if (x > top_ || size + (top_ - x + 1) < t_) return;
    if (!layers.hits_with(x, top_)) {
      ThreeLayers next = layers;
      next.add(x);
      chosen_.insert(x);
      dfs(x + 1, size + 1, next, out);
      chosen_.erase(x);
    }
    dfs(x + 1, size, layers, out);
  }

  int t_;
  int top_;
  bool require_zero_;
  IntSet chosen_;
};

class ClosedSearch {
 public:
  explicit ClosedSearch(int n)
      : n_(n), chosen_(1, n), pair_sums_(static_cast<std::size_t>(n) + 1) {}

  void run(unsigned mask, int depth, std::vector<IntSet>& out) {
    ThreeLayers layers(2 * n_ + 1);
    for (int x = 1; x <= depth; ++x) {
      const bool take = (mask >> (x - 1)) & 1U;
      const bool forced = pair_sums_.test(static_cast<std::size_t>(x));
      if (forced && !take) return;
      if (!take) continue;
      if (layers.hits_with(x, 2 * n_ + 1)) return;
      add(x, layers);
    }
    dfs(depth + 1, layers, out);
  }

 private:
  void add(int x, ThreeLayers& layers) {
    layers.add(x);
    // New pairwise sums: x + a for a already chosen (chosen_ bit i is the
    // value 1 + i), and x + x.
    pair_sums_.or_shifted_up(chosen_.bits(), static_cast<std::size_t>(x) + 1);
    if (2 * x <= n_) pair_sums_.set(static_cast<std::size_t>(2 * x));
    chosen_.insert(x);
  }

  void dfs(int x, const ThreeLayers& layers, std::vector<IntSet>& out) {
    if (x > n_) {
      out.push_back(chosen_);
      return;
    }
    const bool forced = pair_sums_.test(static_cast<std::size_t>(x));
    const bool allowed = !layers.hits_with(x, 2 * n_ + 1);
    if (allowed) {
      ThreeLayers next = layers;
      const Bits saved_sums = pair_sums_;
      add(x, next);
      dfs(x + 1, next, out);
      chosen_.erase(x);
      pair_sums_ = saved_sums;
    }
    if (!forced) dfs(x + 1, layers, out);
  }

  int n_;
  IntSet chosen_;
  Bits pair_sums_;  ///< (chosen + chosen) ∩ [0, n]
};

}  // namespace detail

/// All t-special sets (only those containing 0 when require_zero), sorted
/// lexicographically by member list.
inline std::vector<SpecialSet> enumerate_t_special(int t, bool require_zero, unsigned workers = 1) {
  if (t < 1) throw PreconditionError("t must be >= 1");
  if (t > 20) throw PreconditionError("t above 20 is outside the enumeration budget");
  const int depth = detail::prefix_depth(2 * t, workers);
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<std::vector<IntSet>> parts(tasks);
  parallel_for(tasks, workers, [&](std::size_t mask) {
    detail::SpecialSearch(t, require_zero).run(static_cast<unsigned>(mask), depth, parts[mask]);
  });
  std::vector<IntSet> all;
  for (auto& p : parts)
    for (auto& s : p) all.push_back(std::move(s));
  std::sort(all.begin(), all.end(), lex_less);
  std::vector<SpecialSet> out;
  out.reserve(all.size());
  for (auto& s : all) out.push_back({t, std::move(s)});
  return out;
}

/// All of A_n, sorted lexicographically by member list. A_0 = {∅}.
inline std::vector<ClosedSet> enumerate_closed(int n, unsigned workers = 1) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  if (n > 40) throw PreconditionError("n above 40 is outside the enumeration budget");
  const int depth = detail::prefix_depth(n, workers);
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<std::vector<IntSet>> parts(tasks);
  parallel_for(tasks, workers, [&](std::size_t mask) {
    detail::ClosedSearch(n).run(static_cast<unsigned>(mask), depth, parts[mask]);
  });
  std::vector<IntSet> all;
  for (auto& p : parts)
    for (auto& s : p) all.push_back(std::move(s));
  std::sort(all.begin(), all.end(), lex_less);
  std::vector<ClosedSet> out;
  out.reserve(all.size());
  for (auto& s : all) out.push_back({n, std::move(s)});
  return out;
}

/// g(T) = T ∩ [1, t-1], as a member of A_{t-1}.
inline ClosedSet bijection_g(const SpecialSet& T) {
  if (T.members.empty() || !T.members.contains(0) || !is_t_special(T.members, T.t))
    throw PreconditionError("bijection_g needs a t-special set containing 0");
  ClosedSet out{T.t - 1, IntSet(1, T.t - 1)};
  for (int x : T.members)
    if (x >= 1 && x <= T.t - 1) out.members.insert(x);
  return out;
}

/// T = {0} ∪ A ∪ {(2t-1) - ℓ : ℓ ∈ [1, t-1] \ A}.
inline SpecialSet inverse_g(const ClosedSet& A, int t) {
  if (t < 1) throw PreconditionError("t must be >= 1");
  if (A.n != t - 1 || !in_closed_family(A.members, A.n))
    throw PreconditionError("inverse_g needs a member of A_{t-1}");
  SpecialSet T{t, IntSet(0, 2 * t - 1)};
  T.members.insert(0);
  for (int l = 1; l <= t - 1; ++l) {
    if (A.members.contains(l))
      T.members.insert(l);
    else
      T.members.insert(2 * t - 1 - l);
  }
  return T;
}

enum class FReading {
  /// Addends must still be present in the partially filtered set.
  working_set,
  /// Addends are taken from the original A.
  original_set,
};

/// Scans A from the largest element down and removes every element that is
/// x + y for (not necessarily distinct) smaller x, y.
inline IntSet projection_f(const ClosedSet& A, FReading reading = FReading::working_set) {
  if (!in_closed_family(A.members, A.n)) throw PreconditionError("projection_f needs a member of A_n");
  IntSet work = A.members;
  std::vector<int> desc = A.members.members();
  std::reverse(desc.begin(), desc.end());
  for (int z : desc) {
    const IntSet& pool = reading == FReading::working_set ? work : A.members;
    bool is_sum = false;
    for (int x : pool) {
      if (2 * x > z) break;
      if (pool.contains(z - x) && z - x < z) {
        is_sum = true;
        break;
      }
    }
    if (is_sum) work.erase(z);
  }
  return work;
}

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;
  /// Counts the check computed, for comparing runs.
  std::vector<std::uint64_t> values;
};

struct StructureReport {
  std::vector<CheckOutcome> checks;
  std::vector<std::uint64_t> special_with_zero;  ///< index t, from 1
  std::vector<std::uint64_t> closed_counts;      ///< index n, from 0
  std::vector<std::uint64_t> sumfree_counts;     ///< index n, from 1 (|D_n|)
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

/// Exhaustive verification of the T_t ↔ A_{t-1} bijection (t ≤ t_max) and
/// the injection A_n → D_n (n ≤ n_max). Failures are report content.
inline StructureReport verify_structures(int n_max, int t_max, unsigned workers = 1) {
  StructureReport rep;
  rep.special_with_zero.assign(static_cast<std::size_t>(std::max(t_max, 0)) + 1, 0);
  rep.closed_counts.assign(static_cast<std::size_t>(std::max(n_max, t_max)) + 1, 0);
  rep.sumfree_counts.assign(static_cast<std::size_t>(std::max(n_max, 0)) + 1, 0);

  auto fail = [](CheckOutcome& c, const std::string& why) {
    if (c.passed) c.detail = why;
    c.passed = false;
  };

  CheckOutcome counts{"|T_t| = |A_{t-1}|", true, {}, {}};
  CheckOutcome roundtrip{"g and its inverse are mutually inverse", true, {}, {}};
  CheckOutcome claim1{"exactly one of l, 2t-1-l in T", true, {}, {}};
  CheckOutcome claim2{"T closed under sums within [0, 2t-1]", true, {}, {}};
  for (int t = 1; t <= t_max; ++t) {
    const auto specials = enumerate_t_special(t, true, workers);
    const auto closed = enumerate_closed(t - 1, workers);
    rep.special_with_zero[static_cast<std::size_t>(t)] = specials.size();
    counts.values.push_back(specials.size());
    counts.values.push_back(closed.size());
    rep.closed_counts[static_cast<std::size_t>(t - 1)] = closed.size();
    if (specials.size() != closed.size())
      fail(counts, "t=" + std::to_string(t) + ": " + std::to_string(specials.size()) + " vs " +
                       std::to_string(closed.size()));

    std::set<std::vector<int>> images;
    for (const auto& T : specials) {
      const int top = 2 * t - 1;
      for (int l = 0; l <= t - 1; ++l)
        if (T.members.contains(l) == T.members.contains(top - l))
          fail(claim1, "t=" + std::to_string(t) + " T=" + T.members.to_string() +
                           " l=" + std::to_string(l));
      for (int a : T.members)
        for (int b : T.members)
          if (a + b <= top && !T.members.contains(a + b))
            fail(claim2, "t=" + std::to_string(t) + " T=" + T.members.to_string());
      const ClosedSet g = bijection_g(T);
      if (!in_closed_family(g.members, g.n))
        fail(roundtrip, "g(T) outside A_{t-1} for T=" + T.members.to_string());
      images.insert(g.members.members());
      if (!(inverse_g(g, t).members == T.members))
        fail(roundtrip, "inverse_g(g(T)) != T for T=" + T.members.to_string());
    }
    if (images.size() != specials.size())
      fail(roundtrip, "g not injective at t=" + std::to_string(t));
    for (const auto& A : closed) {
      const SpecialSet T = inverse_g(A, t);
      if (!is_t_special(T.members, t) || !(bijection_g(T).members == A.members))
        fail(roundtrip, "g(inverse_g(A)) != A for A=" + A.members.to_string());
    }
  }

  CheckOutcome lands{"f(A_n) ⊆ D_n", true, {}, {}};
  CheckOutcome injective{"f injective on A_n", true, {}, {}};
  CheckOutcome readings{"f readings agree", true, {}, {}};
  CheckOutcome sizes{"|A_n| <= |D_n|", true, {}, {}};
  const ProfileRule& dn = find_profile("sf-sigma-2n1");
  for (int n = 1; n <= n_max; ++n) {
    const auto closed = enumerate_closed(n, workers);
    rep.closed_counts[static_cast<std::size_t>(n)] = closed.size();
    const ConstraintProfile profile = dn.at(n);
    std::set<std::vector<int>> images;
    for (const auto& A : closed) {
      const IntSet fa = projection_f(A, FReading::working_set);
      if (!admits(profile, fa))
        fail(lands, "n=" + std::to_string(n) + " A=" + A.members.to_string() +
                        " f(A)=" + fa.to_string());
      if (!(projection_f(A, FReading::original_set) == fa))
        fail(readings, "n=" + std::to_string(n) + " A=" + A.members.to_string());
      images.insert(fa.members());
    }
    if (images.size() != closed.size()) fail(injective, "n=" + std::to_string(n));

    EnumTask task;
    task.n = n;
    task.profile = profile;
    task.workers = workers;
    task.parallel_split_depth = workers > 1 ? std::min(n, 8) : 0;
    const std::uint64_t d = count_admissible(task);
    rep.sumfree_counts[static_cast<std::size_t>(n)] = d;
    sizes.values.push_back(closed.size());
    sizes.values.push_back(d);
    if (closed.size() > d)
      fail(sizes, "n=" + std::to_string(n) + ": |A_n|=" + std::to_string(closed.size()) +
                      " > |D_n|=" + std::to_string(d));
  }

  for (auto* c : {&counts, &roundtrip, &claim1, &claim2, &lands, &injective, &readings, &sizes})
    rep.checks.push_back(std::move(*c));
  return rep;
}

}  // namespace sumfree
