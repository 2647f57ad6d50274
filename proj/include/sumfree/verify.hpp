#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive small-n checks, each returning a CheckOutcome, and the
 *        aggregate run behind the `verify` command.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sumfree/core.hpp"
#include "sumfree/cyclic.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/oracles.hpp"
#include "sumfree/profile.hpp"
#include "sumfree/structures.hpp"

namespace sumfree {

namespace detail {

inline void fail(CheckOutcome& c, const std::string& why) {
  if (c.passed) c.detail = why;
  c.passed = false;
}

inline std::string at_n(int n) { return "n=" + std::to_string(n) + ": "; }

}  // namespace detail

/// Engine count against the 2^n scan for every registered profile, n <= n_max.
inline CheckOutcome check_oracle_equivalence(int n_max, unsigned workers = 1) {
  CheckOutcome c{"engine count = naive count, all profiles, n <= " + std::to_string(n_max), true, {}, {}};
  for (const auto& rule : profile_registry())
    for (int n = 1; n <= n_max; ++n) {
      const ConstraintProfile prof = rule.at(n);
      const std::uint64_t fast = count_admissible(make_task(n, prof, EnumMode::count, workers));
      const std::uint64_t slow = naive_count(n, prof, workers);
      c.values.push_back(fast);
      if (fast != slow)
        detail::fail(c, rule.id + " " + detail::at_n(n) + std::to_string(fast) + " vs naive " +
                            std::to_string(slow));
    }
  return c;
}

/// max = floor((n+1)/3) with B_n among the witnesses, for sf-34a-2n1 and
/// sf-sigma-2n1.
inline CheckOutcome check_extremal_2n1(int n_max, unsigned workers = 1) {
  CheckOutcome c{"max = floor((n+1)/3) with B_n a witness, n <= " + std::to_string(n_max), true, {}, {}};
  for (const char* id : {"sf-34a-2n1", "sf-sigma-2n1"}) {
    const ProfileRule& rule = find_profile(id);
    for (int n = 1; n <= n_max; ++n) {
      const MaxResult m = max_admissible(make_task(n, rule.at(n), EnumMode::max, workers));
      c.values.push_back(static_cast<std::uint64_t>(m.size));
      c.values.push_back(m.num_witnesses);
      if (m.size != (n + 1) / 3)
        detail::fail(c, std::string(id) + " " + detail::at_n(n) + "max " + std::to_string(m.size));
      const IntSet bn = b_n(n);
      if (std::find(m.witnesses.begin(), m.witnesses.end(), bn) == m.witnesses.end())
        detail::fail(c, std::string(id) + " " + detail::at_n(n) + "B_n not among witnesses");
    }
  }
  return c;
}

/// Every subset of B_n is admissible under sf-sigma-2n1, and the engine count
/// is at least 2^|B_n|.
inline CheckOutcome check_lower_bound_family(int n_max, unsigned workers = 1) {
  CheckOutcome c{"subsets of B_n admissible, count >= 2^floor((n+1)/3), n <= " + std::to_string(n_max),
                 true, {}, {}};
  const ProfileRule& rule = find_profile("sf-sigma-2n1");
  for (int n = 1; n <= n_max; ++n) {
    const ConstraintProfile prof = rule.at(n);
    const std::vector<int> bn = b_n(n).members();
    const std::size_t m = bn.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      IntSet s(1, n);
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1U) s.insert(bn[i]);
      if (!admits(prof, s)) {
        detail::fail(c, detail::at_n(n) + s.to_string() + " rejected");
        break;
      }
    }
    const std::uint64_t count = count_admissible(make_task(n, prof, EnumMode::count, workers));
    c.values.push_back(count);
    if (count < (std::uint64_t{1} << ((n + 1) / 3)))
      detail::fail(c, detail::at_n(n) + "count " + std::to_string(count));
  }
  return c;
}

/// {x <= n : x = 1, 4 mod 5} over [1, n].
inline IntSet mod5_construction(int n) {
  IntSet out(1, n);
  for (int x = 1; x <= n; ++x)
    if (x % 5 == 1 || x % 5 == 4) out.insert(x);
  return out;
}

/// For n = 2 mod 5: the mod-5 construction is sum-free, avoids 2n+1 in 3A,
/// has size ceil(2n/5), and the sf-3a-2n1 maximum is at least that size.
/// The maxima for every n <= n_max are recorded in `values`.
inline CheckOutcome check_3a_construction(int n_max, unsigned workers = 1) {
  CheckOutcome c{"3A-only: mod-5 construction and max >= ceil(2n/5), n = 2 mod 5, n <= " +
                     std::to_string(n_max),
                 true, {}, {}};
  const ProfileRule& rule = find_profile("sf-3a-2n1");
  for (int n = 1; n <= n_max; ++n) {
    const ConstraintProfile prof = rule.at(n);
    const MaxResult m = max_admissible(make_task(n, prof, EnumMode::max, workers));
    c.values.push_back(static_cast<std::uint64_t>(m.size));
    if (n % 5 != 2) continue;
    const IntSet e = mod5_construction(n);
    const int target = (2 * n + 4) / 5;
    if (!is_sum_free(e)) detail::fail(c, detail::at_n(n) + "construction not sum-free");
    if (k_fold_sumset(e, 3, 2 * n + 1).contains(2 * n + 1))
      detail::fail(c, detail::at_n(n) + "2n+1 in 3A");
    if (static_cast<int>(e.size()) != target)
      detail::fail(c, detail::at_n(n) + "size " + std::to_string(e.size()));
    if (m.size < target) detail::fail(c, detail::at_n(n) + "max " + std::to_string(m.size));
  }
  return c;
}

/// [ceil((2n+1)/3), n-1] over [1, n]
inline IntSet extremal_2n_witness(int n) {
  IntSet out(1, n);
  for (int x = (2 * n + 3) / 3; x <= n - 1; ++x) out.insert(x);
  return out;
}

/// Under (sum-free, 2n ∉ ΣA) the maximum is floor((n-1)/3), attained by
/// [ceil((2n+1)/3), n-1].
inline CheckOutcome check_extremal_2n(int n_max, unsigned workers = 1) {
  CheckOutcome c{"2n forbidden: max = floor((n-1)/3) with interval witness, n <= " +
                     std::to_string(n_max),
                 true, {}, {}};
  const ProfileRule& rule = find_profile("sf-sigma-2n");
  for (int n = 1; n <= n_max; ++n) {
    const ConstraintProfile prof = rule.at(n);
    const MaxResult m = max_admissible(make_task(n, prof, EnumMode::max, workers));
    c.values.push_back(static_cast<std::uint64_t>(m.size));
    c.values.push_back(m.num_witnesses);
    if (m.size != (n - 1) / 3) detail::fail(c, detail::at_n(n) + "max " + std::to_string(m.size));
    const IntSet w = extremal_2n_witness(n);
    if (static_cast<int>(w.size()) != m.size || !admits(prof, w))
      detail::fail(c, detail::at_n(n) + "witness " + w.to_string() + " fails");
  }
  return c;
}

/// The p, s census of symmetric complete sum-free sets matches the S_T
/// construction, with the (p-1)/2 factor.
inline CheckOutcome check_zp_cross_check(int p, int s, unsigned workers = 1) {
  CheckOutcome c{"Z_" + std::to_string(p) + " size-" + std::to_string(s) +
                     " census = dilations of S_T",
                 true, {}, {}};
  const StCrossCheck x = st_cross_check(p, s, workers);
  c.values = {x.census_count, x.special_count, x.special_with_zero, x.orbits_containing_s};
  if (!x.members_match) detail::fail(c, "census members differ from the S_T dilations");
  if (!x.gap_matches)
    detail::fail(c, "count " + std::to_string(x.census_count) + " != (p-1)/2 * " +
                        std::to_string(x.special_count));
  if (!x.s_members_from_zero_t) detail::fail(c, "a member containing s is not from a T with 0");
  if (c.passed)
    c.detail = "count " + std::to_string(x.census_count) + " = " + std::to_string((p - 1) / 2) +
               " x " + std::to_string(x.special_count);
  return c;
}

inline CheckOutcome check_freiman(int n, int max_size, unsigned workers = 1) {
  CheckOutcome c{"Freiman 3k-4 over A ⊆ [1," + std::to_string(n) + "], |A| <= " +
                     std::to_string(max_size),
                 true, {}, {}};
  const FreimanSweep f = freiman_sweep(n, max_size, workers);
  c.values = {f.sets, f.applicable, f.violations};
  c.detail = std::to_string(f.applicable) + " applicable of " + std::to_string(f.sets);
  if (f.violations) {
    IntSet a(1, n);
    for (int x : f.first_violation) a.insert(x);
    detail::fail(c, std::to_string(f.violations) + " violations, first " + a.to_string());
  }
  return c;
}

inline CheckOutcome check_sumset_bound(std::uint64_t trials, std::uint64_t seed = 20241) {
  CheckOutcome c{"|A+B| >= |A|+|B|-1 on " + std::to_string(trials) + " random pairs", true, {}, {}};
  const RandomSuite r = sumset_bound_suite(trials, seed);
  c.values = {r.trials, r.violations};
  if (r.violations) detail::fail(c, std::to_string(r.violations) + " violations");
  return c;
}

inline CheckOutcome check_partition_bound(int k_max, int l_max) {
  CheckOutcome c{"distinct-part partitions <= (e^2 k/l^2)^l, k <= " + std::to_string(k_max) +
                     ", l <= " + std::to_string(l_max),
                 true, {}, {}};
  const PartitionSuite r = partition_bound_suite(k_max, l_max);
  c.values = {r.pairs, r.violations};
  if (r.violations) detail::fail(c, std::to_string(r.violations) + " violations");
  return c;
}

/// stability_probe(B_n, n) is all zeros for n <= n_max.
inline CheckOutcome check_stability_bn(int n_max) {
  CheckOutcome c{"stability probe of B_n is zero, n <= " + std::to_string(n_max), true, {}, {}};
  for (int n = 1; n <= n_max; ++n)
    if (!stability_probe(b_n(n), n).all_zero()) detail::fail(c, detail::at_n(n) + "nonzero");
  return c;
}

/// Odd integers in [1, floor(2n/3)]: no F^(3)_n or F^(4)_n sets, distance
/// |A| from B_n. With require_c5, also c5 > 0.
inline CheckOutcome check_odd_block(const std::vector<int>& ns, bool require_c5) {
  CheckOutcome c{require_c5 ? "odd block: c3 = c4 = 0 and c5 > 0" : "odd block: c3 = c4 = 0", true,
                 {}, {}};
  std::string measured;
  for (int n : ns) {
    const IntSet a = odd_lower_block(n);
    const StabilityProbe p = stability_probe(a, n);
    c.values.insert(c.values.end(), {p.c3.count, p.c4.count, p.c5.count});
    measured += (measured.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) +
                " c5=" + std::to_string(p.c5.count);
    if (p.c3.count || p.c4.count)
      detail::fail(c, detail::at_n(n) + "c3=" + std::to_string(p.c3.count) +
                          " c4=" + std::to_string(p.c4.count));
    if (p.dist != static_cast<int>(a.size())) detail::fail(c, detail::at_n(n) + "dist != |A|");
    if (require_c5 && p.c5.count == 0) detail::fail(c, detail::at_n(n) + "c5=0");
  }
  if (c.passed) c.detail = measured;
  else c.detail += " (" + measured + ")";
  return c;
}

struct VerifyOptions {
  int n_max = 16;
  int t_max = 10;
  unsigned workers = 1;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

/// Every check above at the given scale, plus the structure checks.
inline VerifyReport run_verification(const VerifyOptions& opt) {
  if (opt.n_max < 1) throw PreconditionError("--n-max must be >= 1");
  if (opt.t_max < 1) throw PreconditionError("--t-max must be >= 1");
  const int naive_n = std::min(opt.n_max, naive_count_cap);
  VerifyReport rep;
  rep.checks.push_back(check_oracle_equivalence(naive_n, opt.workers));
  rep.checks.push_back(check_extremal_2n1(opt.n_max, opt.workers));
  rep.checks.push_back(check_lower_bound_family(opt.n_max, opt.workers));
  rep.checks.push_back(check_3a_construction(opt.n_max, opt.workers));
  rep.checks.push_back(check_extremal_2n(opt.n_max, opt.workers));
  StructureReport s = verify_structures(opt.n_max, opt.t_max, opt.workers);
  for (auto& c : s.checks) rep.checks.push_back(std::move(c));
  rep.checks.push_back(check_zp_cross_check(31, 10, opt.workers));
  rep.checks.push_back(check_freiman(30, 8, opt.workers));
  rep.checks.push_back(check_sumset_bound(10'000));
  rep.checks.push_back(check_partition_bound(60, 10));
  rep.checks.push_back(check_stability_bn(200));
  rep.checks.push_back(check_odd_block({15, 30, 45}, false));
  return rep;
}

}  // namespace sumfree
