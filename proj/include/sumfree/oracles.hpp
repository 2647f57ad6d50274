#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force baselines and small-scale checkers: naive counting,
 *        Freiman's 3k-4 theorem, the sumset lower bound, distinct-part
 *        partition counts, Tran's five alternatives, and the stability probe.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "sumfree/core.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/int_set.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/profile.hpp"

namespace sumfree {

inline constexpr int naive_count_cap = 22;

/// Number of A ⊆ [1, n] admitted by the profile, by testing all 2^n subsets
/// with the reference predicate.
inline std::uint64_t naive_count(int n, const ConstraintProfile& profile, unsigned workers = 1) {
  if (n < 0) throw PreconditionError("naive_count requires n >= 0");
  if (n > naive_count_cap)
    throw PreconditionError("naive_count is capped at n = " + std::to_string(naive_count_cap));
  // Split on the top (up to) 6 bits of the mask.
  const int hi_bits = std::min(n, 6);
  const int lo_bits = n - hi_bits;
  const std::size_t chunks = std::size_t{1} << hi_bits;
  std::vector<std::uint64_t> counts(chunks, 0);
  parallel_for(chunks, workers, [&](std::size_t chunk) {
    std::uint64_t c = 0;
    IntSet a(1, n);
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << lo_bits); ++low) {
      const std::uint64_t mask = (static_cast<std::uint64_t>(chunk) << lo_bits) | low;
      a = IntSet(1, n);
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1U) a.insert(i + 1);
      if (admits(profile, a)) ++c;
    }
    counts[chunk] = c;
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

struct FreimanResult {
  /// |A| >= 2 and |A+A| <= 3|A| - 4.
  bool applicable = false;
  /// ap_length <= bound (vacuously true when not applicable).
  bool holds = true;
  int ap_length = 0;
  int bound = 0;
  std::size_t sumset_size = 0;
};

/// Length of the shortest arithmetic progression containing A (|A| >= 2).
inline int shortest_ap_length(const IntSet& a) {
  if (a.size() < 2) throw PreconditionError("shortest AP needs |A| >= 2");
  const int lo = *a.min();
  int d = 0;
  for (int x : a) d = std::gcd(d, x - lo);
  return (*a.max() - lo) / d + 1;
}

/// If |A+A| <= 3|A| - 4, A lies in an AP of length at most |A+A| - |A| + 1.
inline FreimanResult freiman_ap_check(const IntSet& a) {
  if (a.size() < 2) throw PreconditionError("freiman_ap_check requires |A| >= 2");
  FreimanResult r;
  const auto two = sumset(a, a, a.hi() * 2).set;
  const int k = static_cast<int>(a.size());
  r.sumset_size = two.size();
  r.ap_length = shortest_ap_length(a);
  r.bound = static_cast<int>(r.sumset_size) - k + 1;
  r.applicable = static_cast<int>(r.sumset_size) <= 3 * k - 4;
  r.holds = !r.applicable || r.ap_length <= r.bound;
  return r;
}

struct FreimanSweep {
  std::uint64_t sets = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  std::vector<int> first_violation;
};

namespace detail {

/// DFS over A ⊆ [1, n] in increasing order, tracking A+A and the gap gcd in
/// 64-bit words (n <= 31 keeps sums within bit 62).
class FreimanScan {
 public:
  FreimanScan(int n, int max_size) : n_(n), max_size_(max_size) {}

  void from(int first, FreimanSweep& out) {
    std::vector<int> chosen{first};
    const std::uint64_t a = std::uint64_t{1} << first;
    dfs(first + 1, a, a << first, 0, chosen, out);
  }

 private:
  void dfs(int next, std::uint64_t a, std::uint64_t two, int g, std::vector<int>& chosen,
           FreimanSweep& out) {
    const int k = static_cast<int>(chosen.size());
    if (k >= 2) {
      ++out.sets;
      const int size2 = std::popcount(two);
      if (size2 <= 3 * k - 4) {
        ++out.applicable;
        const int len = (chosen.back() - chosen.front()) / g + 1;
        if (len > size2 - k + 1) {
          if (out.violations == 0) out.first_violation = chosen;
          ++out.violations;
        }
      }
    }
    if (k == max_size_) return;
    for (int x = next; x <= n_; ++x) {
      const std::uint64_t na = a | (std::uint64_t{1} << x);
      chosen.push_back(x);
      dfs(x + 1, na, two | (na << x), std::gcd(g, x - chosen.front()), chosen, out);
      chosen.pop_back();
    }
  }

  int n_;
  int max_size_;
};

}  // namespace detail

/// Freiman's 3k-4 check over every A ⊆ [1, n] with 2 <= |A| <= max_size.
inline FreimanSweep freiman_sweep(int n, int max_size, unsigned workers = 1) {
  if (n < 1 || n > 31) throw PreconditionError("freiman_sweep supports 1 <= n <= 31");
  std::vector<FreimanSweep> parts(static_cast<std::size_t>(n));
  parallel_for(parts.size(), workers, [&](std::size_t i) {
    detail::FreimanScan(n, max_size).from(static_cast<int>(i) + 1, parts[i]);
  });
  FreimanSweep total;
  for (auto& p : parts) {
    total.sets += p.sets;
    total.applicable += p.applicable;
    if (p.violations && total.violations == 0) total.first_violation = p.first_violation;
    total.violations += p.violations;
  }
  return total;
}

/// |A+B| >= |A| + |B| - 1 for nonempty A, B.
inline bool sumset_bound_check(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) throw PreconditionError("sumset_bound_check needs nonempty sets");
  const auto s = sumset(a, b, a.hi() + b.hi()).set;
  return s.size() + 1 >= a.size() + b.size();
}

struct RandomSuite {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
};

/// Random nonempty A, B ⊆ [1, universe], each with its own density.
inline RandomSuite sumset_bound_suite(std::uint64_t trials, std::uint64_t seed, int universe = 50) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.02, 0.9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> any(1, universe);
  auto draw = [&] {
    IntSet s(1, universe);
    const double p = density(rng);
    for (int x = 1; x <= universe; ++x)
      if (coin(rng) < p) s.insert(x);
    if (s.empty()) s.insert(any(rng));
    return s;
  };
  RandomSuite out;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const IntSet a = draw();
    const IntSet b = draw();
    ++out.trials;
    if (!sumset_bound_check(a, b)) ++out.violations;
  }
  return out;
}

/// Number of l-element sets of positive integers summing to k.
inline std::uint64_t count_partitions_distinct(int k, int l) {
  if (k < 1 || l < 1) throw PreconditionError("count_partitions_distinct requires k, l >= 1");
  // q[j][s]: j distinct positive parts summing to s. Subtracting 1 from each
  // part maps to j parts >= 1 (drop the smallest if it was 1) or j-1 parts.
  std::vector<std::vector<std::uint64_t>> q(static_cast<std::size_t>(l) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
  q[0][0] = 1;
  for (int j = 1; j <= l; ++j)
    for (int s = j; s <= k; ++s) q[j][s] = q[j][s - j] + q[j - 1][s - j];
  return q[l][k];
}

/// (e^2 k / l^2)^l
inline long double partition_bound(int k, int l) {
  const long double e2 = std::exp(2.0L);
  return std::pow(e2 * k / (static_cast<long double>(l) * l), static_cast<long double>(l));
}

struct PartitionSuite {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
};

inline PartitionSuite partition_bound_suite(int k_max, int l_max) {
  PartitionSuite out;
  for (int k = 1; k <= k_max; ++k)
    for (int l = 1; l <= l_max; ++l) {
      ++out.pairs;
      if (static_cast<long double>(count_partitions_distinct(k, l)) > partition_bound(k, l))
        ++out.violations;
    }
  return out;
}

using Rational = boost::rational<long long>;

struct TranReport {
  /// Indices in {1, ..., 5}, ascending.
  std::vector<int> alternatives_satisfied;
  Rational eta;
  /// Rational upper bound on sqrt(eta) used for the margins of alternative 5.
  Rational sqrt_eta_bound;
  std::array<std::string, 5> details;

  bool satisfies(int alt) const {
    return std::find(alternatives_satisfied.begin(), alternatives_satisfied.end(), alt) !=
           alternatives_satisfied.end();
  }
};

/// Smallest m / 2^20 with (m / 2^20)^2 >= eta, for 0 <= eta <= 1.
inline Rational sqrt_upper(const Rational& eta) {
  constexpr long long scale = 1LL << 20;
  __extension__ using wide = __int128;
  // m^2 * den >= num * scale^2
  const wide num = eta.numerator();
  const wide den = eta.denominator();
  const wide rhs = num * scale * scale;
  long long m = static_cast<long long>(std::sqrt(static_cast<long double>(rhs) / den));
  while (m > 0 && static_cast<wide>(m - 1) * (m - 1) * den >= rhs) --m;
  while (static_cast<wide>(m) * m * den < rhs) ++m;
  return Rational(m, scale);
}

/// Which of Tran's five alternatives the sum-free set A ⊆ [1, n] satisfies:
///   1. every element is 1 or 4 mod 5
///   2. every element is 2 or 3 mod 5
///   3. every element is odd
///   4. min(A) >= |A|
///   5. A ⊆ [(1/5 - 200 r) n, (2/5 + 200 r) n] ∪ [(4/5 - 200 r) n, n], r >= sqrt(eta)
/// Requires A sum-free, 0 <= eta <= 1 and |A| >= (2/5 - eta) n.
inline TranReport tran_classify(const IntSet& a, int n, const Rational& eta) {
  if (n < 1) throw PreconditionError("tran_classify requires n >= 1");
  if (eta < Rational(0) || eta > Rational(1))
    throw PreconditionError("tran_classify requires 0 <= eta <= 1");
  if (!a.empty() && (*a.min() < 1 || *a.max() > n))
    throw PreconditionError("tran_classify requires A ⊆ [1, n]");
  if (!is_sum_free(a)) throw PreconditionError("tran_classify requires a sum-free set");
  const Rational size(static_cast<long long>(a.size()));
  if (size < (Rational(2, 5) - eta) * Rational(n))
    throw PreconditionError("tran_classify requires |A| >= (2/5 - eta) n");

  TranReport rep;
  rep.eta = eta;
  rep.sqrt_eta_bound = sqrt_upper(eta);
  const std::vector<int> m = a.members();
  auto all = [&](auto pred) { return std::all_of(m.begin(), m.end(), pred); };

  const bool alt[5] = {
      all([](int x) { return x % 5 == 1 || x % 5 == 4; }),
      all([](int x) { return x % 5 == 2 || x % 5 == 3; }),
      all([](int x) { return x % 2 == 1; }),
      a.empty() || *a.min() >= static_cast<int>(a.size()),
      [&] {
        const Rational margin = Rational(200) * rep.sqrt_eta_bound;
        const Rational nn(n);
        const Rational lo1 = (Rational(1, 5) - margin) * nn, hi1 = (Rational(2, 5) + margin) * nn;
        const Rational lo2 = (Rational(4, 5) - margin) * nn;
        return all([&](int x) {
          const Rational r(x);
          return (lo1 <= r && r <= hi1) || (lo2 <= r && r <= nn);
        });
      }(),
  };
  const char* names[5] = {"all elements 1 or 4 mod 5", "all elements 2 or 3 mod 5",
                          "all elements odd", "min(A) >= |A|", "A inside the two-interval window"};
  for (int i = 0; i < 5; ++i) {
    if (alt[i]) rep.alternatives_satisfied.push_back(i + 1);
    rep.details[static_cast<std::size_t>(i)] = std::string(names[i]) + (alt[i] ? ": yes" : ": no");
  }
  return rep;
}

struct StabilityProbe {
  ConfigCount c3{3, 0};
  ConfigCount c4{4, 0};
  ConfigCount c5{5, 0};
  int dist = 0;

  bool all_zero() const { return c3.count == 0 && c4.count == 0 && c5.count == 0 && dist == 0; }
};

/// F^(k)_n counts for k = 3, 4, 5 and |A \ B_n|. Measurement only.
inline StabilityProbe stability_probe(const IntSet& a, int n) {
  StabilityProbe p;
  p.c3 = count_forbidden_k_subsets(a, n, 3);
  p.c4 = count_forbidden_k_subsets(a, n, 4);
  p.c5 = count_forbidden_k_subsets(a, n, 5);
  p.dist = distance_to_bn(a, n);
  return p;
}

/// Odd integers in [1, floor(2n/3)] over the ground [1, n].
inline IntSet odd_lower_block(int n) {
  IntSet out(1, n);
  for (int x = 1; x <= 2 * n / 3; x += 2) out.insert(x);
  return out;
}

}  // namespace sumfree
