#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "sumfree/cyclic.hpp"

using namespace sumfree;

namespace {

ZpSet from_bits(int p, std::uint64_t mask) {
  ZpSet s(p);
  for (int i = 0; i < p; ++i)
    if ((mask >> i) & 1U) s.insert(i);
  return s;
}

bool naive_complete(const ZpSet& s) {
  const int p = s.modulus();
  for (int g = 0; g < p; ++g) {
    if (s.contains(g)) continue;
    bool found = false;
    for (int x = 0; x < p && !found; ++x)
      for (int y = 0; y < p && !found; ++y)
        found = s.contains(x) && s.contains(y) && (x + y) % p == g;
    if (!found) return false;
  }
  return true;
}

bool naive_sum_free(const ZpSet& s) {
  const int p = s.modulus();
  for (int x : s.members())
    for (int y : s.members())
      if (s.contains((x + y) % p)) return false;
  return true;
}

/// Every symmetric subset via its positive half, filtered by the predicates.
std::map<int, std::uint64_t> naive_census(int p) {
  std::map<int, std::uint64_t> out;
  const int h = (p - 1) / 2;
  for (std::uint64_t half = 0; half < (std::uint64_t{1} << h); ++half) {
    ZpSet s(p);
    for (int x = 1; x <= h; ++x)
      if ((half >> (x - 1)) & 1U) {
        s.insert(x);
        s.insert(-x);
      }
    if (is_sum_free_zp(s) && is_complete(s)) ++out[static_cast<int>(s.size())];
  }
  return out;
}

ZpSet s31() {
  ZpSet s(31, {10, 21});
  for (int x = 12; x <= 19; ++x) s.insert(x);
  return s;
}

}  // namespace

TEST(ZpPredicates, Examples) {
  for (int p : {5, 7, 11, 13}) {
    ZpSet all(p);
    for (int x = 1; x < p; ++x) all.insert(x);
    EXPECT_TRUE(is_symmetric(all));
    EXPECT_TRUE(is_complete(all));
    EXPECT_FALSE(is_sum_free_zp(all));
    ZpSet none(p);
    EXPECT_TRUE(is_symmetric(none));
    EXPECT_TRUE(is_sum_free_zp(none));
    EXPECT_FALSE(is_complete(none));
  }
  EXPECT_TRUE(is_symmetric(s31()));
  EXPECT_TRUE(is_complete(s31()));
  EXPECT_TRUE(is_sum_free_zp(s31()));
  ZpSet five(5, {2, 3});
  EXPECT_TRUE(is_symmetric(five) && is_complete(five) && is_sum_free_zp(five));
}

TEST(ZpPredicates, NonPrimeModulusRejected) {
  EXPECT_THROW(ZpSet(9), PreconditionError);
  EXPECT_THROW(ZpSet(1), PreconditionError);
}

TEST(ZpPredicates, MatchNaiveLoops) {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
    for (int trial = 0; trial < 300; ++trial) {
      const ZpSet s = from_bits(p, rng() & ((std::uint64_t{1} << p) - 1));
      ASSERT_EQ(is_complete(s), naive_complete(s)) << p << " " << s.to_string();
      ASSERT_EQ(is_sum_free_zp(s), naive_sum_free(s)) << p << " " << s.to_string();
      bool sym = true;
      for (int x : s.members()) sym = sym && s.contains(p - x);
      ASSERT_EQ(is_symmetric(s), sym);
    }
}

TEST(BuildST, Examples) {
  const PrimeParams pp = PrimeParams::make(31, 10);
  EXPECT_EQ(pp.t, 1);
  EXPECT_EQ(build_S_T(pp, IntSet(0, 1, {0})), s31());
  EXPECT_EQ(build_S_T(pp, IntSet(0, 1, {0})).size(), 10U);
  const ZpSet empty_t = build_S_T(pp, IntSet(0, 1));
  EXPECT_EQ(empty_t.size(), 8U);
  EXPECT_EQ(empty_t.members(), (std::vector<int>{12, 13, 14, 15, 16, 17, 18, 19}));
  EXPECT_THROW(build_S_T(pp, IntSet(0, 5, {4})), PreconditionError);
}

TEST(BuildST, ParamsValidated) {
  EXPECT_THROW(PrimeParams::make(31, 9), PreconditionError);
  EXPECT_THROW(PrimeParams::make(31, 12), PreconditionError);
  EXPECT_THROW(PrimeParams::make(33, 10), PreconditionError);
  EXPECT_THROW(PrimeParams::make(31, 8), PreconditionError);
  EXPECT_EQ(PrimeParams::make(43, 12).t, 4);
}

TEST(BuildST, SizeFormulaAndZeroMembership) {
  for (int p : {29, 31, 37, 41, 43, 47, 53})
    for (int s = 2; 3 * s <= p - 1; s += 2) {
      if (4 * s < p + 3) continue;
      const PrimeParams pp = PrimeParams::make(p, s);
      for (bool z : {true, false})
        for (const auto& T : enumerate_t_special(pp.t, z)) {
          const ZpSet st = build_S_T(pp, T.members);
          EXPECT_TRUE(is_symmetric(st));
          EXPECT_EQ(static_cast<int>(st.size()), (4 * s - p - 1) + 2 * static_cast<int>(T.members.size()));
          EXPECT_EQ(T.members.contains(0), st.contains(s));
        }
    }
}

TEST(Dilation, GroupAction) {
  const ZpSet s = s31();
  EXPECT_EQ(dilate(s, 1), s);
  for (int lam = 1; lam < 31; ++lam) {
    int inv = 1;
    while ((inv * lam) % 31 != 1) ++inv;
    EXPECT_EQ(dilate(dilate(s, lam), inv), s);
  }
  EXPECT_THROW(dilate(s, 0), PreconditionError);
  EXPECT_THROW(dilate(s, 62), PreconditionError);
}

TEST(Dilation, OrbitSizeDividesHalf) {
  std::mt19937_64 rng(99);
  for (int p : {5, 7, 11, 13, 17, 19, 23, 29, 31})
    for (int trial = 0; trial < 40; ++trial) {
      ZpSet s(p);
      for (int x = 1; x <= (p - 1) / 2; ++x)
        if (rng() & 1U) {
          s.insert(x);
          s.insert(-x);
        }
      const auto orbit = dilation_orbit(s);
      EXPECT_EQ(((p - 1) / 2) % orbit.size(), 0U) << p << " " << s.to_string();
    }
}

TEST(Dilation, CanonicalFormIsOrbitInvariant) {
  const ZpSet c = canonical_form(s31());
  for (int lam = 1; lam < 31; ++lam) EXPECT_EQ(canonical_form(dilate(s31(), lam)), c);
  for (const auto& d : dilation_orbit(s31())) EXPECT_LE(c.members(), d.members());
}

TEST(Census, P31) {
  const auto rows = census_scsf(31);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].size, 8);
  EXPECT_EQ(rows[0].count, 30U);
  EXPECT_EQ(rows[1].size, 10);
  EXPECT_EQ(rows[1].count, 15U);
  EXPECT_EQ(rows[1].representatives.size(), 1U);
  EXPECT_TRUE(rows[1].in_theorem_range);
  EXPECT_EQ(rows[1].representatives[0], canonical_form(s31()).members());

  const auto only10 = census_scsf(31, 10);
  ASSERT_EQ(only10.size(), 1U);
  EXPECT_EQ(only10[0].count, 15U);
  const auto none = census_scsf(31, 9);
  ASSERT_EQ(none.size(), 1U);
  EXPECT_EQ(none[0].count, 0U);
}

TEST(Census, P5HasTheHandCheckedSet) {
  const auto members = scsf_members(5);
  std::set<std::vector<int>> got;
  for (const auto& m : members) got.insert(m.members());
  EXPECT_TRUE(got.contains(std::vector<int>{2, 3}));
  EXPECT_EQ(census_scsf(5)[0].count, 2U);
}

TEST(Census, MatchesNaiveEnumeration) {
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    std::map<int, std::uint64_t> got;
    for (const auto& row : census_scsf(p)) got[row.size] = row.count;
    EXPECT_EQ(got, naive_census(p)) << p;
  }
}

TEST(Census, WorkerIndependent) {
  for (int p : {29, 31, 37, 41, 43}) {
    const auto a = census_scsf(p, std::nullopt, 1), b = census_scsf(p, std::nullopt, 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].count, b[i].count);
      EXPECT_EQ(a[i].representatives, b[i].representatives);
    }
  }
}

TEST(Census, LimitEnforced) {
  EXPECT_THROW(census_scsf(47), PreconditionError);
  EXPECT_THROW(census_scsf(31, std::nullopt, 1, 29), PreconditionError);
  EXPECT_NO_THROW(census_scsf(47, 16, 4, 47));
}

TEST(CrossCheck, P31S10) {
  const StCrossCheck x = st_cross_check(31, 10, 4);
  EXPECT_EQ(x.census_count, 15U);
  EXPECT_EQ(x.special_count, 1U);
  EXPECT_EQ(x.special_with_zero, 1U);
  EXPECT_TRUE(x.members_match);
  EXPECT_TRUE(x.gap_matches);
  EXPECT_TRUE(x.s_members_from_zero_t);
  EXPECT_EQ(x.orbits_containing_s, 1U);
  // Members containing 10 are exactly the dilations of S_{0} that contain 10.
  const ZpSet st = build_S_T(x.params, IntSet(0, 1, {0}));
  for (const auto& m : scsf_members(31, 10))
    if (m.contains(10)) {
      EXPECT_EQ(canonical_form(m), canonical_form(st));
    }
}

TEST(CrossCheck, TheoremRangeInstances) {
  // Primes up to 43 with an even s in [0.318p, (p-1)/3].
  for (auto [p, s] : {std::pair{31, 10}, {37, 12}, {43, 14}}) {
    ASSERT_TRUE(in_theorem_range(p, s));
    const StCrossCheck x = st_cross_check(p, s, 4);
    EXPECT_TRUE(x.passed()) << p << " " << s;
    EXPECT_EQ(x.census_count, static_cast<std::uint64_t>((p - 1) / 2) * x.special_count);
  }
  EXPECT_FALSE(in_theorem_range(43, 12));
  EXPECT_FALSE(in_theorem_range(31, 9));
}

TEST(ZeroSum, Examples) {
  EXPECT_EQ(find_small_zero_sum(IntSet(0, 6, {0, 3, 5}), 7), IntSet(0, 6, {0}));
  EXPECT_EQ(find_small_zero_sum(IntSet(0, 9, {1, 9}), 10), IntSet(0, 9, {1, 9}));
  EXPECT_FALSE(find_small_zero_sum(IntSet(0, 6, {1, 2}), 7).has_value());
  EXPECT_EQ(find_small_zero_sum(IntSet(0, 6, {1, 2, 4}), 7), IntSet(0, 6, {1, 2, 4}));
  EXPECT_THROW(find_small_zero_sum(IntSet(0, 9, {8}), 7), PreconditionError);
}

TEST(ZeroSum, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    IntSet a(0, n - 1);
    for (int x = 0; x < n; ++x)
      if (rng() % 4 == 0) a.insert(x);
    bool exists = false;
    const auto m = a.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] % n == 0) exists = true;
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if ((m[i] + m[j]) % n == 0) exists = true;
        for (std::size_t k = j + 1; k < m.size(); ++k)
          if ((m[i] + m[j] + m[k]) % n == 0) exists = true;
      }
    }
    const auto b = find_small_zero_sum(a, n);
    ASSERT_EQ(b.has_value(), exists);
    if (b) {
      EXPECT_GE(b->size(), 1U);
      EXPECT_LE(b->size(), 3U);
      EXPECT_TRUE(set_difference(*b, a).empty());
      int sum = 0;
      for (int x : *b) sum += x;
      EXPECT_EQ(sum % n, 0);
    }
  }
}
