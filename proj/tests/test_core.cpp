#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "sumfree/core.hpp"
#include "test_util.hpp"

using namespace sumfree;
using sumfree::testing::random_subset;

TEST(Bits, ShiftUpTruncatesAndAllowsAliasing) {
  Bits b(10);
  b.set(1);
  b.set(7);
  b.or_shifted_up(b, 2);
  EXPECT_TRUE(b.test(1));
  EXPECT_TRUE(b.test(3));
  EXPECT_TRUE(b.test(7));
  EXPECT_TRUE(b.test(9));
  EXPECT_EQ(b.count(), 4U);
}

TEST(Bits, ShiftAcrossWordBoundary) {
  Bits src(200), dst(200);
  src.set(0);
  src.set(63);
  src.set(64);
  dst.or_shifted_up(src, 70);
  EXPECT_TRUE(dst.test(70));
  EXPECT_TRUE(dst.test(133));
  EXPECT_TRUE(dst.test(134));
  Bits down(200);
  down.or_shifted_down(dst, 70);
  EXPECT_EQ(down, src);
}

TEST(IntSet, GroundIsEnforced) {
  IntSet s(1, 5);
  EXPECT_THROW(s.insert(0), PreconditionError);
  EXPECT_THROW(s.insert(6), PreconditionError);
  s.insert(5);
  EXPECT_TRUE(s.contains(5));
  EXPECT_FALSE(s.contains(99));
}

TEST(IntSet, IterationIsSorted) {
  IntSet s(0, 100, {40, 3, 99, 0});
  EXPECT_EQ(s.members(), (std::vector<int>{0, 3, 40, 99}));
  EXPECT_EQ(*s.min(), 0);
  EXPECT_EQ(*s.max(), 99);
  EXPECT_EQ(s.to_string(), "{0,3,40,99}");
}

TEST(IntSet, JsonRoundTrip) {
  IntSet s(2, 30, {2, 17, 30});
  nlohmann::json j = s;
  EXPECT_EQ(j["lo"], 2);
  EXPECT_EQ(j["hi"], 30);
  EXPECT_EQ(j["members"], nlohmann::json({2, 17, 30}));
  IntSet back = j.get<IntSet>();
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.lo(), 2);
  EXPECT_EQ(back.hi(), 30);
}

TEST(Sumset, Examples) {
  auto r = sumset(IntSet::of({1, 3}), IntSet::of({1, 3}), 10);
  EXPECT_EQ(r.set.members(), (std::vector<int>{2, 4, 6}));
  EXPECT_FALSE(r.overflow);

  r = sumset(IntSet(1, 10), IntSet::of({5}), 10);
  EXPECT_TRUE(r.set.empty());

  r = sumset(IntSet::of({4, 5}), IntSet::of({4, 5}), 5);
  EXPECT_TRUE(r.set.empty());
  EXPECT_TRUE(r.overflow);
}

TEST(Sumset, PartialOverflowKeepsInRangeSums) {
  auto r = sumset(IntSet::of({1, 6}), IntSet::of({1, 6}), 8);
  EXPECT_EQ(r.set.members(), (std::vector<int>{2, 7}));
  EXPECT_TRUE(r.overflow);
}

TEST(KFold, Examples) {
  EXPECT_EQ(k_fold_sumset(IntSet::of({1, 3}), 3, 20).members(), (std::vector<int>{3, 5, 7, 9}));
  EXPECT_EQ(k_fold_sumset(IntSet::of({2}), 0, 10).members(), (std::vector<int>{0}));
  EXPECT_EQ(k_fold_sumset(IntSet::of({4, 5}), 3, 15).members(), (std::vector<int>{12, 13, 14, 15}));
  EXPECT_EQ(k_fold_sumset(IntSet::of({4, 9}), 1, 5).members(), (std::vector<int>{4}));
}

TEST(Sigma, Examples) {
  EXPECT_FALSE(sigma_contains(IntSet::of({2}), 7));
  EXPECT_TRUE(sigma_contains(IntSet::of({2, 3}), 7));
  EXPECT_TRUE(sigma_contains(IntSet(1, 5), 0));
  EXPECT_FALSE(sigma_contains(IntSet(1, 5), 1));
}

TEST(SumFree, Examples) {
  EXPECT_TRUE(is_sum_free(IntSet(1, 5, {4, 5})));
  EXPECT_FALSE(is_sum_free(IntSet::of({1, 2})));
  EXPECT_TRUE(is_sum_free(IntSet(1, 3, {2, 3})));
  EXPECT_TRUE(is_sum_free(IntSet(1, 3)));
  EXPECT_FALSE(is_sum_free(IntSet(0, 3, {0})));
}

TEST(ForbiddenK, Examples) {
  EXPECT_EQ(count_forbidden_k_subsets(IntSet(1, 3, {1, 2, 3}), 3, 3).count, 1U);
  for (int k : {3, 4, 5}) EXPECT_EQ(count_forbidden_k_subsets(IntSet(1, 9), 9, k).count, 0U);
  IntSet odd(1, 15);
  for (int x = 1; x <= 10; x += 2) odd.insert(x);
  EXPECT_EQ(count_forbidden_k_subsets(odd, 15, 3).count, 0U);
  EXPECT_EQ(count_forbidden_k_subsets(odd, 15, 4).count, 0U);
}

TEST(ForbiddenK, UnsupportedK) {
  EXPECT_THROW(count_forbidden_k_subsets(IntSet(1, 5), 5, 2), UnsupportedConfiguration);
  EXPECT_THROW(count_forbidden_k_subsets(IntSet(1, 5), 5, 6), UnsupportedConfiguration);
}

// {x, y, x+y} sums to 2(x+y), never the odd 2n+1, so the union is disjoint.
TEST(ForbiddenK, TriplesAreUnionOfBothConditions) {
  IntSet a(1, 6, {1, 2, 3, 4, 5, 6});
  std::uint64_t naive = 0;
  auto m = a.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      for (std::size_t k = j + 1; k < m.size(); ++k)
        if (m[i] + m[j] == m[k] || m[i] + m[j] + m[k] == 13) ++naive;
  EXPECT_EQ(count_forbidden_k_subsets(a, 6, 3).count, naive);
}

TEST(BN, Examples) {
  EXPECT_EQ(b_n(5).members(), (std::vector<int>{4, 5}));
  EXPECT_EQ(b_n(2).members(), (std::vector<int>{2}));
  EXPECT_EQ(distance_to_bn(IntSet(1, 5, {1, 4, 5}), 5), 1);
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(static_cast<int>(b_n(n).size()), (n + 1) / 3) << n;
}

class CoreProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{12345};
};

TEST_F(CoreProperties, SumsetLowerBoundAndApEquality) {
  for (int trial = 0; trial < 2000; ++trial) {
    IntSet a = random_subset(rng, 1, 40, 0.3), b = random_subset(rng, 1, 40, 0.3);
    if (a.empty() || b.empty()) continue;
    auto r = sumset(a, b, 80);
    ASSERT_FALSE(r.overflow);
    ASSERT_GE(r.set.size() + 1, a.size() + b.size());
  }
  for (int d = 1; d <= 4; ++d)
    for (int la = 1; la <= 6; ++la)
      for (int lb = 1; lb <= 6; ++lb) {
        IntSet a(1, 60), b(1, 60);
        for (int i = 0; i < la; ++i) a.insert(3 + d * i);
        for (int i = 0; i < lb; ++i) b.insert(5 + d * i);
        EXPECT_EQ(sumset(a, b, 200).set.size() + 1, a.size() + b.size());
      }
}

TEST_F(CoreProperties, SumsetMatchesDoubleLoop) {
  for (int trial = 0; trial < 500; ++trial) {
    IntSet a = random_subset(rng, 0, 30, 0.4), b = random_subset(rng, 3, 25, 0.4);
    const int cap = 35;
    auto r = sumset(a, b, cap);
    std::vector<int> expect;
    bool over = false;
    for (int x : a)
      for (int y : b) {
        if (x + y > cap) over = true;
        else expect.push_back(x + y);
      }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    ASSERT_EQ(r.set.members(), expect);
    ASSERT_EQ(r.overflow, over);
  }
}

TEST_F(CoreProperties, KFoldIsIteratedSumset) {
  for (int trial = 0; trial < 300; ++trial) {
    IntSet a = random_subset(rng, 1, 20, 0.25);
    for (int k = 2; k <= 5; ++k) {
      const int cap = 70;
      EXPECT_EQ(k_fold_sumset(a, k, cap), sumset(k_fold_sumset(a, k - 1, cap), a, cap).set);
    }
  }
}

TEST_F(CoreProperties, SigmaMatchesBoundedUnion) {
  for (int trial = 0; trial < 300; ++trial) {
    IntSet a = random_subset(rng, 1, 15, 0.2);
    for (int target = 0; target <= 31; ++target) {
      bool in_union = false;
      for (int k = 0; k <= target && !in_union; ++k)
        in_union = k_fold_sumset(a, k, target).contains(target);
      ASSERT_EQ(sigma_contains(a, target), in_union) << a.to_string() << " " << target;
    }
  }
}

TEST_F(CoreProperties, SumFreeIsEmptyIntersectionWithDoubling) {
  for (int trial = 0; trial < 2000; ++trial) {
    IntSet a = random_subset(rng, 1, 25, 0.2);
    const bool disjoint = set_intersection(a, sumset(a, a, 50).set).empty();
    ASSERT_EQ(is_sum_free(a), disjoint) << a.to_string();
  }
}

TEST_F(CoreProperties, ForbiddenCountsMatchNaiveLoop) {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 15);
    IntSet a = random_subset(rng, 1, n, 0.6);
    while (a.size() > 16) a.erase(*a.max());
    const auto m = a.members();
    const int sz = static_cast<int>(m.size());
    std::uint64_t c[6] = {0, 0, 0, 0, 0, 0};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sz); ++mask) {
      const int k = std::popcount(mask);
      if (k < 3 || k > 5) continue;
      std::vector<int> sub;
      for (int i = 0; i < sz; ++i)
        if ((mask >> i) & 1U) sub.push_back(m[static_cast<std::size_t>(i)]);
      int sum = 0;
      for (int x : sub) sum += x;
      bool hit = sum == 2 * n + 1;
      if (k == 3 && sub[0] + sub[1] == sub[2]) hit = true;
      if (hit) ++c[k];
    }
    for (int k = 3; k <= 5; ++k) {
      const auto cc = count_forbidden_k_subsets(a, n, k);
      ASSERT_EQ(cc.k, k);
      ASSERT_EQ(cc.count, c[k]) << a.to_string() << " n=" << n << " k=" << k;
    }
  }
}
