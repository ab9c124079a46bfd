#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cubeseg/bijection.hpp"
#include "oracles.hpp"

namespace cubeseg {
namespace {

using Map = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

TEST(Interval, Basics) {
  const Interval iv(3, 7);
  EXPECT_EQ(iv.size(), 5u);
  EXPECT_TRUE(iv.contains(3));
  EXPECT_FALSE(iv.contains(8));
  EXPECT_THROW(Interval(4, 3), UsageError);
}

TEST(IntervalsOverlap, Examples) {
  EXPECT_FALSE(intervals_overlap({0, 1}, {2, 3}));
  EXPECT_TRUE(intervals_overlap({0, 2}, {1, 3}));
  EXPECT_TRUE(intervals_overlap({0, 0}, {0, 0}));
  EXPECT_TRUE(intervals_overlap({1, 3}, {3, 5}));
}

TEST(FindSpecialBijection, DisjointPair) {
  // Only 0->2, 1->3 meets the strict condition.
  const auto w = find_special_bijection({0, 1}, {2, 3});
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->strict_required);
  EXPECT_EQ(w->map, (Map{{0, 2}, {1, 3}}));
  EXPECT_TRUE(verify_special(*w));
}

TEST(FindSpecialBijection, OverlappingPair) {
  ASSERT_TRUE(oracle_ref::special_exists_by_permutation(0, 1, 3));
  const auto w = find_special_bijection({0, 2}, {1, 3});
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(w->strict_required);
  EXPECT_TRUE(verify_special(*w));
}

TEST(FindSpecialBijection, Singletons) {
  for (std::uint64_t j = 1; j < 200; ++j) {
    const auto w = find_special_bijection({0, 0}, {j, j});
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->map, (Map{{0, j}}));
  }
  // h(3) = 2 is not below h(4) = 1.
  EXPECT_FALSE(find_special_bijection({3, 3}, {4, 4}).has_value());
}

TEST(FindSpecialBijection, UsageErrors) {
  EXPECT_THROW(find_special_bijection({0, 1}, {2, 4}), UsageError);
  EXPECT_THROW(find_special_bijection({2, 3}, {0, 1}), UsageError);
  EXPECT_THROW(find_special_bijection({2, 3}, {2, 3}), UsageError);
}

TEST(FindSpecialBijection, AgreesWithPermutationSearch) {
  // Includes i0 > 0, where existence is not guaranteed.
  for (std::uint64_t s = 1; s <= 6; ++s) {
    for (std::uint64_t i0 = 0; i0 + s <= 32; ++i0) {
      for (std::uint64_t j0 = i0 + 1; j0 + s <= 32; ++j0) {
        const bool expected = oracle_ref::special_exists_by_permutation(i0, j0, s);
        const auto w = find_special_bijection({i0, i0 + s - 1}, {j0, j0 + s - 1});
        ASSERT_EQ(w.has_value(), expected) << i0 << " " << j0 << " " << s;
        if (w) {
          ASSERT_TRUE(verify_special(*w));
        }
      }
    }
  }
}

TEST(FindSpecialBijection, ExistsFromZero) {
  for (std::uint64_t s = 1; s <= 32; ++s) {
    for (std::uint64_t j0 = 1; j0 + s <= 64; ++j0) {
      const auto w = find_special_bijection({0, s - 1}, {j0, j0 + s - 1});
      ASSERT_TRUE(w.has_value()) << s << " " << j0;
      ASSERT_TRUE(verify_special(*w));
    }
  }
}

TEST(VerifySpecial, SwappedMapFailsStrictness) {
  // 1 -> 2 keeps the weight at 1, which the disjoint case forbids.
  BijectionWitness w{{0, 1}, {2, 3}, {{0, 3}, {1, 2}}, true};
  EXPECT_FALSE(verify_special(w));
}

TEST(VerifySpecial, RejectsBrokenWitnesses) {
  BijectionWitness repeated{{0, 1}, {2, 3}, {{0, 3}, {1, 3}}, true};
  EXPECT_FALSE(verify_special(repeated));

  BijectionWitness wrong_flag{{0, 1}, {2, 3}, {{0, 2}, {1, 3}}, false};
  EXPECT_FALSE(verify_special(wrong_flag));

  BijectionWitness short_map{{0, 1}, {2, 3}, {{0, 2}}, true};
  EXPECT_FALSE(verify_special(short_map));

  BijectionWitness outside{{0, 1}, {2, 3}, {{0, 2}, {1, 7}}, true};
  EXPECT_FALSE(verify_special(outside));

  // Overlapping [3:4] -> [4:5]: h(3) = 2 may only go to 5.
  BijectionWitness weight_drop{{3, 4}, {4, 5}, {{3, 4}, {4, 5}}, false};
  EXPECT_FALSE(verify_special(weight_drop));
  weight_drop.map = {{3, 5}, {4, 4}};
  EXPECT_TRUE(verify_special(weight_drop));
}

TEST(GInequality, Examples) {
  const std::vector<int> identity = {0, 1, 2, 3, 4, 5, 6, 7};
  auto r = check_g_inequality<int>({0, 1}, {2, 3}, identity);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_EQ(r.rhs, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.strict);

  const std::vector<double> constant(8, 2.5);
  auto c = check_g_inequality<double>({0, 3}, {9, 12}, constant);
  EXPECT_EQ(c.lhs, c.rhs);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.strict);
}

TEST(GInequality, UsageErrors) {
  const std::vector<int> bumpy = {0, 2, 1, 3};
  EXPECT_THROW(check_g_inequality<int>({0, 1}, {2, 3}, bumpy), UsageError);
  const std::vector<int> shortg = {0, 1};
  EXPECT_THROW(check_g_inequality<int>({0, 1}, {6, 7}, shortg), UsageError);
}

TEST(GInequality, HoldsFromZeroForMonotoneTables) {
  std::vector<std::vector<Count>> tables;
  tables.push_back(std::vector<Count>(7, 4));
  std::vector<Count> id(7);
  for (int m = 0; m <= 6; ++m) id[static_cast<std::size_t>(m)] = static_cast<Count>(m);
  tables.push_back(id);
  for (int q = 0; q <= 6; ++q) {
    std::vector<Count> g(7);
    for (int m = 0; m <= 6; ++m) g[static_cast<std::size_t>(m)] = binom(m, q);
    tables.push_back(g);
  }
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& g = tables[t];
    bool strictly_increasing = true;
    for (std::size_t m = 1; m < g.size(); ++m) strictly_increasing &= g[m] > g[m - 1];
    for (std::uint64_t s = 1; s <= 32; ++s) {
      for (std::uint64_t j0 = 1; j0 + s <= 64; ++j0) {
        const Interval I(0, s - 1), J(j0, j0 + s - 1);
        const auto r = check_g_inequality<Count>(I, J, g);
        ASSERT_TRUE(r.holds) << t << " " << s << " " << j0;
        if (strictly_increasing && !intervals_overlap(I, J)) {
          ASSERT_TRUE(r.strict);
        }
      }
    }
  }
}

TEST(ShiftedInequality, Examples) {
  auto r = check_shifted_hq_inequality({0, 1}, {2, 3}, 1);
  EXPECT_EQ(r.lhs, 3u);
  EXPECT_EQ(r.rhs, 3u);
  EXPECT_TRUE(r.holds);

  r = check_shifted_hq_inequality({0, 1}, {6, 7}, 1);
  EXPECT_EQ(r.lhs, 3u);
  EXPECT_EQ(r.rhs, 5u);
  EXPECT_TRUE(r.holds);

  // Weights in J stay at most 2, so q = 4 kills every term.
  r = check_shifted_hq_inequality({0, 1}, {4, 5}, 4);
  EXPECT_EQ(r.lhs, 0u);
  EXPECT_EQ(r.rhs, 0u);
  EXPECT_TRUE(r.holds);
}

TEST(ShiftedInequality, Errors) {
  EXPECT_THROW(check_shifted_hq_inequality({0, 2}, {1, 3}, 1), UsageError);
  EXPECT_THROW(check_shifted_hq_inequality({0, 1}, {2, 3}, 0), RangeError);
}

TEST(FindSpecialBijection, RandomLargeFromZero) {
  std::mt19937_64 rng(1970);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t s = 1 + rng() % 512;
    const std::uint64_t j0 = 1 + rng() % (1024 - s);
    const auto w = find_special_bijection({0, s - 1}, {j0, j0 + s - 1});
    ASSERT_TRUE(w.has_value()) << s << " " << j0;
    ASSERT_TRUE(verify_special(*w));
  }
}

}  // namespace
}  // namespace cubeseg
