#include <gtest/gtest.h>

#include "ordcalc/supercohomology.hpp"

using namespace ordcalc;

TEST(Sh, Point) {
  auto pt = FiniteGroupoid::point();
  for (int n = 0; n <= 2; ++n) {
    auto r = sh(pt, n);
    ASSERT_TRUE(r.group) << n;
    EXPECT_EQ(r.group->cell(), n == 0 ? "C^×" : "Z2");
  }
  EXPECT_TRUE(sh(pt, 3).group->is_zero());
}

TEST(Sh, ReducedTwoPoints) {
  auto r = reduced_sh(FiniteGroupoid::discrete(2), 2);
  ASSERT_TRUE(r.group);
  EXPECT_EQ(r.group->cell(), "Z2");
  EXPECT_TRUE(reduced_sh(FiniteGroupoid::point(), 2).group->is_zero());
}

TEST(Sh, BZ2) {
  auto r = sh(FiniteGroupoid::classifying(FiniteGroup::cyclic(2)), 2);
  // the d3 out of (0,2) is left open, so only the graded order is reported
  ASSERT_FALSE(r.ambiguity.empty());
  EXPECT_EQ(r.finite_order.value_or(0), 4);
  EXPECT_FALSE(r.group);
}

TEST(Bosonic, Z2) {
  auto rep = sh_equivariant_bz2({FiniteGroup::cyclic(2), 0}, 4);
  EXPECT_TRUE(rep.ordinary.is_zero());
  EXPECT_TRUE(rep.consistent);
}

TEST(Bosonic, Z4SurplusIsFlagged) {
  // G/eps = Z2 with the nontrivial extension class as twist
  auto rep = sh_equivariant_bz2({FiniteGroup::cyclic(4), 2}, 4);
  EXPECT_TRUE(rep.ordinary.is_zero());
  EXPECT_FALSE(rep.reduced.group);
  EXPECT_FALSE(rep.reduced.ambiguity.empty());
  EXPECT_TRUE(rep.consistent);
  auto low = sh_equivariant_bz2({FiniteGroup::cyclic(4), 2}, 2);
  ASSERT_TRUE(low.reduced.group);
  EXPECT_TRUE(low.reduced.group->is_zero());
}
