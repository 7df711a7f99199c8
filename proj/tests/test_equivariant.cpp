#include <gtest/gtest.h>

#include "ordcalc/equivariant.hpp"

using namespace ordcalc;

namespace {

FiniteGroup z2() { return FiniteGroup::cyclic(2); }
TimeReversalTag antiunitary() { return TimeReversalTag{{0, 1}}; }

}  // namespace

TEST(GroupCohomology, Quartet) {
  auto bg = nerve(z2(), 5);
  EXPECT_TRUE(cohomology(bg, auto_qmodz(bg, 2), 2).group.is_zero());
  EXPECT_EQ(cohomology(bg, auto_qmodz(bg, 2, antiunitary()), 2).group, AbGroupExpr::cyclic(2));
  EXPECT_EQ(cohomology(bg, auto_qmodz(bg, 3), 3).group, AbGroupExpr::cyclic(2));
  EXPECT_TRUE(cohomology(bg, auto_qmodz(bg, 3, antiunitary()), 3).group.is_zero());
}

TEST(ReducedEquivariant, PointIsZero) {
  for (int k = 0; k <= 3; ++k) {
    EXPECT_TRUE(reduced_equivariant(GSet::point(z2()), z2(), {}, cstar_coefficients(), k).reduced.group.is_zero());
    EXPECT_TRUE(
        reduced_equivariant(GSet::point(z2()), z2(), antiunitary(), cstar_coefficients(), k).reduced.group.is_zero());
  }
}

TEST(ReducedEquivariant, FreeZ2) {
  auto r = reduced_equivariant(GSet::regular(z2()), z2(), {}, cstar_coefficients(), 2);
  EXPECT_EQ(r.reduced.group, AbGroupExpr::cyclic(2));
  EXPECT_TRUE(r.anomaly_nonzero);
  EXPECT_EQ(r.anomaly_image, r.point.group);
}

TEST(ReducedEquivariant, FreeZ2T) {
  auto r = reduced_equivariant(GSet::regular(z2()), z2(), antiunitary(), cstar_coefficients(), 2);
  EXPECT_TRUE(r.reduced.group.is_zero());
}

TEST(ReducedEquivariant, FixedPoints) {
  auto a = reduced_equivariant(GSet::fixed_points(z2(), 2), z2(), antiunitary(), cstar_coefficients(), 2);
  EXPECT_EQ(a.reduced.group, AbGroupExpr::cyclic(2));
  EXPECT_FALSE(a.anomaly_nonzero);
  auto b = reduced_equivariant(GSet::fixed_points(z2(), 2), z2(), {}, cstar_coefficients(), 2);
  EXPECT_TRUE(b.reduced.group.is_zero());
}

TEST(LesAudit, Exact) {
  for (auto x : {GSet::point(z2()), GSet::regular(z2()), GSet::fixed_points(z2(), 2)}) {
    auto r = les_audit(x, z2(), {}, cstar_coefficients(), 1, 3);
    EXPECT_TRUE(r.ok) << r.first_failure;
    auto t = les_audit(x, z2(), antiunitary(), cstar_coefficients(), 1, 3);
    EXPECT_TRUE(t.ok) << t.first_failure;
    auto m = les_audit(x, z2(), {}, CoeffModule::mod(2), 1, 3);
    EXPECT_TRUE(m.ok) << m.first_failure;
  }
}
