#include <gtest/gtest.h>

#include "ordcalc/cohomology.hpp"
#include "ordcalc/em_space.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/steenrod.hpp"

using namespace ordcalc;

namespace {

// closed form for B(Z/m): Z, 0, Z/m, 0, Z/m, ...
AbGroupExpr cyclic_integral(int m, int k) {
  if (k == 0) return AbGroupExpr::free(1);
  return k % 2 ? AbGroupExpr::zero() : AbGroupExpr::cyclic(m);
}

}  // namespace

TEST(Cohomology, CyclicIntegralClosedForm) {
  for (int m : {2, 3, 4, 6}) {
    auto bg = nerve(FiniteGroup::cyclic(m), 6);
    for (int k = 0; k <= 5; ++k)
      EXPECT_EQ(cohomology(bg, CoeffModule::integers(), k).group, cyclic_integral(m, k)) << m << " " << k;
  }
}

TEST(EMSpace, SimplexCounts) {
  EMSpace e = em(2, 6);
  const std::int64_t want[] = {1, 0, 1, 4, 41, 768, 27449};
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(e.underlying.count(k), want[k]) << k;
  EXPECT_FALSE(e.underlying.check_simplicial_identities().has_value());
  EXPECT_TRUE(is_cocycle(e.fundamental));
}

TEST(EMSpace, Z2Cohomology) {
  EMSpace e = em(2, 6);
  const int want[] = {1, 0, 1, 1, 1, 2};
  for (int k = 0; k <= 5; ++k)
    EXPECT_EQ(static_cast<int>(cohomology(e.underlying, CoeffModule::mod(2), k).orders.size()), want[k]) << k;
}

TEST(EMSpace, QmodZCohomology) {
  EMSpace e = em(2, 6);
  const char* want[] = {"C^×", "0", "Z2", "0", "Z4", "Z2"};
  for (int k = 0; k <= 5; ++k)
    EXPECT_EQ(cohomology(e.underlying, auto_qmodz(e.underlying, k), k).group.cell(), want[k]) << k;
}

TEST(EMSpace, SteenrodBasis) {
  EMSpace e = em(2, 7);
  auto rep = verify_steenrod_basis(e, 5);
  EXPECT_TRUE(rep.ok) << rep.message;
}
