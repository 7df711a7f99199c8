#include <gtest/gtest.h>

#include "ordcalc/error.hpp"
#include "ordcalc/superalgebra.hpp"

using namespace ordcalc;

namespace {
const QI I = QI::i();
}

TEST(Field, ParseRender) {
  for (std::string s : {"3/4", "-2", "1/2+3*i", "-5*i", "2-1/3*i"}) EXPECT_EQ(to_string(parse_qi(s)), s);
  EXPECT_EQ(parse_qi("i"), QI::i());
  EXPECT_EQ(parse_qi("-i"), -QI::i());
}

TEST(Field, GaussianRoots) {
  // (x - i)(x + i)(x - 1/2)
  QIVector p{QI(mpq_class(-1, 2)), 1, QI(mpq_class(-1, 2)), 1};
  QIVector rest;
  auto r = gaussian_roots(p, &rest);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(rest.size(), 1u);
  auto none = gaussian_roots({-2, 0, 1}, &rest);
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(render_poly(rest), "x^2 - 2");
}

TEST(Field, Inertia) {
  QIMatrix m{{0, 1}, {1, 0}};
  auto in = inertia(m);
  EXPECT_EQ(in.positive, 1);
  EXPECT_EQ(in.negative, 1);
}

TEST(Algebra, ConstructionsValidate) {
  for (const auto& a : {matrix_algebra(2, FieldKind::Q), quaternions(), clifford(3), tensor(clifford(1), clifford(2)),
                        mat(clifford(1), 1, 1), opposite(clifford(2)), group_algebra(FiniteGroup::cyclic(3), FieldKind::Q),
                        polynomial_quotient({0, 0, 1}, FieldKind::Q)})
    EXPECT_NO_THROW(a.validate()) << a.name;
}

TEST(Algebra, Centre) {
  EXPECT_EQ(centre(matrix_algebra(2, FieldKind::Q)).dim(), 1);
  SuperAlgebra diag = group_algebra(FiniteGroup::cyclic(2), FieldKind::Q);
  EXPECT_EQ(centre(diag).dim(), 2);
  EXPECT_EQ(centre(clifford(1)).dim(), 1);
  EXPECT_EQ(centre(clifford(1), false).dim(), 2);
}

TEST(Algebra, Separable) {
  auto nil = is_separable(polynomial_quotient({0, 0, 1}, FieldKind::Q));
  EXPECT_FALSE(nil.separable);
  ASSERT_EQ(nil.radical.dim(), 1);
  EXPECT_TRUE(nil.radical.basis[0][0].is_zero());
  EXPECT_TRUE(is_separable(matrix_algebra(2, FieldKind::Q)).separable);
  EXPECT_TRUE(is_separable(group_algebra(FiniteGroup::cyclic(3), FieldKind::Q)).separable);
}

TEST(Brauer, RealClasses) {
  EXPECT_EQ(brauer_class_R(matrix_algebra(2, FieldKind::Q)).kind, BrauerKind::R);
  EXPECT_EQ(brauer_class_R(quaternions()).kind, BrauerKind::H);
  EXPECT_EQ(brauer_class_R(tensor(quaternions(), quaternions())).kind, BrauerKind::R);
  EXPECT_EQ(brauer_class_R(opposite(quaternions())).kind, BrauerKind::H);
  EXPECT_THROW(brauer_class_R(group_algebra(FiniteGroup::cyclic(2), FieldKind::Q)), ClassificationError);
}

TEST(Brauer, Calibration) {
  // calibrated dimensions never clash
  const auto& t = brauer_calibration();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i].dim == t[j].dim) EXPECT_NE(t[i].signature, t[j].signature);
}

TEST(Brauer, SuperClasses) {
  for (int n = 0; n <= 4; ++n)
    EXPECT_EQ(super_brauer_class_C(clifford(n)).kind, n % 2 ? BrauerKind::Odd : BrauerKind::Even) << n;
  EXPECT_EQ(super_brauer_class_C(mat(base_field(FieldKind::QI), 1, 1)).kind, BrauerKind::Even);
  EXPECT_EQ(super_brauer_class_C(tensor(clifford(1), clifford(1))).kind, BrauerKind::Even);
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m + n <= 4; ++m)
      EXPECT_EQ(super_brauer_class_C(tensor(clifford(n), clifford(m))).kind,
                (n + m) % 2 ? BrauerKind::Odd : BrauerKind::Even);
}

TEST(Brauer, Morita) {
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 3; ++q) {
      if (p + q == 0) continue;
      EXPECT_EQ(brauer_class_R(mat(quaternions(), p, q)).kind, BrauerKind::H);
      EXPECT_EQ(brauer_class_R(mat(base_field(FieldKind::Q), p, q)).kind, BrauerKind::R);
      EXPECT_EQ(super_brauer_class_C(mat(clifford(1), p, q)).kind, BrauerKind::Odd);
      EXPECT_EQ(super_brauer_class_C(mat(clifford(2), p, q)).kind, BrauerKind::Even);
    }
}

TEST(RealForm, Examples) {
  auto r = real_form(2, identity_matrix(2));
  EXPECT_EQ(r.cls.kind, BrauerKind::R);
  auto h = real_form(2, {{0, -1}, {1, 0}});
  EXPECT_EQ(h.cls.kind, BrauerKind::H);
  EXPECT_EQ(h.algebra.dim(), 4);
  EXPECT_NO_THROW(h.algebra.validate());
  auto odd = real_form(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(odd.cls.kind, BrauerKind::R);
  auto odd2 = real_form(3, {{I, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  EXPECT_EQ(odd2.cls.kind, BrauerKind::R);
  EXPECT_THROW(real_form(2, {{1, 1}, {0, 1}}), ValidationError);
}

TEST(Spec, Examples) {
  SuperAlgebra diag3 = tensor(group_algebra(FiniteGroup::cyclic(2), FieldKind::QI), base_field(FieldKind::QI));
  EXPECT_EQ(spec_commutative(diag3).points(), 2);
  SuperAlgebra x2 = polynomial_quotient({-1, 0, 1}, FieldKind::QI);
  LinearMap neg{{{1, 0}, {0, -1}}, false};
  auto s = spec_commutative(x2, {neg});
  ASSERT_EQ(s.points(), 2);
  EXPECT_EQ(s.permutations[0], (std::vector<int>{1, 0}));
  auto [c, bar] = complex_numbers_over_r();
  auto sc = spec_commutative(c, {bar});
  ASSERT_EQ(sc.points(), 2);
  EXPECT_EQ(sc.permutations[0], (std::vector<int>{1, 0}));
  EXPECT_THROW(spec_commutative(polynomial_quotient({-2, 0, 1}, FieldKind::QI)), UnsupportedInput);
  // Q(i)^3 as a group algebra of Z/3 splits over Q(i)? x^3 - 1 has non-Gaussian roots
  EXPECT_THROW(spec_commutative(group_algebra(FiniteGroup::cyclic(3), FieldKind::QI)), UnsupportedInput);
  EXPECT_EQ(spec_commutative(group_algebra(FiniteGroup::cyclic(4), FieldKind::QI)).points(), 4);
}
