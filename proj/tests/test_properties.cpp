// Property suites: identities that must hold on every complex we build.
#include <gtest/gtest.h>

#include <random>

#include "ordcalc/ahss.hpp"
#include "ordcalc/cohomology.hpp"
#include "ordcalc/em_space.hpp"
#include "ordcalc/equivariant.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/smith.hpp"
#include "ordcalc/steenrod.hpp"
#include "ordcalc/supercohomology.hpp"

using namespace ordcalc;

namespace {

std::mt19937_64 rng(20240611);

Cochain random_cochain(const SimplicialComplexTrunc& cx, int k, const CoeffModule& c) {
  Cochain x = Cochain::zero(cx, k, c);
  for (auto& v : x.values) {
    std::int64_t r = static_cast<std::int64_t>(rng() % 7) - 3;
    v = c.kind == CoeffModule::Kind::Int ? r : mod_floor(r, c.modulus);
  }
  return x;
}

struct Sample {
  std::string name;
  SimplicialComplexTrunc cx;
  std::optional<TimeReversalTag> twist;
};

std::vector<Sample> samples() {
  return {{"BZ3", nerve(FiniteGroup::cyclic(3), 5), {}},
          {"BZ2 twisted", nerve(FiniteGroup::cyclic(2), 5), TimeReversalTag{{0, 1}}},
          {"BS3", nerve(FiniteGroup::symmetric(3), 4), {}},
          {"K(Z2,2)", em(2, 5).underlying, {}},
          {"BZ2 x K", product_base(FiniteGroup::cyclic(2), 4).complex, {}},
          {"Cyl", groupoid_cylinder(FiniteGroupoid::discrete(3), 4).cylinder, {}}};
}

Cochain bockstein_z2(const Cochain& x) {
  Cochain lift = Cochain::zero(x.complex, x.degree, CoeffModule::integers());
  lift.values = x.values;
  Cochain d = coboundary(lift);
  Cochain out = Cochain::zero(x.complex, x.degree + 1, CoeffModule::mod(2));
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    if (d.values[i] % 2) throw std::logic_error("lift of a mod-2 cocycle has an odd coboundary");
    out.values[i] = mod_floor(d.values[i] / 2, 2);
  }
  return out;
}

Cochain generator(const SimplicialComplexTrunc& cx, const CoeffModule& c, int k, int i = 0) {
  return cohomology(cx, c, k).generators.at(i);
}

}  // namespace

TEST(Property, CoboundarySquaresToZero) {
  for (const auto& s : samples()) {
    for (CoeffModule c : {CoeffModule::integers(), CoeffModule::mod(2), CoeffModule::mod(4)}) {
      if (s.twist) c = c.twisted(*s.twist);
      for (int k = 0; k + 2 <= s.cx.trunc(); ++k)
        for (int rep = 0; rep < 3; ++rep) {
          Cochain x = random_cochain(s.cx, k, c);
          EXPECT_TRUE(coboundary(coboundary(x)).is_zero()) << s.name << " " << c.name() << " k=" << k;
        }
    }
  }
}

TEST(Property, SmithFactorisation) {
  for (const auto& s : samples()) {
    auto cx = cochain_complex(s.cx, s.twist);
    for (int k = 0; k < s.cx.trunc(); ++k) {
      auto a = cx->coboundary(k);
      auto f = cx->smith(k);
      EXPECT_TRUE(audit_smith(*a, *f, a->rows() * a->cols() > 40000 ? 8 : 0)) << s.name << " k=" << k;
    }
  }
  for (int rep = 0; rep < 30; ++rep) {
    const int r = 1 + rng() % 6, c = 1 + rng() % 6;
    DenseMatrix m(r, std::vector<std::int64_t>(c));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 11) - 5;
    auto a = to_sparse(m, c);
    EXPECT_TRUE(audit_smith(a, smith_normal_form(a)));
  }
}

TEST(Property, CartanFormula) {
  // Sq^k(a b) = sum Sq^i a Sq^(k-i) b up to coboundaries
  auto check = [](const Cochain& a, const Cochain& b, int k) {
    Cochain lhs = sq(k, cup(a, b));
    Cochain rhs = Cochain::zero(a.complex, a.degree + b.degree + k, CoeffModule::mod(2));
    for (int i = 0; i <= k; ++i) {
      if (i > a.degree || k - i > b.degree) continue;
      rhs = rhs + cup(sq(i, a), sq(k - i, b));
    }
    return is_coboundary(lhs + rhs);
  };
  auto bz2 = em(1, 8);
  Cochain x = bz2.fundamental;
  Cochain x2 = cup(x, x);
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(check(x, x2, k)) << "x, x^2, k=" << k;
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(check(x2, x2, k)) << "x^2, x^2, k=" << k;
  auto k2 = em(2, 7);
  Cochain t = k2.fundamental;
  Cochain u = sq(1, t);
  EXPECT_TRUE(check(t, t, 1));
  EXPECT_TRUE(check(t, t, 2));
  EXPECT_TRUE(check(t, u, 1));
}

TEST(Property, Sq1IsBockstein) {
  auto bz2 = em(1, 7);
  Cochain x = bz2.fundamental;
  std::vector<Cochain> gens{x, cup(x, x), cup(cup(x, x), x)};
  auto k2 = em(2, 6);
  gens.push_back(k2.fundamental);
  gens.push_back(sq(1, k2.fundamental));
  gens.push_back(cup(k2.fundamental, k2.fundamental));
  auto bz4 = nerve(FiniteGroup::cyclic(4), 6);
  gens.push_back(generator(bz4, CoeffModule::mod(2), 1));
  gens.push_back(generator(bz4, CoeffModule::mod(2), 2));
  for (const auto& g : gens) {
    ASSERT_TRUE(is_cocycle(g));
    EXPECT_TRUE(is_coboundary(sq(1, g) + bockstein_z2(g))) << g.complex.name() << " degree " << g.degree;
  }
  // and on BZ2: Sq^1 x = x^2 is not a coboundary
  EXPECT_FALSE(is_coboundary(sq(1, x)));
}

TEST(Property, GradedCommutativity) {
  auto bz3 = nerve(FiniteGroup::cyclic(3), 6);
  CoeffModule z3 = CoeffModule::mod(3);
  Cochain a = generator(bz3, z3, 1), b = generator(bz3, z3, 2);
  auto commutes = [](const Cochain& p, const Cochain& q) {
    int sign = (p.degree * q.degree) % 2 ? -1 : 1;
    return is_coboundary(cup(p, q) + scale(cup(q, p), -sign));
  };
  EXPECT_TRUE(commutes(a, b));
  EXPECT_TRUE(commutes(a, a));
  EXPECT_TRUE(commutes(b, b));
  EXPECT_TRUE(is_coboundary(cup(a, a)));  // odd classes square to zero away from 2
  auto bz2 = em(1, 7);
  Cochain x = bz2.fundamental;
  EXPECT_TRUE(commutes(x, cup(x, x)));
  auto k2 = em(2, 6);
  EXPECT_TRUE(commutes(k2.fundamental, sq(1, k2.fundamental)));
  auto bz4 = nerve(FiniteGroup::cyclic(4), 6);
  Cochain y = generator(bz4, CoeffModule::integers(), 2);
  EXPECT_TRUE(commutes(y, y));
}

TEST(Property, LesExactness) {
  FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
  for (auto x : {GSet::point(z2), GSet::regular(z2), GSet::fixed_points(z2, 2)}) {
    for (const auto& tr : {std::optional<TimeReversalTag>{}, std::optional<TimeReversalTag>{TimeReversalTag{{0, 1}}}}) {
      auto r = les_audit(x, z2, tr, cstar_coefficients(tr), 1, 3);
      EXPECT_TRUE(r.ok) << r.first_failure;
    }
  }
  for (auto x : {GSet::regular(z3), GSet::fixed_points(z3, 2)}) {
    auto r = les_audit(x, z3, {}, cstar_coefficients(), 1, 3);
    EXPECT_TRUE(r.ok) << r.first_failure;
  }
}

TEST(Property, QmodZDoublingStable) {
  std::vector<SimplicialComplexTrunc> cxs{nerve(FiniteGroup::cyclic(2), 6), nerve(FiniteGroup::cyclic(3), 6),
                                          nerve(FiniteGroup::cyclic(4), 6), em(2, 6).underlying};
  for (const auto& cx : cxs)
    for (int k = 1; k <= 4; ++k) {
      CoeffModule c = auto_qmodz(cx, k);
      AbGroupExpr g = cohomology(cx, c, k).group;
      for (int f : {2, 4}) {
        CoeffModule d = CoeffModule::qmodz(c.modulus * f);
        EXPECT_EQ(cohomology(cx, d, k).group, g) << cx.name() << " k=" << k << " M=" << d.modulus;
      }
    }
}

TEST(Property, AhssOrderMonotone) {
  auto check = [](const Page& e2, const Page& e3) {
    for (const auto& [key, c2] : e2.cells) {
      const Cell& c3 = e3.at(key.first, key.second);
      if (c3.state == Cell::State::Unknown || c2.symbolic) continue;
      auto o2 = c2.group.order(), o3 = c3.group.order();
      if (!o2 || !o3) continue;
      EXPECT_EQ(*o2 % *o3, 0) << "(" << key.first << "," << key.second << ")";
    }
  };
  WittRun w = witt_run();
  check(w.e2, w.e3);
  WittRun u = witt_run(5, 7, false);
  check(u.e2, u.e3);
  for (int m : {2, 4}) {
    AhssBase b;
    b.cx = nerve(FiniteGroup::cyclic(m), 6);
    Page p2 = e2(b, sh_spectrum(), 5);
    check(p2, turn_page(p2, b, sh_spectrum()));
  }
}

TEST(Property, TwistMatters) {
  WittRun u = witt_run(5, 7, false);
  WittRun t = witt_run(5, 7, true);
  EXPECT_EQ(u.e3.at(0, 2).render(), "Z2");
  EXPECT_EQ(t.e3.at(0, 2).render(), "0");
  EXPECT_NE(page_cells(u.e3), page_cells(t.e3));
}

TEST(Property, DifferentialRepresentativeIndependent) {
  // (Sq^2 + t)(x + dh) - (Sq^2 + t)(x) is a coboundary
  auto k2 = em(2, 7);
  Cochain t = k2.fundamental;
  for (const Cochain& x : {t, sq(1, t)}) {
    for (int rep = 0; rep < 3; ++rep) {
      Cochain h = random_cochain(k2.underlying, x.degree - 1, CoeffModule::mod(2));
      Cochain y = x + coboundary(h);
      Cochain diff = sq(2, y) + cup(t, y) + sq(2, x) + cup(t, x);
      EXPECT_TRUE(is_coboundary(diff)) << "degree " << x.degree;
    }
  }
}

TEST(Property, DifferentialsComposeToZero) {
  // (0,2) -> (2,1) -> (4,0): the sign of (Sq^2 + t)(t) is trivial
  auto k2 = em(2, 7);
  Cochain t = k2.fundamental;
  Cochain once = sq(2, t) + cup(t, t);
  EXPECT_TRUE(is_coboundary(bockstein_sign(once, 8)));
}

TEST(Property, Naturality) {
  // the projection Z/4 -> Z/2 commutes with cup and Sq on cochains
  auto b4 = nerve(FiniteGroup::cyclic(4), 6);
  auto b2 = nerve(FiniteGroup::cyclic(2), 6);
  NerveFunctorMap f(b4, b2, {0}, {0, 1, 0, 1});
  Cochain x = em(1, 6).fundamental;
  Cochain x2 = Cochain::zero(b2, 1, CoeffModule::mod(2));
  x2.values = x.values;
  for (int k = 0; k <= 1; ++k) {
    Cochain lhs = pullback(sq(k, cup(x2, x2)), f);
    Cochain rhs = sq(k, cup(pullback(x2, f), pullback(x2, f)));
    EXPECT_EQ(lhs.values, rhs.values) << k;
  }
}
