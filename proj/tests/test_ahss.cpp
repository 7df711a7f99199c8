#include <gtest/gtest.h>

#include <set>

#include "ordcalc/ahss.hpp"
#include "ordcalc/error.hpp"

using namespace ordcalc;

namespace {

const WittRun& run() {
  static const WittRun r = witt_run();
  return r;
}

std::map<std::pair<int, int>, std::string> graded(const SHResult& r) {
  std::map<std::pair<int, int>, std::string> m;
  for (const auto& g : r.associated_graded) m[{g.p, g.q}] = g.group.cell();
  return m;
}

}  // namespace

TEST(Ahss, E2Page) {
  auto e2 = page_cells(run().e2);
  const std::vector<std::string> q0 = {"C^×", "0", "Z2", "0", "Z4", "Z2"};
  const std::vector<std::string> q1 = {"Z2", "0", "Z2", "Z2", "Z2", "Z2^2"};
  for (int p = 0; p < 6; ++p) {
    EXPECT_EQ(e2[0][p], q0[p]) << p;
    EXPECT_EQ(e2[1][p], q1[p]) << p;
    EXPECT_EQ(e2[2][p], q1[p]) << p;
    EXPECT_EQ(e2[3][p], "0") << p;
  }
  EXPECT_EQ(e2[4][0], "sW");
  EXPECT_EQ(e2[4][2], "sW[2]");
}

TEST(Ahss, E3Page) {
  auto e3 = page_cells(run().e3);
  const std::vector<std::vector<std::string>> want = {
      {"C^×", "0", "0", "0", "Z4", "Z2"}, {"0", "0", "0", "Z2", "0", "⋯"}, {"0", "0", "Z2", "0", "0", "⋯"}};
  for (int q = 0; q < 3; ++q)
    for (int p = 0; p < 6; ++p) EXPECT_EQ(e3[q][p], want[q][p]) << p << "," << q;
}

TEST(Ahss, NonzeroDifferentials) {
  std::set<std::tuple<int, int, int, int>> got;
  for (const auto& a : run().e3.arrows)
    if (a.nonzero && a.r == 2) got.insert({a.p, a.q, a.tp, a.tq});
  const std::set<std::tuple<int, int, int, int>> want = {
      {0, 2, 2, 1}, {0, 1, 2, 0}, {3, 2, 5, 1}, {4, 2, 6, 1}, {4, 1, 6, 0}};
  EXPECT_EQ(got, want);
}

TEST(Ahss, DegreeFour) {
  SHResult r = assemble(run().e3, sw_spectrum(), 4);
  auto g = graded(r);
  EXPECT_EQ((g[std::pair{2, 2}]), "Z2");
  EXPECT_EQ((g[std::pair{3, 1}]), "Z2");
  EXPECT_EQ((g[std::pair{4, 0}]), "Z4");
  EXPECT_EQ(r.finite_order.value_or(0), 16);
  EXPECT_FALSE(r.group);  // four layers, extension left open
}

TEST(Ahss, DegreeFiveConditional) {
  SHResult r = assemble(run().e3, sw_spectrum(), 5);
  ASSERT_EQ(r.conditional.size(), 2u);
  std::map<std::string, std::string> c;
  for (const auto& s : r.conditional) c[s.condition] = s.group.cell();
  EXPECT_EQ(c["d5~ = 0"], "Z2");
  EXPECT_EQ(c["d5~ != 0"], "0");
  EXPECT_FALSE(r.assumptions.empty());
}

TEST(Ahss, BosonicCstarCohomology) {
  EXPECT_TRUE(h_bz2_cx(1).is_zero());
  EXPECT_EQ(h_bz2_cx(4).cell(), "Z4");
  EXPECT_EQ(h_bz2_cx(5).cell(), "Z2");
}

TEST(Ahss, UntwistedKeepsFiber) {
  WittRun u = witt_run(5, 7, false);
  EXPECT_EQ(u.e3.at(0, 2).render(), "Z2");
}

TEST(Ahss, PointBase) {
  AhssBase b;
  b.cx = nerve(FiniteGroupoid::point(), 4);
  Page p3 = turn_page(e2(b, sh_spectrum(), 3), b, sh_spectrum());
  auto r = assemble(p3, sh_spectrum(), 1);
  ASSERT_TRUE(r.group);
  EXPECT_EQ(r.group->cell(), "Z2");
}

TEST(Ahss, RejectsShortTruncation) {
  AhssBase b;
  b.cx = nerve(FiniteGroupoid::point(), 3);
  EXPECT_THROW(e2(b, sh_spectrum(), 5), TruncationError);
}

TEST(Ahss, DescriptorValidation) {
  SpectrumDescriptor s = sh_spectrum();
  s.rules.push_back({2, 0, 7, RuleOp::Sq2, false, "bad", ""});
  EXPECT_THROW(s.validate(), ConfigurationError);
}
