#include <gtest/gtest.h>

#include "ordcalc/classify.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/io.hpp"

using namespace ordcalc;

namespace {

FiniteGroup z2() { return FiniteGroup::cyclic(2); }
Symmetry unitary() { return {z2(), {}}; }
Symmetry antiunitary() { return {z2(), TimeReversalTag{{0, 1}}}; }

}  // namespace

TEST(OnePlusOne, WorkedCases) {
  auto a = classify_1_1(Statistics::Bosonic, unitary(), GSet::fixed_points(z2(), 2));
  EXPECT_EQ(a.class_count.value_or(-1), 1);
  auto b = classify_1_1(Statistics::Bosonic, antiunitary(), GSet::fixed_points(z2(), 2));
  EXPECT_EQ(b.class_count.value_or(-1), 2);
  auto c = classify_1_1(Statistics::Bosonic, unitary(), GSet::regular(z2()));
  EXPECT_EQ(c.class_count.value_or(-1), 2);
  EXPECT_TRUE(c.anomaly.present);
  EXPECT_TRUE(c.anomaly.nonzero);
  auto d = classify_1_1(Statistics::Bosonic, antiunitary(), GSet::regular(z2()));
  EXPECT_EQ(d.class_count.value_or(-1), 1);
  EXPECT_FALSE(d.anomaly.nonzero);
}

TEST(OnePlusOne, PointIsTrivial) {
  for (const auto& s : {unitary(), antiunitary()}) {
    auto r = classify_1_1(Statistics::Bosonic, s, GSet::point(z2()));
    ASSERT_TRUE(r.group);
    EXPECT_TRUE(r.group->is_zero());
  }
  for (const auto& g : {FiniteGroup::trivial(), z2()}) {
    auto r = classify_1_1(Statistics::Fermionic, {g, {}}, GSet::point(g));
    ASSERT_TRUE(r.group);
    EXPECT_TRUE(r.group->is_zero());
  }
}

TEST(OnePlusOne, FermionicTwoPoints) {
  FiniteGroup e = FiniteGroup::trivial();
  auto r = classify_1_1(Statistics::Fermionic, {e, {}}, GSet::fixed_points(e, 2));
  ASSERT_TRUE(r.group);
  EXPECT_EQ(r.group->cell(), "Z2");
}

TEST(OnePlusOne, FermionicTimeReversalUnsupported) {
  EXPECT_THROW(classify_1_1(Statistics::Fermionic, antiunitary(), GSet::point(z2())), UnsupportedInput);
}

TEST(ZeroPlusOne, Classes) {
  auto b = classify_0_1(Statistics::Bosonic, false);
  EXPECT_EQ(b.classes.size(), 1u);
  auto f = classify_0_1(Statistics::Fermionic, false);
  EXPECT_EQ(f.classes.size(), 2u);
  auto t = classify_0_1(Statistics::Bosonic, true, 4);
  EXPECT_EQ(t.count_for_size(1), 1);
  EXPECT_EQ(t.count_for_size(2), 2);
  EXPECT_EQ(t.count_for_size(3), 1);
  EXPECT_EQ(t.count_for_size(4), 2);
  for (const auto& c : t.classes)
    if (c.size % 2) EXPECT_EQ(c.cls.kind, BrauerKind::R);
}

TEST(ThreePlusOne, FermionicOverBZ2) {
  auto r = classify_3_1_fermionic(FiniteGroupoid::classifying(z2()));
  ASSERT_TRUE(r.group);
  EXPECT_TRUE(r.group->is_zero());
}

TEST(ThreePlusOne, BosonicZ2) {
  auto r = classify_3_1_bosonic({SuperGroup{z2(), 0}});
  ASSERT_TRUE(r.group);
  EXPECT_TRUE(r.group->is_zero());
}

TEST(Tables, MatchGolden) {
  for (const auto& n : paper_table_names()) {
    auto t = paper_tables(n);
    EXPECT_TRUE(t.match) << n;
    for (const auto& d : t.diffs) ADD_FAILURE() << n << " " << d.where << ": " << d.expected << " vs " << d.got;
  }
}

TEST(Tables, Wildcard) {
  EXPECT_TRUE(cell_matches("⋯", "Z2"));
  EXPECT_TRUE(cell_matches("Z2", "Z2"));
  EXPECT_FALSE(cell_matches("Z2", "Z4"));
}

TEST(Io, RoundTrips) {
  auto g = group_from_json(Json::parse(R"({"cyclic": 3})"));
  EXPECT_EQ(g.order(), 3);
  auto x = gset_from_json(Json::parse(R"({"regular": true})"), g);
  EXPECT_EQ(x.points, 3);
  EXPECT_THROW(group_from_json(Json::parse(R"({"table": [[0, 1], [0, 1]]})")), ValidationError);
  auto a = algebra_from_json(read_json_file(ORDCALC_DATA_DIR "/inputs/cliff1.json"));
  EXPECT_EQ(super_brauer_class_C(a).kind, BrauerKind::Odd);
  Json bad = Json::parse(R"j({"dim": 2, "parity": [0, 1], "field": "Q(i)", "unit": 0,
                              "c": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 1, "1"]]})j");
  EXPECT_THROW(algebra_from_json(bad), ValidationError);
}
