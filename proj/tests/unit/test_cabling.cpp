#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zcolor/cabling.hpp"
#include "zcolor/errors.hpp"
#include "zcolor/pd_io.hpp"

using namespace zcolor;
using oracle::corpus;

TEST(Parallel, CrossingAndComponentCounts) {
  struct Case {
    const char* name;
    std::vector<int> spec;
    int crossings, components;
  };
  for (const Case& c : {Case{"trefoil", {2}, 12, 2}, Case{"trefoil", {3}, 27, 3}, Case{"hopf", {2, 3}, 12, 5},
                        Case{"hopf", {4, 4}, 32, 8}, Case{"figure_eight", {1}, 4, 1}}) {
    auto cable = parallel(corpus(c.name), {c.spec, {}});
    EXPECT_EQ(cable.diagram.crossing_count(), c.crossings) << c.name;
    EXPECT_EQ(cable.diagram.component_count(), c.components) << c.name;
    EXPECT_TRUE(cable.diagram.validate().empty());
  }
}

TEST(Parallel, SignsFollowTheBase) {
  Diagram d = corpus("trefoil");
  auto cable = parallel(d, {{3}, {}});
  EXPECT_EQ(cable.diagram.writhe(), 9 * d.writhe());
  for (const auto& g : cable.grids)
    for (const auto& row : g.under) EXPECT_EQ(row.size(), 4u);
}

TEST(Parallel, CopiesPairwiseLinkLikeTheWrithe) {
  Diagram d = corpus("figure_eight");
  auto cable = parallel(d, {{3}, {}});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) EXPECT_EQ(cable.diagram.linking_number(i, j), d.writhe());
  auto hopf = parallel(corpus("hopf"), {{2, 2}, {}});
  EXPECT_EQ(hopf.diagram.linking_number(hopf.copy_component(0, 1), hopf.copy_component(1, 1)), -1);
}

TEST(Parallel, FreeLoopsAndErrors) {
  Diagram d = Diagram::from_crossings({Crossing::make(1, 2, 2, 1, 1)}, 1);
  auto cable = parallel(d, {{2, 3}, {}});
  EXPECT_EQ(cable.diagram.free_loops(), 3);
  EXPECT_THROW(parallel(corpus("hopf"), {{2}, {}}), PreconditionError);
  EXPECT_THROW(parallel(corpus("trefoil"), {{0}, {}}), PreconditionError);
}

TEST(TwoParallel, WritheZeroOnly) {
  auto c = two_parallel_untwisted(corpus("unknot_writhe0"));
  EXPECT_EQ(c.diagram.linking_number(0, 1), 0);
  try {
    two_parallel_untwisted(corpus("trefoil"));
    FAIL() << "expected rejection";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("-3"), std::string::npos);
  }
}

TEST(Twist, ChangesLinkingBySign) {
  Diagram d = corpus("trefoil");
  auto base = parallel(d, {{2}, {}});
  for (int sign : {1, -1}) {
    auto t = insert_full_twist(base, {1, 0, sign});
    EXPECT_EQ(t.diagram.crossing_count(), base.diagram.crossing_count() + 2);
    EXPECT_EQ(t.diagram.linking_number(0, 1), d.writhe() + sign);
    EXPECT_EQ(t.twists.size(), 1u);
  }
  auto twice = insert_full_twist(insert_full_twist(base, {2, 0, 1}), {4, 0, 1});
  EXPECT_EQ(twice.diagram.linking_number(0, 1), d.writhe() + 2);
  auto multi = parallel(d, {{2}, {{3, 0, 1, 3}}});
  EXPECT_EQ(multi.diagram.linking_number(0, 1), d.writhe() + 3);
}

TEST(Twist, InvalidSites) {
  auto base = parallel(corpus("trefoil"), {{2}, {}});
  EXPECT_THROW(insert_full_twist(base, {99, 0, 1}), PreconditionError);
  EXPECT_THROW(insert_full_twist(base, {1, 0, 2}), PreconditionError);
  auto one = parallel(corpus("trefoil"), {{1}, {}});
  EXPECT_THROW(insert_full_twist(one, {1, 0, 1}), PreconditionError);
}

TEST(WritheLinking, HoldsOnRandomKnots) {
  std::mt19937 rng(99);
  for (int i = 0; i < 60; ++i) {
    Diagram d = oracle::scramble(corpus(i % 2 ? "trefoil" : "unknot_kink"), 1 + static_cast<int>(rng() % 8), rng);
    auto l = check_lemma4(d);
    EXPECT_TRUE(l.equal) << serialize_pd(d);
    EXPECT_EQ(l.writhe, d.writhe());
  }
  EXPECT_THROW(check_lemma4(corpus("hopf")), PreconditionError);
}
