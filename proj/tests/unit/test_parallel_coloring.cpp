#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zcolor/cabling.hpp"
#include "zcolor/coloring_analysis.hpp"
#include "zcolor/errors.hpp"
#include "zcolor/parallel_coloring.hpp"

using namespace zcolor;
using oracle::corpus;

namespace {

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::set<Integer> set_of(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(BoundaryPattern, OnesInTheMiddle) {
  EXPECT_EQ(BoundaryPattern::standard(4).colors, ints({0, 1, 1, 0}));
  EXPECT_EQ(BoundaryPattern::standard(6).colors, ints({0, 0, 1, 1, 0, 0}));
  EXPECT_EQ(BoundaryPattern::standard(2).colors, ints({1, 1}));
  EXPECT_THROW(BoundaryPattern::standard(5), PreconditionError);
}

TEST(PropagateRegion, WorkedExamples) {
  auto a = propagate_region(ints({0, 1, 1, 0}), ints({0}));
  EXPECT_EQ(a.interior[0], ints({0, 2, 0, 0}));
  EXPECT_EQ(a.under_out, ints({0}));
  auto b = propagate_region(ints({0, 1, 1, 0}), ints({1}));
  EXPECT_EQ(b.interior[0], ints({-1, 3, -1, 1}));
  auto c = propagate_region(ints({0, 0, 1, 1, 0, 0}), ints({1}));
  EXPECT_EQ(c.interior[0], ints({-1, 1, 1, 1, -1, 1}));
  EXPECT_EQ(c.under_out, ints({1}));
}

TEST(PropagateRegion, OddPatternsDoNotTelescope) {
  auto r = propagate_region(ints({0, 1, 0}), ints({0}));
  EXPECT_NE(r.under_out[0], 0);
}

TEST(EvenParallel, PalettesPerResidue) {
  auto four = parallel(corpus("hopf"), {{4, 4}, {}});
  Coloring c4 = color_even_parallel(four);
  EXPECT_TRUE(verify_coloring(four.diagram, c4));
  EXPECT_EQ(palette(c4), set_of({-1, 0, 1, 2, 3}));

  auto six = parallel(corpus("hopf"), {{6, 6}, {}});
  Coloring c6 = color_even_parallel(six);
  EXPECT_TRUE(verify_coloring(six.diagram, c6));
  EXPECT_EQ(palette(c6), set_of({-1, 0, 1, 2}));

  auto mixed = parallel(corpus("hopf"), {{4, 6}, {}});
  EXPECT_TRUE(verify_coloring(mixed.diagram, color_even_parallel(mixed)));

  auto fig8 = parallel(corpus("figure_eight"), {{4}, {}});
  Coloring cf = color_even_parallel(fig8);
  EXPECT_TRUE(verify_coloring(fig8.diagram, cf));
  EXPECT_FALSE(cf.is_trivial());
}

TEST(EvenParallel, Preconditions) {
  EXPECT_THROW(color_even_parallel(parallel(corpus("trefoil"), {{3}, {}})), PreconditionError);
  EXPECT_THROW(color_even_parallel(parallel(corpus("trefoil"), {{2}, {}})), PreconditionError);
  EXPECT_THROW(color_even_parallel(parallel(corpus("unlink_split"), {{4, 4}, {}})), PreconditionError);
  auto twisted = parallel(corpus("trefoil"), {{4}, {{1, 0, 1}}});
  EXPECT_THROW(color_even_parallel(twisted), PreconditionError);
}

TEST(DeleteColor, RemovesTargetLocally) {
  auto cable = parallel(corpus("hopf"), {{4, 4}, {}});
  Coloring c = color_even_parallel(cable);
  ColoredDiagram r = delete_color_moves(cable.diagram, c, 3);
  EXPECT_TRUE(verify_coloring(r.diagram, r.coloring));
  EXPECT_EQ(palette(r.coloring), set_of({-1, 0, 1, 2}));
  EXPECT_TRUE(verify_local_equivalence(cable.diagram, r.diagram, r.trace).ok);
  EXPECT_TRUE(isomorphic(replay_trace(cable.diagram, r.trace), r.diagram));
  auto s = is_simple(r.diagram, r.coloring);
  EXPECT_TRUE(s.simple);
  EXPECT_EQ(s.d, 1);
}

TEST(DeleteColor, TargetMustBePresent) {
  auto cable = parallel(corpus("hopf"), {{6, 6}, {}});
  Coloring c = color_even_parallel(cable);
  EXPECT_THROW(delete_color_moves(cable.diagram, c, 3), PreconditionError);
}

TEST(DeleteColor, InteriorColorsAreNotEliminable) {
  auto cable = parallel(corpus("hopf"), {{4, 4}, {}});
  Coloring c = color_even_parallel(cable);
  EXPECT_THROW(delete_color_moves(cable.diagram, c, 1), NoApplicableMove);
}

TEST(TwoParallel, ColorsAndReduces) {
  for (const char* name : {"unknot_writhe0", "trefoil_writhe0"}) {
    auto r = color_two_parallel(corpus(name));
    EXPECT_TRUE(verify_coloring(r.cable.diagram, r.coloring));
    EXPECT_EQ(r.cable.diagram.linking_number(0, 1), 0);
    auto pal = palette(r.coloring);
    EXPECT_GE(*pal.begin(), -1);
    EXPECT_LE(*pal.rbegin(), 4);
    Rewriter rw(r.cable.diagram, r.coloring);
    for (int t : {4, -1})
      if (palette(*rw.coloring()).count(t)) delete_color_moves(rw, t);
    EXPECT_EQ(palette(*rw.coloring()), set_of({0, 1, 2, 3})) << name;
    EXPECT_TRUE(verify_local_equivalence(rw.source(), rw.diagram(), rw.trace()).ok);
  }
}

TEST(TwoParallel, Rejections) {
  EXPECT_THROW(color_two_parallel(corpus("trefoil")), PreconditionError);
  EXPECT_THROW(color_two_parallel(corpus("hopf")), PreconditionError);
  Diagram d = corpus("unknot_writhe0");
  auto plan = balanced_twist_plan(d);
  ASSERT_FALSE(plan.empty());
  plan.pop_back();
  EXPECT_THROW(color_two_parallel(d, plan), PreconditionError);
}
