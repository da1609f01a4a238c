#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zcolor/coloring_analysis.hpp"
#include "zcolor/errors.hpp"
#include "zcolor/pd_io.hpp"

using namespace zcolor;
using oracle::corpus;

TEST(ColoringMatrix, ShapeAndRowSums) {
  for (const char* name : {"trefoil", "hopf", "figure_eight", "unlink_clasp"}) {
    Diagram d = corpus(name);
    const IntMatrix& m = coloring_matrix(d).entries;
    EXPECT_EQ(m.rows(), static_cast<std::size_t>(d.crossing_count()));
    EXPECT_EQ(m.cols(), static_cast<std::size_t>(d.arc_count()));
    // constant colorings are always solutions
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j);
      EXPECT_EQ(s, 0);
    }
  }
}

TEST(Determinant, KnownValues) {
  EXPECT_EQ(determinant(corpus("unknot_kink")), 1);
  EXPECT_EQ(determinant(corpus("unknot_writhe0")), 1);
  EXPECT_EQ(determinant(corpus("hopf")), 2);
  EXPECT_EQ(determinant(corpus("trefoil")), 3);
  EXPECT_EQ(determinant(corpus("trefoil_writhe0")), 3);
  EXPECT_EQ(determinant(corpus("figure_eight")), 5);
  EXPECT_EQ(determinant(corpus("unlink_clasp")), 0);
}

TEST(Determinant, MinorChoiceDoesNotMatter) {
  for (const auto& d : oracle::all_diagrams(4)) {
    if (d.is_split()) continue;
    const IntMatrix& m = coloring_matrix(d).entries;
    if (m.rows() != m.cols()) {
      // a component that never passes under adds an arc without a relation
      EXPECT_EQ(determinant(d), 0) << serialize_pd(d);
      continue;
    }
    Integer want = determinant(d);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        EXPECT_EQ(determinant_minor(d, r, c), want) << serialize_pd(d);
        EXPECT_EQ(abs(oracle::brute_determinant(m.without(r, c))), want);
      }
  }
}

TEST(FoxCount, MatchesBruteForceUpToThreeCrossings) {
  for (const auto& d : oracle::all_diagrams(3))
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(fox_coloring_count(d, n), oracle::brute_fox_count(d, n)) << serialize_pd(d);
}

TEST(FoxCount, KnownValues) {
  EXPECT_EQ(fox_coloring_count(corpus("trefoil"), 3), 9);
  EXPECT_EQ(fox_coloring_count(corpus("trefoil"), 5), 5);
  EXPECT_EQ(fox_coloring_count(corpus("trefoil"), 2), 2);
  EXPECT_EQ(fox_coloring_count(corpus("unknot_kink"), 6), 6);
  EXPECT_EQ(fox_coloring_count(corpus("hopf"), 2), 4);
  EXPECT_EQ(fox_coloring_count(corpus("figure_eight"), 5), 25);
  EXPECT_EQ(fox_coloring_count(parse_pd(""), 4), 1);
  EXPECT_EQ(fox_coloring_count(Diagram::from_crossings({}, 2), 3), 9);
  EXPECT_THROW(fox_coloring_count(corpus("trefoil"), 1), PreconditionError);
}

TEST(Colorability, WitnessIsValidAndNonTrivial) {
  for (const char* name : {"unlink_clasp", "unlink_split", "hopf_4_4", "trefoil_4"}) {
    Diagram d = corpus(name);
    auto r = is_z_colorable(d);
    ASSERT_TRUE(r.colorable) << name;
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify_coloring(d, *r.witness));
    EXPECT_FALSE(r.witness->is_trivial());
  }
  for (const char* name : {"trefoil", "hopf", "figure_eight", "unknot_kink"}) {
    auto r = is_z_colorable(corpus(name));
    EXPECT_FALSE(r.colorable) << name;
    EXPECT_FALSE(r.witness);
  }
}

TEST(Colorability, AgreesWithDeterminantOnSmallDiagrams) {
  // for non-split diagrams, a non-trivial coloring exists exactly when det = 0
  for (const auto& d : oracle::all_diagrams(3)) {
    if (d.is_split()) continue;
    EXPECT_EQ(is_z_colorable(d).colorable, determinant(d) == 0) << serialize_pd(d);
  }
}

TEST(Lattice, BasisVectorsAreColorings) {
  Diagram d = corpus("hopf_4_4");
  auto lattice = kernel_lattice(d);
  EXPECT_GE(lattice.rank(), 2u);
  for (const auto& v : lattice.basis) EXPECT_TRUE(verify_coloring(d, coloring_from_arcs(d, v)));
}

TEST(Verify, RejectsBrokenColorings) {
  Diagram d = corpus("unlink_clasp");
  Coloring c = *is_z_colorable(d).witness;
  EXPECT_TRUE(verify_coloring(d, c));
  c[1] += 1;
  EXPECT_FALSE(verify_coloring(d, c));
  EXPECT_THROW(verify_coloring(d, Coloring({1, 2})), PreconditionError);
}

TEST(SolvePartial, PinsAreHonoured) {
  Diagram d = oracle::chain(3);
  auto s = solve_partial(d, {{d.components()[0].back(), 0}, {d.components()[1].back(), 3}, {d.components()[2].back(), 5}});
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->unique);
  EXPECT_TRUE(verify_coloring(d, s->coloring));
  EXPECT_EQ(s->coloring[d.components()[2].back()], 5);
  EXPECT_FALSE(solve_partial(corpus("trefoil"), {{1, 0}, {2, 1}}));
}

TEST(Spectrum, HistogramAndSimplicity) {
  Diagram d = oracle::chain(3);
  Coloring c = oracle::chain_coloring(d, {0, 3, 4});
  auto s = diff_spectrum(d, c);
  EXPECT_EQ(s.max_diff, 3);
  EXPECT_EQ(s.histogram.at(3), 2);
  EXPECT_EQ(s.histogram.at(1), 2);
  EXPECT_FALSE(is_simple(d, c).simple);

  Coloring flat = oracle::chain_coloring(d, {0, 2, 4});
  auto simple = is_simple(d, flat);
  EXPECT_TRUE(simple.simple);
  EXPECT_EQ(simple.d, 2);

  EXPECT_FALSE(is_simple(std::map<Integer, int>{{0, 3}}).simple);
  EXPECT_TRUE(is_simple(std::map<Integer, int>{{0, 3}, {5, 1}}).simple);
}

TEST(Palette, SearchRespectsBoundAndCap) {
  Diagram d = corpus("unlink_clasp");
  auto r = minimize_palette_on_diagram(d, kernel_lattice(d));
  ASSERT_TRUE(r.best);
  EXPECT_EQ(r.palette_size, 3u);
  EXPECT_TRUE(verify_coloring(d, *r.best));

  PaletteSearchOptions capped;
  capped.max_palette = 2;
  EXPECT_FALSE(minimize_palette_on_diagram(d, kernel_lattice(d), capped).best);

  PaletteSearchOptions bad;
  bad.coeff_bound = -1;
  EXPECT_THROW(minimize_palette_on_diagram(d, kernel_lattice(d), bad), PreconditionError);
  EXPECT_THROW(minimize_palette_on_diagram(corpus("trefoil"), kernel_lattice(corpus("trefoil"))), PreconditionError);
}

TEST(Palette, FourColorsOnParallels) {
  for (const char* name : {"hopf_4_4", "trefoil_4"}) {
    Diagram d = corpus(name);
    auto r = minimize_palette_on_diagram(d, kernel_lattice(d));
    ASSERT_TRUE(r.best);
    EXPECT_EQ(r.palette_size, 4u) << name;
    EXPECT_EQ(palette(*r.best).size(), 4u);
  }
}
