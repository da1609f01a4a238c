#pragma once

#include <optional>
#include <vector>

#include "zcolor/cabling.hpp"
#include "zcolor/coloring_algebra.hpp"
#include "zcolor/moves.hpp"

namespace zcolor {

/// Colors of the k parallel copies away from crossings: 1 on copies k/2 and
/// k/2+1, 0 elsewhere.
struct BoundaryPattern {
  int k = 0;
  std::vector<Integer> colors;

  static BoundaryPattern standard(int k);
};

/// One under strand per row, propagated under the over colors in the order
/// given. interior[s][j] is the color after passing under over[j]; the last
/// entry equals under_out[s].
struct RegionColoring {
  std::vector<Integer> over_colors;
  std::vector<Integer> under_in;
  std::vector<Integer> under_out;
  std::vector<std::vector<Integer>> interior;
};

RegionColoring propagate_region(const std::vector<Integer>& over, const std::vector<Integer>& under_in);

/// Boundary pattern on every parallel family, grids filled by propagation.
/// Needs all multiplicities even and at least 4, no twists and a non-split
/// base.
Coloring color_even_parallel(const CabledDiagram& c);

struct ColoredDiagram {
  Diagram diagram;
  Coloring coloring;
  MoveTrace trace;
};

/// Removes `target` from the palette by local moves, never introducing colors
/// outside the input palette. Throws NoApplicableMove when the move library
/// cannot do it.
ColoredDiagram delete_color_moves(const Diagram& d, const Coloring& c, const Integer& target);

/// Same, continuing an existing rewrite so the trace refers to its source.
void delete_color_moves(Rewriter& rw, const Integer& target);

/// Twist plan for the 2-parallel of a writhe-0 knot diagram: a negative twist
/// where each positive crossing's under pair leaves it, a positive twist where
/// each negative crossing's under pair enters it.
std::vector<TwistInsertion> balanced_twist_plan(const Diagram& d);

struct TwoParallelColoring {
  CabledDiagram cable;
  Coloring coloring;
};

/// 2-parallel of a writhe-0 knot diagram with a balanced twist plan (computed
/// when not given) and its coloring with over pairs (2, 3).
TwoParallelColoring color_two_parallel(const Diagram& d, const std::optional<std::vector<TwistInsertion>>& plan = {});

}  // namespace zcolor
