#pragma once

#include <optional>
#include <vector>

#include "zcolor/coloring_algebra.hpp"
#include "zcolor/moves.hpp"
#include "zcolor/parallel_coloring.hpp"

namespace zcolor {

enum class PathRole { Over, Under };

/// A walk along edges from a crossing of maximal diff to a crossing of smaller
/// non-zero diff, passing only 0-diff crossings. All `via` edges carry
/// `color`.
struct DiffPath {
  int start = -1;
  int end = -1;
  std::vector<EdgeLabel> via;
  Integer color;
  Integer max_diff;
  Integer diff;
  PathRole start_role = PathRole::Over;
  PathRole end_role = PathRole::Over;

  /// 1..4 from (start role, end role); over/over is 1, under/under is 4.
  int kind() const;
};

/// Shortest path, ties broken by lowest end crossing then lowest start.
/// Throws PreconditionError for a simple coloring; returns nothing when no
/// path exists (e.g. the two diff classes sit in different pieces).
std::optional<DiffPath> find_diff_path(const Diagram& d, const Coloring& c);

/// Removes every crossing of maximal diff. Throws NoApplicableMove when the
/// move templates cannot do it.
ColoredDiagram eliminate_max_diff(const Diagram& d, const Coloring& c, const DiffPath& path);
/// Same on a running rewrite; returns the number of crossings eliminated.
int eliminate_max_diff(Rewriter& rw, const DiffPath& path);

struct SimplifyResult {
  ColoredDiagram result;
  std::vector<DiffPath> paths;  // first path of each outer iteration
  int outer_iterations = 0;
  int eliminations = 0;
  int iteration_bound = 0;
};

SimplifyResult to_simple_coloring(const Diagram& d, const Coloring& c);

}  // namespace zcolor
