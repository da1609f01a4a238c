#pragma once

#include <array>
#include <vector>

#include "zcolor/diagram.hpp"

namespace zcolor {

/// A full twist of copies `first_copy` and `first_copy + 1` of a base edge.
/// Twists on one base edge are placed tail to head in order of `offset`.
struct TwistInsertion {
  EdgeLabel base_edge = 0;
  int offset = 0;
  int sign = 1;
  int count = 1;
  int first_copy = 1;

  friend bool operator==(const TwistInsertion&, const TwistInsertion&) = default;
};

struct CableSpec {
  std::vector<int> multiplicities;  // one per component, free loops last
  std::vector<TwistInsertion> twist_insertions;
};

/// The crossings replacing one base crossing. `under[k][s]` is the s-th piece
/// of under copy k+1 (piece 0 enters the grid, the last leaves it); `over`
/// likewise for the over copies.
struct CableGrid {
  int base_crossing = 0;
  int sign = 1;
  std::vector<std::vector<EdgeLabel>> under;
  std::vector<std::vector<EdgeLabel>> over;
};

/// One inserted full twist: pieces x0,x1,x2 of the left copy and y0,y1,y2 of
/// the right copy, in orientation order.
struct CableTwist {
  TwistInsertion site;
  std::array<EdgeLabel, 3> left{};
  std::array<EdgeLabel, 3> right{};
};

struct CabledDiagram {
  Diagram base;
  CableSpec spec;
  Diagram diagram;
  std::vector<CableGrid> grids;  // indexed by base crossing
  /// segments[e-1][k] lists, tail to head, the pieces of copy k+1 of base edge
  /// e that lie outside grids and twists.
  std::vector<std::vector<std::vector<EdgeLabel>>> segments;
  std::vector<CableTwist> twists;

  int multiplicity_of_edge(EdgeLabel base_edge) const;
  /// Component of the cabled diagram holding copy `copy` (1-based) of the base
  /// component `component`.
  int copy_component(int component, int copy) const;
};

/// Blackboard-framed parallel with the requested twists inserted.
CabledDiagram parallel(const Diagram& d, const CableSpec& spec);

/// The 2-parallel of a writhe-0 knot diagram.
CabledDiagram two_parallel_untwisted(const Diagram& d);

/// Inserts `site.count` full twists of sign `site.sign` after any twists
/// already on the same copies of `site.base_edge`.
CabledDiagram insert_full_twist(const CabledDiagram& c, const TwistInsertion& site);

struct Lemma4Check {
  int writhe = 0;
  int linking = 0;
  bool equal = false;
};

Lemma4Check check_lemma4(const Diagram& d);

}  // namespace zcolor
