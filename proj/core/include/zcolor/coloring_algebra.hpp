#pragma once

#include <map>
#include <optional>
#include <set>

#include "zcolor/diagram.hpp"
#include "zcolor/integer_matrix.hpp"

namespace zcolor {

/// A total map from the edges of a diagram to integers. Edges of one arc carry
/// the same value in any valid coloring; the map is still stored per edge so
/// that it is keyed by PD labels.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Integer> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const Integer& operator[](EdgeLabel e) const { return values_.at(static_cast<std::size_t>(e - 1)); }
  Integer& operator[](EdgeLabel e) { return values_.at(static_cast<std::size_t>(e - 1)); }
  const std::vector<Integer>& values() const { return values_; }

  /// Constant on every edge (the empty coloring counts as trivial).
  bool is_trivial() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Integer> values_;
};

/// Rows indexed by crossings, columns by arcs. The row of a crossing with over
/// arc a and under arcs b, c encodes 2*g(a) - g(b) - g(c) = 0.
struct ColoringMatrix {
  IntMatrix entries;
};

/// Integer basis (row HNF) of the arc-indexed kernel of the coloring matrix.
struct ColoringLattice {
  std::vector<IntVector> basis;
  std::size_t rank() const { return basis.size(); }
};

ColoringMatrix coloring_matrix(const Diagram& d);
ColoringLattice kernel_lattice(const ColoringMatrix& m);
ColoringLattice kernel_lattice(const Diagram& d);

/// Arc-indexed values -> edge coloring, and back. `arc_values` throws
/// PreconditionError when edges of one arc disagree.
Coloring coloring_from_arcs(const Diagram& d, const IntVector& arc_values);
IntVector arc_values(const Diagram& d, const Coloring& c);

/// Determinant from the minor obtained by deleting row `row` and column `col`.
Integer determinant_minor(const Diagram& d, std::size_t row, std::size_t col);

/// |product of elementary divisors| of the coloring matrix with its first row
/// and column deleted. Split diagrams have determinant 0.
Integer determinant(const Diagram& d);

struct Colorability {
  bool colorable = false;
  std::optional<Coloring> witness;  // non-trivial when colorable
};

/// True iff the kernel has a non-constant vector. Split diagrams report a
/// witness that is constant on each piece (piece 0 gets 0, the others 1).
Colorability is_z_colorable(const Diagram& d);

/// Number of Fox n-colorings (maps to Z/n satisfying every relation mod n),
/// computed from the Smith form. Free loops contribute a factor n each.
Integer fox_coloring_count(const Diagram& d, const Integer& n);

struct PartialSolution {
  Coloring coloring;
  bool unique = false;
};

/// Completes a partial assignment into a valid coloring. With no pins the
/// all-zero coloring is returned. Returns nothing when no completion exists.
std::optional<PartialSolution> solve_partial(const Diagram& d, const std::map<EdgeLabel, Integer>& pins);

}  // namespace zcolor
