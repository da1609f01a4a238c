#include "zcolor/coloring_algebra.hpp"

#include "zcolor/errors.hpp"

namespace zcolor {

bool Coloring::is_trivial() const {
  for (const auto& v : values_)
    if (v != values_.front()) return false;
  return true;
}

ColoringMatrix coloring_matrix(const Diagram& d) {
  ColoringMatrix m{IntMatrix(static_cast<std::size_t>(d.crossing_count()), static_cast<std::size_t>(d.arc_count()))};
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossing(i);
    auto row = static_cast<std::size_t>(i);
    m.entries(row, static_cast<std::size_t>(d.arc_of(c.over_in()))) += 2;
    m.entries(row, static_cast<std::size_t>(d.arc_of(c.under_in()))) -= 1;
    m.entries(row, static_cast<std::size_t>(d.arc_of(c.under_out()))) -= 1;
  }
  return m;
}

ColoringLattice kernel_lattice(const ColoringMatrix& m) { return {integer_kernel(m.entries)}; }

ColoringLattice kernel_lattice(const Diagram& d) { return kernel_lattice(coloring_matrix(d)); }

Coloring coloring_from_arcs(const Diagram& d, const IntVector& arc_values) {
  if (arc_values.size() != static_cast<std::size_t>(d.arc_count()))
    throw PreconditionError("arc vector has wrong length");
  std::vector<Integer> values(static_cast<std::size_t>(d.edge_count()));
  for (EdgeLabel e = 1; e <= d.edge_count(); ++e)
    values[static_cast<std::size_t>(e - 1)] = arc_values[static_cast<std::size_t>(d.arc_of(e))];
  return Coloring(std::move(values));
}

IntVector arc_values(const Diagram& d, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(d.edge_count()))
    throw PreconditionError("coloring is not total on the diagram's edges");
  IntVector out(static_cast<std::size_t>(d.arc_count()));
  for (int a = 0; a < d.arc_count(); ++a) {
    const auto& edges = d.arcs()[static_cast<std::size_t>(a)];
    out[static_cast<std::size_t>(a)] = c[edges.front()];
    for (EdgeLabel e : edges)
      if (c[e] != c[edges.front()])
        throw PreconditionError("edges " + std::to_string(edges.front()) + " and " + std::to_string(e) +
                                " lie on one arc but have different colors");
  }
  return out;
}

Integer determinant_minor(const Diagram& d, std::size_t row, std::size_t col) {
  if (d.empty()) throw PreconditionError("determinant of the empty diagram");
  if (d.is_split()) return 0;
  if (d.crossing_count() == 0) return 1;  // a single free loop
  IntMatrix m = coloring_matrix(d).entries;
  if (row >= m.rows() || col >= m.cols()) throw PreconditionError("deleted row/column out of range");
  IntMatrix minor = m.without(row, col);
  if (minor.rows() != minor.cols()) return 0;
  return abs_determinant(minor);
}

Integer determinant(const Diagram& d) { return determinant_minor(d, 0, 0); }

Colorability is_z_colorable(const Diagram& d) {
  Colorability out;
  if (d.is_split()) {
    out.colorable = true;
    std::vector<Integer> values(static_cast<std::size_t>(d.edge_count()));
    for (EdgeLabel e = 1; e <= d.edge_count(); ++e)
      values[static_cast<std::size_t>(e - 1)] = d.piece_of_edge(e) == 0 ? 0 : 1;
    out.witness = Coloring(std::move(values));
    return out;
  }
  ColoringLattice lat = kernel_lattice(d);
  for (const auto& v : lat.basis) {
    Coloring c = coloring_from_arcs(d, v);
    if (!c.is_trivial()) {
      out.colorable = true;
      out.witness = std::move(c);
      break;
    }
  }
  return out;
}

Integer fox_coloring_count(const Diagram& d, const Integer& n) {
  if (n < 2) throw PreconditionError("Fox colorings need n >= 2");
  IntMatrix m = coloring_matrix(d).entries;
  SmithForm f = smith_normal_form(m, false);
  Integer count = 1;
  std::size_t diag = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < diag; ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), f.S(i, i).get_mpz_t(), n.get_mpz_t());
    count *= g;  // gcd(0, n) = n
  }
  for (std::size_t j = diag; j < m.cols(); ++j) count *= n;
  for (int k = 0; k < d.free_loops(); ++k) count *= n;
  return count;
}

std::optional<PartialSolution> solve_partial(const Diagram& d, const std::map<EdgeLabel, Integer>& pins) {
  IntMatrix m = coloring_matrix(d).entries;
  std::map<int, Integer> arc_pins;
  for (const auto& [e, v] : pins) {
    int a = d.arc_of(e);
    auto [it, inserted] = arc_pins.emplace(a, v);
    if (!inserted && it->second != v) return std::nullopt;
  }
  // Stack the relations with one row per pinned arc.
  IntMatrix a(m.rows() + arc_pins.size(), m.cols());
  IntVector b(a.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  std::size_t r = m.rows();
  for (const auto& [arc, v] : arc_pins) {
    a(r, static_cast<std::size_t>(arc)) = 1;
    b[r] = v;
    ++r;
  }
  auto sol = solve_integer(a, b);
  if (!sol) return std::nullopt;
  return PartialSolution{coloring_from_arcs(d, sol->x), sol->unique};
}

}  // namespace zcolor
