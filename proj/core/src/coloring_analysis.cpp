#include "zcolor/coloring_analysis.hpp"

#include <algorithm>
#include <limits>

#include "zcolor/errors.hpp"

namespace zcolor {

bool verify_coloring(const Diagram& d, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(d.edge_count()))
    throw PreconditionError("coloring assigns " + std::to_string(c.size()) + " values to a diagram with " +
                            std::to_string(d.edge_count()) + " edges");
  for (const auto& x : d.crossings()) {
    const Integer& over = c[x.over_in()];
    if (c[x.over_out()] != over) return false;
    if (2 * over != c[x.under_in()] + c[x.under_out()]) return false;
  }
  return true;
}

DiffSpectrum diff_spectrum(const Diagram& d, const Coloring& c) {
  if (!verify_coloring(d, c)) throw PreconditionError("coloring does not satisfy the crossing relations");
  DiffSpectrum s;
  for (const auto& x : d.crossings()) {
    Integer diff = abs(c[x.over_in()] - c[x.under_in()]);
    if (diff != abs(c[x.over_in()] - c[x.under_out()])) throw InternalError("unbalanced crossing diff");
    s.histogram[diff] += 1;
    if (diff > s.max_diff) s.max_diff = diff;
    s.diffs.push_back(std::move(diff));
  }
  return s;
}

Simplicity is_simple(const std::map<Integer, int>& histogram) {
  Simplicity out;
  for (const auto& [diff, count] : histogram) {
    if (diff == 0 || count == 0) continue;
    if (out.d) return {};
    out.d = diff;
  }
  out.simple = out.d.has_value();
  return out;
}

Simplicity is_simple(const Diagram& d, const Coloring& c) { return is_simple(diff_spectrum(d, c).histogram); }

std::set<Integer> palette(const Coloring& c) { return {c.values().begin(), c.values().end()}; }

namespace {

constexpr std::int64_t kSafe = std::int64_t{1} << 60;

std::size_t distinct(std::vector<std::int64_t>& scratch, const std::vector<std::int64_t>& v, std::size_t upto) {
  scratch.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(upto));
  std::sort(scratch.begin(), scratch.end());
  return static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

struct Search {
  const Diagram& diagram;
  std::vector<std::vector<std::int64_t>> rows;  // sublattice basis over arcs
  std::vector<std::size_t> pivots;
  int bound;
  std::size_t cap;

  std::vector<std::int64_t> cur;
  std::vector<std::int64_t> scratch;
  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  std::vector<std::int64_t> best_edges;
  std::uint64_t leaves = 0;

  std::size_t limit() const { return std::min(best_size, cap); }

  void leaf() {
    ++leaves;
    bool zero = std::all_of(cur.begin(), cur.end(), [](std::int64_t x) { return x == 0; });
    if (zero) return;
    std::size_t k = distinct(scratch, cur, cur.size());
    if (k > limit()) return;
    std::vector<std::int64_t> edges(static_cast<std::size_t>(diagram.edge_count()));
    for (EdgeLabel e = 1; e <= diagram.edge_count(); ++e)
      edges[static_cast<std::size_t>(e - 1)] = cur[static_cast<std::size_t>(diagram.arc_of(e))];
    if (k < best_size || edges < best_edges) {
      best_size = k;
      best_edges = std::move(edges);
    }
  }

  void descend(std::size_t level) {
    if (level == rows.size()) {
      leaf();
      return;
    }
    // Columns left of this row's pivot are final.
    if (best_size != std::numeric_limits<std::size_t>::max() || cap != std::numeric_limits<std::size_t>::max()) {
      if (distinct(scratch, cur, pivots[level]) > limit()) return;
    }
    const auto& row = rows[level];
    for (int step = 0; step <= 2 * bound; ++step) {
      std::int64_t coeff = step == 0 ? 0 : (step % 2 ? (step + 1) / 2 : -(step / 2));
      for (std::size_t j = 0; j < cur.size(); ++j) cur[j] += coeff * row[j];
      descend(level + 1);
      for (std::size_t j = 0; j < cur.size(); ++j) cur[j] -= coeff * row[j];
    }
  }
};

}  // namespace

PaletteSearchResult minimize_palette_on_diagram(const Diagram& d, const ColoringLattice& lattice,
                                                const PaletteSearchOptions& opts) {
  if (lattice.rank() < 2) throw PreconditionError("palette search needs a kernel of rank >= 2");
  if (opts.coeff_bound < 0) throw PreconditionError("coefficient bound must be non-negative");
  const std::size_t m = static_cast<std::size_t>(d.arc_count());
  std::vector<IntVector> shifted;
  for (const auto& b : lattice.basis) {
    if (b.size() != m) throw PreconditionError("lattice does not match the diagram");
    IntVector v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = b[j] - b[0];
    shifted.push_back(std::move(v));
  }
  std::vector<IntVector> sub = hermite_normal_form(std::move(shifted), m);

  Search s{d, {}, {}, opts.coeff_bound,
           opts.max_palette ? *opts.max_palette : std::numeric_limits<std::size_t>::max(), {}, {},
           std::numeric_limits<std::size_t>::max(), {}, 0};
  Integer reach = 0;
  for (const auto& row : sub) {
    std::vector<std::int64_t> r(m);
    std::size_t pivot = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (abs(row[j]) * (opts.coeff_bound + 1) * static_cast<long>(sub.size() + 1) > kSafe)
        throw PreconditionError("lattice entries too large for the bounded search");
      r[j] = row[j].get_si();
      if (pivot == m && r[j] != 0) pivot = j;
    }
    s.rows.push_back(std::move(r));
    s.pivots.push_back(pivot);
  }
  s.cur.assign(m, 0);
  s.descend(0);

  PaletteSearchResult out;
  out.leaves = s.leaves;
  if (!s.best_edges.empty()) {
    std::vector<Integer> values(s.best_edges.begin(), s.best_edges.end());
    out.best = Coloring(std::move(values));
    out.palette_size = s.best_size;
  }
  return out;
}

}  // namespace zcolor
