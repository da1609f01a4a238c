#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "zcolor/coloring_algebra.hpp"

namespace zcolor {

/// True iff every crossing relation holds exactly (and the over strand keeps
/// its color through the crossing). Throws PreconditionError when the coloring
/// is not total on the diagram.
bool verify_coloring(const Diagram& d, const Coloring& c);

/// Per-crossing |over - under|, indexed like Diagram::crossings().
struct DiffSpectrum {
  std::vector<Integer> diffs;
  std::map<Integer, int> histogram;
  Integer max_diff = 0;  // d_m
};

DiffSpectrum diff_spectrum(const Diagram& d, const Coloring& c);

struct Simplicity {
  bool simple = false;
  std::optional<Integer> d;
};

/// Simple: every diff is 0 or one common d > 0. Trivial colorings are not simple.
Simplicity is_simple(const std::map<Integer, int>& histogram);
Simplicity is_simple(const Diagram& d, const Coloring& c);

std::set<Integer> palette(const Coloring& c);

struct PaletteSearchOptions {
  int coeff_bound = 3;
  /// When set, only colorings with at most this many colors are reported.
  std::optional<std::size_t> max_palette;
};

struct PaletteSearchResult {
  std::optional<Coloring> best;
  std::size_t palette_size = 0;
  std::uint64_t leaves = 0;  // coefficient vectors evaluated
};

/// Exhaustive search for a non-trivial coloring with the fewest colors among
/// integer combinations of a lattice basis. Translating by constants never
/// changes the palette, so the search runs over the sublattice with the
/// first arc fixed to 0 (HNF basis, coefficients in [-bound, bound]), pruning
/// by the palette of already-determined columns. Ties resolve to the
/// lexicographically smallest edge vector. Throws PreconditionError for rank < 2.
PaletteSearchResult minimize_palette_on_diagram(const Diagram& d, const ColoringLattice& lattice,
                                                const PaletteSearchOptions& opts = {});

}  // namespace zcolor
