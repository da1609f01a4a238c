#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zcolor/coloring_algebra.hpp"
#include "zcolor/diagram.hpp"

namespace zcolor::oracle {

// Counts Z/n colorings by trying every assignment to the arcs.
std::uint64_t brute_fox_count(const Diagram& d, int n);

// Every planar diagram with 1..max_crossings crossings and no free loops,
// deduplicated by canonical crossing list.
std::vector<Diagram> all_diagrams(int max_crossings);

// Determinant straight from cofactor expansion, for small matrices.
Integer brute_determinant(const IntMatrix& m);

// Chain of m circles, each passing twice under its predecessor.
Diagram chain(int m);

// Colors the chain so circle i carries values[i] on its last edge.
Coloring chain_coloring(const Diagram& d, const std::vector<int>& values);

// Random knot diagram obtained by scrambling `seed` with Reidemeister moves.
Diagram scramble(const Diagram& seed, int moves, std::mt19937& rng);

std::string corpus_dir();
Diagram corpus(const std::string& name);

}  // namespace zcolor::oracle
