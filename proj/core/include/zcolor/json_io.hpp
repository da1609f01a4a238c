#pragma once

#include <nlohmann/json.hpp>

#include "zcolor/cabling.hpp"
#include "zcolor/coloring_algebra.hpp"
#include "zcolor/coloring_analysis.hpp"
#include "zcolor/moves.hpp"
#include "zcolor/rewrite.hpp"

namespace zcolor {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers inside the 53-bit safe range are JSON numbers, others strings.
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json diagram_json(const Diagram& d);
/// {"values": [...]} indexed by edge label 1..n, plus palette data.
Json coloring_json(const Coloring& c);
/// Accepts {"values": [...]} or a bare array; the length must match `d`.
Coloring coloring_from_json(const Diagram& d, const Json& j);
Json lattice_json(const ColoringLattice& l);
Json spectrum_json(const Diagram& d, const Coloring& c);
Json move_json(const Move& m);
Move move_from_json(const Json& j);
Json trace_json(const MoveTrace& t);
MoveTrace trace_from_json(const Json& j);
Json path_json(const DiffPath& p);
Json cable_spec_json(const CableSpec& s);
/// {"multiplicities": [...], "twists": [{"edge", "offset", "sign", "count", "first_copy"}]}
CableSpec cable_spec_from_json(const Json& j);

}  // namespace zcolor
