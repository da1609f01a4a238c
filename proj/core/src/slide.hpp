#pragma once

#include <optional>
#include <vector>

#include "zcolor/moves.hpp"

namespace zcolor::detail {

/// Exchanges the two consecutive under-passes at the ends of edge `s`: an R2
/// move between the two over strands in the face on one side of `s`, then R3
/// across the new triangle. With `second_over` the strand crossed second goes
/// over in the new bigon.
std::optional<Rewriter> slide(const Rewriter& rw, EdgeLabel s, bool left_face, bool second_over);

/// Every slide at `s` that applies, in a fixed order.
std::vector<Rewriter> slides_at(const Rewriter& rw, EdgeLabel s);

bool under_at_both_ends(const Diagram& d, EdgeLabel e);

}  // namespace zcolor::detail
