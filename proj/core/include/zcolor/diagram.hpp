#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace zcolor {

/// PD label of an edge (a strand segment between two crossings). Labels of a
/// constructed Diagram are exactly 1..2n.
using EdgeLabel = int;

/// One crossing in PD form. Slots are listed counterclockwise starting from the
/// incoming under-edge, so slots[0] enters and slots[2] leaves on the under
/// strand. The sign fixes the over strand: +1 means it enters at slots[3] and
/// leaves at slots[1], -1 the reverse.
struct Crossing {
  std::array<EdgeLabel, 4> slots{};
  int sign = 0;

  EdgeLabel under_in() const { return slots[0]; }
  EdgeLabel under_out() const { return slots[2]; }
  int over_in_pos() const { return sign > 0 ? 3 : 1; }
  int over_out_pos() const { return sign > 0 ? 1 : 3; }
  EdgeLabel over_in() const { return slots[static_cast<std::size_t>(over_in_pos())]; }
  EdgeLabel over_out() const { return slots[static_cast<std::size_t>(over_out_pos())]; }

  /// Builds the PD quadruple from the four strand ends and a sign.
  static Crossing make(EdgeLabel under_in, EdgeLabel under_out, EdgeLabel over_in, EdgeLabel over_out,
                       int sign);

  friend bool operator==(const Crossing&, const Crossing&) = default;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

struct SlotRef {
  int crossing = -1;
  int pos = -1;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

/// One side of an edge on a face boundary. `forward` is true when the face walk
/// follows the edge's orientation. The face lies to the left of the walk.
struct FaceSide {
  EdgeLabel edge = 0;
  bool forward = true;
  SlotRef from;
  SlotRef to;
};

using Face = std::vector<FaceSide>;

/// Maps labels of some input onto the canonical labels of the built diagram.
using LabelMap = std::map<EdgeLabel, EdgeLabel>;

/// An oriented link diagram. Immutable after construction; every constructor
/// validates and re-canonicalizes labels (components ordered by their smallest
/// input label, each relabeled consecutively along its orientation starting
/// from that label) and sorts crossings.
class Diagram {
 public:
  Diagram() = default;

  /// Validates `crossings` (signs already known) and canonicalizes. When
  /// `relabel` is non-null it receives input label -> canonical label.
  /// Throws DiagramError on any violated invariant.
  static Diagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0,
                                LabelMap* relabel = nullptr);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  bool empty() const { return crossings_.empty() && free_loops_ == 0; }

  /// Components as cyclic edge sequences in orientation order. Free loops are
  /// not listed.
  const std::vector<std::vector<EdgeLabel>>& components() const { return components_; }
  int component_count() const { return static_cast<int>(components_.size()) + free_loops_; }
  int component_of(EdgeLabel e) const { return edge_info(e).component; }

  /// Slot where the edge enters its head crossing / leaves its tail crossing.
  SlotRef head(EdgeLabel e) const { return edge_info(e).head; }
  SlotRef tail(EdgeLabel e) const { return edge_info(e).tail; }
  EdgeLabel next_edge(EdgeLabel e) const;
  EdgeLabel prev_edge(EdgeLabel e) const;
  EdgeLabel edge_at(SlotRef s) const { return crossing(s.crossing).slots[static_cast<std::size_t>(s.pos)]; }

  /// Arcs in the coloring sense: maximal unions of edges joined through
  /// over-passes. Arc ids are 0-based, ordered by smallest edge label.
  const std::vector<std::vector<EdgeLabel>>& arcs() const { return arcs_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int arc_of(EdgeLabel e) const { return edge_info(e).arc; }

  /// Connected pieces of the crossing graph; free loops are extra pieces.
  int piece_count() const { return piece_count_ + free_loops_; }
  int piece_of_crossing(int c) const { return crossing_piece_.at(static_cast<std::size_t>(c)); }
  int piece_of_edge(EdgeLabel e) const { return piece_of_crossing(head(e).crossing); }
  bool is_split() const { return piece_count() > 1; }

  std::vector<Face> faces() const;

  /// Every violated structural invariant, as human-readable text. Empty for
  /// any diagram produced by from_crossings.
  std::vector<std::string> validate() const;

  int writhe() const;
  /// Half the signed count of crossings between components i and j (0-based,
  /// crossing components only).
  int linking_number(int i, int j) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  struct EdgeInfo {
    SlotRef head;
    SlotRef tail;
    int component = -1;
    int arc = -1;
  };
  const EdgeInfo& edge_info(EdgeLabel e) const;

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<EdgeInfo> edges_;  // index = label - 1
  std::vector<std::vector<EdgeLabel>> components_;
  std::vector<std::vector<EdgeLabel>> arcs_;
  std::vector<int> crossing_piece_;
  int piece_count_ = 0;
};

/// True when the diagrams agree up to edge relabeling and crossing order.
bool isomorphic(const Diagram& a, const Diagram& b);

/// Structural checks on a raw crossing list (signs known). Reports label
/// multiplicity, orientation, closure and planarity violations.
std::vector<std::string> check_crossings(const std::vector<Crossing>& crossings);

}  // namespace zcolor
