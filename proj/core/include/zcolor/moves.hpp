#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zcolor/coloring_algebra.hpp"
#include "zcolor/diagram.hpp"

namespace zcolor {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

const char* to_string(MoveKind k);
std::optional<MoveKind> move_kind_from_string(const std::string& s);

/// One Reidemeister move. The location is given in the labels of the diagram
/// the move is applied to:
///   R1Add    edges = {e}; a kink of `sign` is put on e, whose first pass is
///            over when `over_first`.
///   R1Remove edges = {loop edge of the kink}.
///   R2Add    edges = {under, over}; the face is the one to the left of
///            `under` walked forwards (`under_forward`) or backwards, and
///            `over` must bound the same face.
///   R2Remove edges = {under piece, over piece} of a bigon.
///   R3       edges = the three sides of a triangular face.
struct Move {
  MoveKind kind = MoveKind::R2Add;
  std::vector<EdgeLabel> edges;
  bool under_forward = true;
  int sign = 1;
  bool over_first = false;
  int disk = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Result of applying one move. `origin[e-1]` lists the labels of the input
/// diagram that the new edge e descends from; `touched` the input labels the
/// move modifies (split, merged, rewired or re-attached).
struct MoveResult {
  Diagram diagram;
  std::vector<std::vector<EdgeLabel>> origin;
  std::set<EdgeLabel> touched;
  /// R2Add only: new labels of the under strand's three pieces and the over
  /// strand's three pieces, in walk order of the chosen face.
  std::vector<EdgeLabel> pieces;
};

/// Applies a move, throwing PreconditionError("malformed move ...") when the
/// location does not admit it.
MoveResult apply_move(const Diagram& d, const Move& m);

/// A replayable sequence of moves with declared regions. Regions are sets of
/// edges of the source diagram; each move lies in region `move.disk`.
struct MoveTrace {
  std::vector<Move> moves;
  std::map<int, std::set<EdgeLabel>> disks;
  bool empty() const { return moves.empty(); }
};

Diagram replay_trace(const Diagram& source, const MoveTrace& trace);

struct LocalityReport {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Replays the trace from `source` and checks: regions are pairwise disjoint,
/// every move touches only source edges inside its region, and the result is
/// `target` up to relabeling.
LocalityReport verify_local_equivalence(const Diagram& source, const Diagram& target, const MoveTrace& trace);

/// Applies moves to a diagram while tracking provenance back to a fixed source
/// diagram, recoloring after each move and recording a MoveTrace whose regions
/// merge whenever two moves overlap.
class Rewriter {
 public:
  explicit Rewriter(Diagram source, std::optional<Coloring> coloring = std::nullopt);

  const Diagram& source() const { return source_; }
  const Diagram& diagram() const { return current_; }
  const std::optional<Coloring>& coloring() const { return coloring_; }
  const MoveTrace& trace() const { return trace_; }
  /// Source edges the current edge descends from.
  const std::set<EdgeLabel>& provenance(EdgeLabel e) const {
    return provenance_.at(static_cast<std::size_t>(e - 1));
  }

  /// Applies the move. A coloring, when tracked, is carried over on untouched
  /// edges and re-solved inside the touched region; throws if the induced
  /// coloring is not determined or invalid.
  MoveResult apply(Move m);

 private:
  Diagram source_;
  Diagram current_;
  std::optional<Coloring> coloring_;
  std::vector<std::set<EdgeLabel>> provenance_;
  MoveTrace trace_;
};

/// Completes a coloring of `d` from known edge values by propagating the
/// crossing relations, falling back to an exact solve. Returns nothing when the
/// completion is inconsistent or not unique.
std::optional<Coloring> complete_coloring(const Diagram& d, const std::map<EdgeLabel, Integer>& known);

}  // namespace zcolor
