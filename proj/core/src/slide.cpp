#include "slide.hpp"

#include <algorithm>

#include "zcolor/errors.hpp"

namespace zcolor::detail {

bool under_at_both_ends(const Diagram& d, EdgeLabel e) {
  return d.tail(e).pos == 2 && d.head(e).pos == 0 && d.tail(e).crossing != d.head(e).crossing;
}

std::optional<Rewriter> slide(const Rewriter& rw, EdgeLabel s, bool left_face, bool second_over) {
  const Diagram& d = rw.diagram();
  if (!under_at_both_ends(d, s)) return std::nullopt;
  const int first = d.tail(s).crossing;
  for (const auto& face : d.faces()) {
    const std::size_t n = face.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (face[i].edge != s || face[i].forward != left_face) continue;
      if (n < 3) return std::nullopt;
      const FaceSide& prev = face[(i + n - 1) % n];
      const FaceSide& next = face[(i + 1) % n];
      const FaceSide& z = prev.to.crossing == first ? prev : next;
      const FaceSide& a = prev.to.crossing == first ? next : prev;
      const FaceSide& pushed = second_over ? z : a;
      const FaceSide& kept = second_over ? a : z;
      if (pushed.edge == kept.edge || pushed.edge == s || kept.edge == s) return std::nullopt;

      Rewriter r2 = rw;
      MoveResult added;
      try {
        added = r2.apply({MoveKind::R2Add, {pushed.edge, kept.edge}, pushed.forward});
      } catch (const Error&) {
        return std::nullopt;
      }
      EdgeLabel s2 = 0;
      for (std::size_t e = 0; e < added.origin.size(); ++e)
        if (added.origin[e] == std::vector<EdgeLabel>{s}) s2 = static_cast<EdgeLabel>(e + 1);
      if (s2 == 0) return std::nullopt;
      for (const auto& tri : r2.diagram().faces()) {
        if (tri.size() != 3) continue;
        auto has = [&](EdgeLabel e) { return tri[0].edge == e || tri[1].edge == e || tri[2].edge == e; };
        if (!has(s2) || std::none_of(added.pieces.begin(), added.pieces.end(), has)) continue;
        Rewriter r3 = r2;
        try {
          r3.apply({MoveKind::R3, {tri[0].edge, tri[1].edge, tri[2].edge}});
        } catch (const Error&) {
          continue;
        }
        return r3;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Rewriter> slides_at(const Rewriter& rw, EdgeLabel s) {
  std::vector<Rewriter> out;
  for (bool left : {true, false})
    for (bool second_over : {true, false})
      if (auto r = slide(rw, s, left, second_over)) out.push_back(std::move(*r));
  return out;
}

}  // namespace zcolor::detail
