#include "zcolor/moves.hpp"

#include <algorithm>
#include <numeric>

#include "zcolor/coloring_analysis.hpp"
#include "zcolor/errors.hpp"

namespace zcolor {

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

namespace {

[[noreturn]] void malformed(const std::string& why) { throw PreconditionError("malformed move: " + why); }

// Mutable copy of a diagram's crossings with fresh-label allocation and
// per-label provenance.
struct Work {
  std::vector<Crossing> xs;
  int free_loops = 0;
  EdgeLabel fresh;
  std::map<EdgeLabel, std::vector<EdgeLabel>> origin;
  std::set<EdgeLabel> touched;

  explicit Work(const Diagram& d) : xs(d.crossings()), free_loops(d.free_loops()), fresh(d.edge_count() + 1) {
    for (EdgeLabel e = 1; e <= d.edge_count(); ++e) origin[e] = {e};
  }

  EdgeLabel make(EdgeLabel from) {
    EdgeLabel e = fresh++;
    origin[e] = {from};
    return e;
  }

  EdgeLabel& at(SlotRef s) {
    return xs[static_cast<std::size_t>(s.crossing)].slots[static_cast<std::size_t>(s.pos)];
  }

  // Deletes crossings and merges label pairs; fully absorbed groups become
  // free loops.
  void remove_and_merge(std::vector<int> drop, const std::vector<std::pair<EdgeLabel, EdgeLabel>>& joins) {
    std::map<EdgeLabel, EdgeLabel> parent;
    auto find = [&](EdgeLabel x) {
      while (parent.count(x) && parent[x] != x) x = parent[x];
      return x;
    };
    for (auto [a, b] : joins) {
      EdgeLabel ra = find(a), rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::sort(drop.begin(), drop.end(), std::greater<>());
    for (int c : drop) xs.erase(xs.begin() + c);

    std::map<EdgeLabel, int> uses;
    for (auto& x : xs)
      for (auto& e : x.slots) {
        e = find(e);
        ++uses[e];
      }
    std::set<EdgeLabel> groups;
    for (auto [a, b] : joins) groups.insert(find(a));
    for (EdgeLabel g : groups)
      if (!uses.count(g)) ++free_loops;
    // Merge provenance into the representative.
    std::map<EdgeLabel, std::vector<EdgeLabel>> merged;
    for (auto& [e, orig] : origin) {
      auto& dst = merged[find(e)];
      dst.insert(dst.end(), orig.begin(), orig.end());
    }
    origin = std::move(merged);
  }

  MoveResult finish() {
    MoveResult r;
    LabelMap relabel;
    r.diagram = Diagram::from_crossings(std::move(xs), free_loops, &relabel);
    r.origin.assign(static_cast<std::size_t>(r.diagram.edge_count()), {});
    for (const auto& [raw, canon] : relabel) {
      auto o = origin.at(raw);
      std::sort(o.begin(), o.end());
      o.erase(std::unique(o.begin(), o.end()), o.end());
      r.origin[static_cast<std::size_t>(canon - 1)] = std::move(o);
    }
    r.touched = touched;
    return r;
  }
};

MoveResult r1_add(const Diagram& d, const Move& m) {
  if (m.edges.size() != 1) malformed("R1+ needs one edge");
  EdgeLabel e = m.edges[0];
  if (e < 1 || e > d.edge_count()) malformed("R1+ edge out of range");
  if (m.sign != 1 && m.sign != -1) malformed("R1+ sign must be +1 or -1");
  Work w(d);
  EdgeLabel in = w.make(e), loop = w.make(e), out = w.make(e);
  w.at(d.tail(e)) = in;
  w.at(d.head(e)) = out;
  Crossing x;
  x.sign = m.sign;
  if (!m.over_first)
    x.slots = m.sign > 0 ? std::array<EdgeLabel, 4>{in, out, loop, loop} : std::array<EdgeLabel, 4>{in, loop, loop, out};
  else
    x.slots = m.sign > 0 ? std::array<EdgeLabel, 4>{loop, loop, out, in} : std::array<EdgeLabel, 4>{loop, in, out, loop};
  w.xs.push_back(x);
  w.origin.erase(e);
  w.touched = {e};
  return w.finish();
}

MoveResult r1_remove(const Diagram& d, const Move& m) {
  if (m.edges.size() != 1) malformed("R1- needs the loop edge");
  EdgeLabel l = m.edges[0];
  if (l < 1 || l > d.edge_count()) malformed("R1- edge out of range");
  SlotRef t = d.tail(l), h = d.head(l);
  if (t.crossing != h.crossing || (std::abs(t.pos - h.pos) != 1 && std::abs(t.pos - h.pos) != 3))
    malformed("edge " + std::to_string(l) + " does not bound a kink");
  bool monogon = false;
  for (const auto& f : d.faces())
    if (f.size() == 1 && f[0].edge == l) monogon = true;
  if (!monogon) malformed("edge " + std::to_string(l) + " does not bound a monogon face");
  int c = t.crossing;
  EdgeLabel in = d.prev_edge(l), out = d.next_edge(l);
  if (in == l || out == l) malformed("kink crossing is not removable");
  Work w(d);
  w.touched = {l, in, out};
  w.origin.erase(l);
  w.remove_and_merge({c}, {{in, out}});
  return w.finish();
}

MoveResult r2_add(const Diagram& d, const Move& m) {
  if (m.edges.size() != 2) malformed("R2+ needs an under and an over edge");
  EdgeLabel e = m.edges[0], f = m.edges[1];
  if (e < 1 || f < 1 || e > d.edge_count() || f > d.edge_count()) malformed("R2+ edge out of range");
  if (e == f) malformed("R2+ needs two different edges");
  const FaceSide* es = nullptr;
  const FaceSide* fs = nullptr;
  auto faces = d.faces();
  for (const auto& face : faces) {
    for (const auto& s : face)
      if (s.edge == e && s.forward == m.under_forward) es = &s;
    if (!es) continue;
    for (const auto& s : face)
      if (s.edge == f) {
        fs = &s;
        break;
      }
    break;
  }
  if (!es) malformed("R2+ face not found");
  if (!fs) malformed("edges " + std::to_string(e) + " and " + std::to_string(f) + " do not share the chosen face");

  const int se = es->forward ? 1 : -1;
  const int sf = fs->forward ? 1 : -1;
  Work w(d);
  EdgeLabel ea = w.make(e), eb = w.make(e), ec = w.make(e);
  EdgeLabel fa = w.make(f), fb = w.make(f), fc = w.make(f);
  w.at(es->from) = ea;
  w.at(es->to) = ec;
  w.at(fs->from) = fa;
  w.at(fs->to) = fc;
  Crossing x1, x2;
  if (se > 0) {
    x1 = {{ea, fb, eb, fc}, -sf};
    x2 = {{eb, fb, ec, fa}, sf};
  } else {
    x1 = {{eb, fc, ea, fb}, sf};
    x2 = {{ec, fa, eb, fb}, -sf};
  }
  w.xs.push_back(x1);
  w.xs.push_back(x2);
  w.origin.erase(e);
  w.origin.erase(f);
  w.touched = {e, f};
  std::vector<EdgeLabel> raw_pieces{ea, eb, ec, fa, fb, fc};
  // Keep the raw labels to report the canonical ones after relabeling.
  std::vector<Crossing> xs_copy = w.xs;
  MoveResult r;
  LabelMap relabel;
  r.diagram = Diagram::from_crossings(std::move(xs_copy), w.free_loops, &relabel);
  r.origin.assign(static_cast<std::size_t>(r.diagram.edge_count()), {});
  for (const auto& [raw, canon] : relabel) r.origin[static_cast<std::size_t>(canon - 1)] = w.origin.at(raw);
  r.touched = w.touched;
  for (EdgeLabel p : raw_pieces) r.pieces.push_back(relabel.at(p));
  return r;
}

MoveResult r2_remove(const Diagram& d, const Move& m) {
  if (m.edges.size() != 2) malformed("R2- needs the two bigon edges");
  EdgeLabel eb = m.edges[0], fb = m.edges[1];
  if (eb < 1 || fb < 1 || eb > d.edge_count() || fb > d.edge_count() || eb == fb) malformed("R2- edges invalid");
  SlotRef et = d.tail(eb), eh = d.head(eb), ft = d.tail(fb), fh = d.head(fb);
  if (et.pos != 2 || eh.pos != 0) malformed("edge " + std::to_string(eb) + " is not under at both ends");
  auto is_over = [](int p) { return p == 1 || p == 3; };
  if (!is_over(ft.pos) || !is_over(fh.pos)) malformed("edge " + std::to_string(fb) + " is not over at both ends");
  std::set<int> ce{et.crossing, eh.crossing}, cf{ft.crossing, fh.crossing};
  if (ce.size() != 2 || ce != cf) malformed("edges do not span the same two crossings");
  bool bigon = false;
  for (const auto& face : d.faces())
    if (face.size() == 2 && ((face[0].edge == eb && face[1].edge == fb) || (face[0].edge == fb && face[1].edge == eb)))
      bigon = true;
  if (!bigon) malformed("edges do not bound a bigon face");
  EdgeLabel e_in = d.prev_edge(eb), e_out = d.next_edge(eb);
  EdgeLabel f_in = d.prev_edge(fb), f_out = d.next_edge(fb);
  Work w(d);
  w.touched = {eb, fb, e_in, e_out, f_in, f_out};
  w.origin.erase(eb);
  w.origin.erase(fb);
  w.remove_and_merge({et.crossing, eh.crossing}, {{e_in, e_out}, {f_in, f_out}});
  return w.finish();
}

MoveResult r3(const Diagram& d, const Move& m) {
  if (m.edges.size() != 3) malformed("R3 needs the three triangle sides");
  std::set<EdgeLabel> want(m.edges.begin(), m.edges.end());
  const Face* tri = nullptr;
  auto faces = d.faces();
  for (const auto& face : faces) {
    if (face.size() != 3) continue;
    std::set<EdgeLabel> got{face[0].edge, face[1].edge, face[2].edge};
    if (got == want) {
      tri = &face;
      break;
    }
  }
  if (!tri) malformed("edges do not bound a triangular face");
  std::set<int> cs;
  for (const auto& s : *tri) cs.insert(s.from.crossing);
  if (cs.size() != 3) malformed("triangle crossings are not distinct");

  auto is_over = [](int p) { return p == 1 || p == 3; };
  int top = 0, mid = 0, bottom = 0;
  for (EdgeLabel s : want) {
    bool ot = is_over(d.tail(s).pos), oh = is_over(d.head(s).pos);
    if (ot && oh) ++top;
    else if (!ot && !oh) ++bottom;
    else ++mid;
  }
  if (top != 1 || mid != 1 || bottom != 1) malformed("triangle strands are not stacked top/middle/bottom");

  Work w(d);
  // For each strand through a triangle crossing: is the crossing the tail or
  // the head end of that strand's side?
  for (int c : cs) {
    const Crossing& x = d.crossing(c);
    auto pieces = [&](EdgeLabel in, EdgeLabel out) -> std::pair<EdgeLabel, EdgeLabel> {
      bool si = want.count(in) > 0, so = want.count(out) > 0;
      if (si == so) malformed("triangle strand meets the face twice");
      if (so) return {out, d.next_edge(out)};
      return {d.prev_edge(in), in};
    };
    auto [ui, uo] = pieces(x.under_in(), x.under_out());
    auto [oi, oo] = pieces(x.over_in(), x.over_out());
    w.xs[static_cast<std::size_t>(c)] = Crossing::make(ui, uo, oi, oo, x.sign);
  }
  for (EdgeLabel s : want) {
    w.touched.insert(s);
    w.touched.insert(d.prev_edge(s));
    w.touched.insert(d.next_edge(s));
  }
  return w.finish();
}

}  // namespace

MoveResult apply_move(const Diagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::R1Add: return r1_add(d, m);
    case MoveKind::R1Remove: return r1_remove(d, m);
    case MoveKind::R2Add: return r2_add(d, m);
    case MoveKind::R2Remove: return r2_remove(d, m);
    case MoveKind::R3: return r3(d, m);
  }
  malformed("unknown kind");
}

Diagram replay_trace(const Diagram& source, const MoveTrace& trace) {
  Diagram d = source;
  for (const auto& m : trace.moves) d = apply_move(d, m).diagram;
  return d;
}

LocalityReport verify_local_equivalence(const Diagram& source, const Diagram& target, const MoveTrace& trace) {
  LocalityReport rep;
  for (auto a = trace.disks.begin(); a != trace.disks.end(); ++a)
    for (auto b = std::next(a); b != trace.disks.end(); ++b)
      for (EdgeLabel e : a->second)
        if (b->second.count(e)) {
          rep.problems.push_back("regions " + std::to_string(a->first) + " and " + std::to_string(b->first) +
                                 " share edge " + std::to_string(e));
          break;
        }

  std::vector<std::set<EdgeLabel>> prov(static_cast<std::size_t>(source.edge_count()));
  for (EdgeLabel e = 1; e <= source.edge_count(); ++e) prov[static_cast<std::size_t>(e - 1)] = {e};
  Diagram d = source;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    MoveResult r;
    try {
      r = apply_move(d, m);
    } catch (const Error& ex) {
      rep.problems.push_back("move " + std::to_string(i) + ": " + ex.what());
      return rep;
    }
    auto disk = trace.disks.find(m.disk);
    if (disk == trace.disks.end()) {
      rep.problems.push_back("move " + std::to_string(i) + " names unknown region " + std::to_string(m.disk));
    } else {
      for (EdgeLabel t : r.touched)
        for (EdgeLabel s : prov[static_cast<std::size_t>(t - 1)])
          if (!disk->second.count(s))
            rep.problems.push_back("move " + std::to_string(i) + " touches source edge " + std::to_string(s) +
                                   " outside region " + std::to_string(m.disk));
    }
    std::vector<std::set<EdgeLabel>> next(r.origin.size());
    for (std::size_t e = 0; e < r.origin.size(); ++e)
      for (EdgeLabel o : r.origin[e]) {
        const auto& p = prov[static_cast<std::size_t>(o - 1)];
        next[e].insert(p.begin(), p.end());
      }
    prov = std::move(next);
    d = std::move(r.diagram);
  }
  if (!isomorphic(d, target)) rep.problems.push_back("replayed diagram is not isomorphic to the target");
  rep.ok = rep.problems.empty();
  return rep;
}

Rewriter::Rewriter(Diagram source, std::optional<Coloring> coloring)
    : source_(std::move(source)), current_(source_), coloring_(std::move(coloring)) {
  if (coloring_ && !verify_coloring(source_, *coloring_)) throw PreconditionError("coloring is not valid on the diagram");
  provenance_.resize(static_cast<std::size_t>(source_.edge_count()));
  for (EdgeLabel e = 1; e <= source_.edge_count(); ++e) provenance_[static_cast<std::size_t>(e - 1)] = {e};
}

MoveResult Rewriter::apply(Move m) {
  MoveResult r = apply_move(current_, m);

  std::set<EdgeLabel> src_touched;
  for (EdgeLabel t : r.touched) {
    const auto& p = provenance(t);
    src_touched.insert(p.begin(), p.end());
  }
  int id = trace_.disks.empty() ? 0 : trace_.disks.rbegin()->first + 1;
  std::vector<int> hit;
  for (const auto& [k, region] : trace_.disks)
    for (EdgeLabel s : src_touched)
      if (region.count(s)) {
        hit.push_back(k);
        break;
      }
  if (!hit.empty()) id = hit.front();
  auto& region = trace_.disks[id];
  region.insert(src_touched.begin(), src_touched.end());
  for (int k : hit) {
    if (k == id) continue;
    region.insert(trace_.disks[k].begin(), trace_.disks[k].end());
    trace_.disks.erase(k);
    for (auto& prev : trace_.moves)
      if (prev.disk == k) prev.disk = id;
  }
  m.disk = id;

  std::vector<std::set<EdgeLabel>> next(r.origin.size());
  for (std::size_t e = 0; e < r.origin.size(); ++e)
    for (EdgeLabel o : r.origin[e]) {
      const auto& p = provenance(o);
      next[e].insert(p.begin(), p.end());
    }

  if (coloring_) {
    std::set<EdgeLabel> recolored;
    if (m.kind == MoveKind::R3) recolored.insert(m.edges.begin(), m.edges.end());
    std::map<EdgeLabel, Integer> known;
    for (std::size_t e = 0; e < r.origin.size(); ++e) {
      const auto& o = r.origin[e];
      if (o.empty() || recolored.count(o.front())) continue;
      if (m.kind == MoveKind::R2Add && static_cast<EdgeLabel>(e + 1) == r.pieces[1]) continue;
      known[static_cast<EdgeLabel>(e + 1)] = (*coloring_)[o.front()];
    }
    auto c = complete_coloring(r.diagram, known);
    if (!c) throw InternalError(std::string("coloring does not extend across ") + to_string(m.kind));
    coloring_ = std::move(c);
  }

  provenance_ = std::move(next);
  current_ = r.diagram;
  trace_.moves.push_back(m);
  return r;
}

std::optional<Coloring> complete_coloring(const Diagram& d, const std::map<EdgeLabel, Integer>& known) {
  std::vector<std::optional<Integer>> v(static_cast<std::size_t>(d.edge_count()));
  for (const auto& [e, x] : known) {
    if (e < 1 || e > d.edge_count()) return std::nullopt;
    v[static_cast<std::size_t>(e - 1)] = x;
  }
  auto slot = [&](EdgeLabel e) -> std::optional<Integer>& { return v[static_cast<std::size_t>(e - 1)]; };
  auto set = [&](EdgeLabel e, const Integer& x, bool& changed) {
    auto& s = slot(e);
    if (!s) {
      s = x;
      changed = true;
      return true;
    }
    return *s == x;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& x : d.crossings()) {
      auto& oi = slot(x.over_in());
      auto& oo = slot(x.over_out());
      if (oi && !set(x.over_out(), *oi, changed)) return std::nullopt;
      if (oo && !set(x.over_in(), *oo, changed)) return std::nullopt;
      const auto& o = slot(x.over_in());
      if (!o) continue;
      const auto& ui = slot(x.under_in());
      const auto& uo = slot(x.under_out());
      if (ui && !set(x.under_out(), 2 * *o - *ui, changed)) return std::nullopt;
      if (uo && !set(x.under_in(), 2 * *o - *uo, changed)) return std::nullopt;
    }
  }
  if (std::all_of(v.begin(), v.end(), [](const auto& x) { return x.has_value(); })) {
    std::vector<Integer> vals;
    for (auto& x : v) vals.push_back(*x);
    Coloring c(std::move(vals));
    if (!verify_coloring(d, c)) return std::nullopt;
    return c;
  }
  std::map<EdgeLabel, Integer> pins;
  for (EdgeLabel e = 1; e <= d.edge_count(); ++e)
    if (slot(e)) pins[e] = *slot(e);
  auto sol = solve_partial(d, pins);
  if (!sol || !sol->unique) return std::nullopt;
  return sol->coloring;
}

}  // namespace zcolor
