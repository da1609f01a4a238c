#include "zcolor/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "slide.hpp"
#include "zcolor/coloring_analysis.hpp"
#include "zcolor/errors.hpp"

namespace zcolor {

int DiffPath::kind() const {
  return 1 + (start_role == PathRole::Under ? 2 : 0) + (end_role == PathRole::Under ? 1 : 0);
}

namespace {

PathRole role_at(const Crossing& x, EdgeLabel e) {
  for (int p = 0; p < 4; ++p)
    if (x.slots[static_cast<std::size_t>(p)] == e) return p % 2 == 1 ? PathRole::Over : PathRole::Under;
  throw InternalError("edge not at crossing");
}

std::optional<DiffPath> shortest_path(const Diagram& d, const Coloring& c, const std::vector<Integer>& diffs,
                                      const Integer& dmax) {
  const auto n = static_cast<std::size_t>(d.edge_count());
  std::vector<EdgeLabel> parent(n + 1, 0);
  std::vector<int> from(n + 1, -1), source(n + 1, -1);
  std::vector<bool> seen(n + 1, false);
  std::vector<EdgeLabel> level;
  for (int s = 0; s < d.crossing_count(); ++s) {
    if (diffs[static_cast<std::size_t>(s)] != dmax) continue;
    for (EdgeLabel e : d.crossing(s).slots) {
      if (seen[static_cast<std::size_t>(e)]) continue;
      seen[static_cast<std::size_t>(e)] = true;
      from[static_cast<std::size_t>(e)] = s;
      source[static_cast<std::size_t>(e)] = s;
      level.push_back(e);
    }
  }
  while (!level.empty()) {
    std::optional<std::tuple<int, int, EdgeLabel>> best;  // end, start, last edge
    std::vector<EdgeLabel> next;
    for (EdgeLabel e : level) {
      const int f = from[static_cast<std::size_t>(e)];
      const int a = d.tail(e).crossing, b = d.head(e).crossing;
      if (a == b) continue;
      const int other = a == f ? b : a;
      const Integer& x = diffs[static_cast<std::size_t>(other)];
      if (x > 0 && x < dmax) {
        std::tuple<int, int, EdgeLabel> cand{other, source[static_cast<std::size_t>(e)], e};
        if (!best || cand < *best) best = cand;
      } else if (x == 0) {
        for (EdgeLabel g : d.crossing(other).slots) {
          if (seen[static_cast<std::size_t>(g)]) continue;
          seen[static_cast<std::size_t>(g)] = true;
          parent[static_cast<std::size_t>(g)] = e;
          from[static_cast<std::size_t>(g)] = other;
          source[static_cast<std::size_t>(g)] = source[static_cast<std::size_t>(e)];
          next.push_back(g);
        }
      }
    }
    if (best) {
      auto [end, start, last] = *best;
      DiffPath p;
      p.start = start;
      p.end = end;
      for (EdgeLabel e = last; e != 0; e = parent[static_cast<std::size_t>(e)]) p.via.push_back(e);
      std::reverse(p.via.begin(), p.via.end());
      p.color = c[p.via.front()];
      p.max_diff = dmax;
      p.diff = diffs[static_cast<std::size_t>(end)];
      p.start_role = role_at(d.crossing(start), p.via.front());
      p.end_role = role_at(d.crossing(end), p.via.back());
      return p;
    }
    level = std::move(next);
  }
  return std::nullopt;
}

std::size_t count_of(const std::vector<Integer>& diffs, const Integer& x) {
  return static_cast<std::size_t>(std::count(diffs.begin(), diffs.end(), x));
}

struct Step {
  EdgeLabel edge;  // label in the diagram the elimination started from
  bool under;
};

struct Route {
  EdgeLabel finger;
  bool finger_forward;
  std::vector<Step> steps;
  EdgeLabel target;
};

// Face walks of the finger: cross only edges of the path color, starting next
// to an edge of color p +- d and ending in a face beside an under edge of X.
std::vector<Route> finger_routes(const Diagram& d, const Coloring& c, const DiffPath& path) {
  const auto faces = d.faces();
  std::map<std::pair<EdgeLabel, bool>, int> face_of;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (const auto& s : faces[static_cast<std::size_t>(f)]) face_of[{s.edge, s.forward}] = f;

  struct Node {
    int prev = -1;
    Step step{0, false};
    EdgeLabel finger = 0;
    bool finger_forward = true;
    bool seen = false;
  };
  const std::size_t nf = faces.size();
  std::vector<Node> node(2 * nf);
  std::deque<std::size_t> queue;
  const Crossing& y = d.crossing(path.end);
  std::set<EdgeLabel> fingers;
  for (EdgeLabel e : y.slots)
    if (c[e] == path.color + path.diff || c[e] == path.color - path.diff) fingers.insert(e);
  const Integer high = path.color + path.diff;
  for (EdgeLabel w : fingers)
    for (bool fw : {true, false}) {
      std::size_t id = 2 * static_cast<std::size_t>(face_of.at({w, fw})) + (c[w] == high ? 1 : 0);
      if (node[id].seen) continue;
      node[id] = {-1, {0, false}, w, fw, true};
      queue.push_back(id);
    }
  // Node parity records the tip color: 1 for p + d. Passing under flips it.
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    for (const auto& s : faces[id / 2]) {
      if (c[s.edge] != path.color) continue;
      std::size_t across = static_cast<std::size_t>(face_of.at({s.edge, !s.forward}));
      for (bool under : {false, true}) {
        std::size_t nid = 2 * across + ((id % 2) ^ (under ? 1u : 0u));
        if (node[nid].seen) continue;
        node[nid] = {static_cast<int>(id), {s.edge, under}, node[id].finger, node[id].finger_forward, true};
        queue.push_back(nid);
      }
    }
  }

  std::vector<Route> routes;
  const Crossing& x = d.crossing(path.start);
  for (EdgeLabel t : {x.under_in(), x.under_out()})
    for (bool fw : {true, false})
      for (std::size_t high_tip : {0u, 1u}) {
        std::size_t id = 2 * static_cast<std::size_t>(face_of.at({t, fw})) + high_tip;
        if (!node[id].seen) continue;
        Route r{node[id].finger, node[id].finger_forward, {}, t};
        for (int k = static_cast<int>(id); node[static_cast<std::size_t>(k)].prev >= 0; k = node[static_cast<std::size_t>(k)].prev)
          r.steps.push_back(node[static_cast<std::size_t>(k)].step);
        std::reverse(r.steps.begin(), r.steps.end());
        routes.push_back(std::move(r));
      }
  std::stable_sort(routes.begin(), routes.end(),
                   [](const Route& a, const Route& b) { return a.steps.size() < b.steps.size(); });
  return routes;
}

// Runs the finger along `route`, crosses over the target edge next to X and
// returns the rewriter plus the under edge between the finger and X.
std::optional<std::pair<Rewriter, EdgeLabel>> run_finger(const Rewriter& start, const Route& route, const Crossing& x) {
  Rewriter r = start;
  std::vector<std::vector<EdgeLabel>> local(static_cast<std::size_t>(r.diagram().edge_count()));
  for (EdgeLabel e = 1; e <= r.diagram().edge_count(); ++e) local[static_cast<std::size_t>(e - 1)] = {e};
  EdgeLabel tip = route.finger;
  bool tip_forward = route.finger_forward;

  auto find_x = [&]() {
    const Diagram& d = r.diagram();
    for (int i = 0; i < d.crossing_count(); ++i) {
      const Crossing& y = d.crossing(i);
      bool same = y.sign == x.sign;
      for (std::size_t k = 0; k < 4 && same; ++k)
        same = local[static_cast<std::size_t>(y.slots[k] - 1)] == std::vector<EdgeLabel>{x.slots[k]};
      if (same) return i;
    }
    return -1;
  };

  auto cross = [&](EdgeLabel g, bool under, int near) -> std::optional<MoveResult> {
    const Diagram& d = r.diagram();
    for (const auto& face : d.faces()) {
      bool here = std::any_of(face.begin(), face.end(),
                              [&](const FaceSide& s) { return s.edge == tip && s.forward == tip_forward; });
      if (!here) continue;
      for (const auto& s : face) {
        if (local[static_cast<std::size_t>(s.edge - 1)] != std::vector<EdgeLabel>{g}) continue;
        if (near >= 0 && d.head(s.edge).crossing != near && d.tail(s.edge).crossing != near) continue;
        Move m = under ? Move{MoveKind::R2Add, {tip, s.edge}, tip_forward}
                       : Move{MoveKind::R2Add, {s.edge, tip}, s.forward};
        MoveResult res;
        try {
          res = r.apply(m);
        } catch (const Error&) {
          return std::nullopt;
        }
        std::vector<std::vector<EdgeLabel>> next(res.origin.size());
        for (std::size_t e = 0; e < res.origin.size(); ++e)
          for (EdgeLabel o : res.origin[e]) {
            const auto& l = local[static_cast<std::size_t>(o - 1)];
            next[e].insert(next[e].end(), l.begin(), l.end());
          }
        local = std::move(next);
        EdgeLabel eb = res.pieces[1], fb = res.pieces[4];
        tip = under ? eb : fb;
        for (const auto& f : r.diagram().faces()) {
          bool bigon = f.size() == 2 && ((f[0].edge == eb && f[1].edge == fb) || (f[0].edge == fb && f[1].edge == eb));
          if (bigon) continue;
          for (const auto& side : f)
            if (side.edge == tip) tip_forward = side.forward;
        }
        return res;
      }
      return std::nullopt;
    }
    return std::nullopt;
  };

  for (const auto& s : route.steps)
    if (!cross(s.edge, s.under, -1)) return std::nullopt;
  const int xi = find_x();
  if (xi < 0) return std::nullopt;
  auto last = cross(route.target, false, xi);
  if (!last) return std::nullopt;
  const Diagram& d = r.diagram();
  const int xn = find_x();
  const EdgeLabel eb = last->pieces[1];
  const std::set<int> bigon{d.tail(eb).crossing, d.head(eb).crossing};
  for (EdgeLabel p : {last->pieces[0], last->pieces[2]}) {
    const int a = d.tail(p).crossing, b = d.head(p).crossing;
    bool between = (a == xn && bigon.count(b)) || (b == xn && bigon.count(a));
    if (between && detail::under_at_both_ends(d, p)) return std::pair{std::move(r), p};
  }
  return std::nullopt;
}

bool eliminate_one(Rewriter& rw, const DiffPath& path, const std::set<Integer>& allowed) {
  const Diagram& d = rw.diagram();
  const Coloring& c = *rw.coloring();
  const auto before = count_of(diff_spectrum(d, c).diffs, path.max_diff);
  const Crossing& x = d.crossing(path.start);
  for (const Route& route : finger_routes(d, c, path)) {
    auto placed = run_finger(rw, route, x);
    if (!placed) continue;
    for (auto& cand : detail::slides_at(placed->first, placed->second)) {
      auto diffs = diff_spectrum(cand.diagram(), *cand.coloring()).diffs;
      if (count_of(diffs, path.max_diff) >= before) continue;
      bool ok = std::all_of(diffs.begin(), diffs.end(),
                            [&](const Integer& v) { return v == path.max_diff || allowed.count(v) > 0; });
      if (!ok) continue;
      rw = std::move(cand);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<DiffPath> find_diff_path(const Diagram& d, const Coloring& c) {
  if (!verify_coloring(d, c)) throw PreconditionError("coloring is not valid on the diagram");
  auto spec = diff_spectrum(d, c);
  std::size_t positive = 0;
  for (const auto& [v, n] : spec.histogram)
    if (v > 0 && n > 0) ++positive;
  if (positive < 2) throw PreconditionError("coloring is simple: no diff below the maximal one");
  return shortest_path(d, c, spec.diffs, spec.max_diff);
}

int eliminate_max_diff(Rewriter& rw, const DiffPath& path) {
  if (!rw.coloring()) throw PreconditionError("elimination needs a colored diagram");
  const Integer dmax = path.max_diff;
  auto spec = diff_spectrum(rw.diagram(), *rw.coloring());
  if (path.start < 0 || path.start >= rw.diagram().crossing_count() || path.end < 0 ||
      path.end >= rw.diagram().crossing_count() || spec.diffs[static_cast<std::size_t>(path.start)] != dmax ||
      spec.max_diff != dmax || spec.diffs[static_cast<std::size_t>(path.end)] != path.diff)
    throw PreconditionError("diff path does not match the colored diagram");

  std::set<Integer> allowed{0};
  for (const auto& [v, n] : spec.histogram)
    if (v < dmax && n > 0) allowed.insert(v);
  DiffPath cur = path;
  int done = 0;
  for (;;) {
    Integer a = dmax - cur.diff, b = dmax - 2 * cur.diff;
    allowed.insert(abs(a));
    allowed.insert(abs(b));
    if (!eliminate_one(rw, cur, allowed))
      throw NoApplicableMove("no finger move removes the " + dmax.get_str() + "-diff crossing " +
                             std::to_string(cur.start) + " along a path of diff " + cur.diff.get_str());
    ++done;
    auto now = diff_spectrum(rw.diagram(), *rw.coloring());
    if (count_of(now.diffs, dmax) == 0) return done;
    auto next = shortest_path(rw.diagram(), *rw.coloring(), now.diffs, dmax);
    if (!next)
      throw NoApplicableMove("no diff path from the remaining " + dmax.get_str() + "-diff crossings");
    cur = *next;
  }
}

ColoredDiagram eliminate_max_diff(const Diagram& d, const Coloring& c, const DiffPath& path) {
  if (!verify_coloring(d, c)) throw PreconditionError("coloring is not valid on the diagram");
  Rewriter rw(d, c);
  eliminate_max_diff(rw, path);
  return {rw.diagram(), *rw.coloring(), rw.trace()};
}

SimplifyResult to_simple_coloring(const Diagram& d, const Coloring& c) {
  if (!verify_coloring(d, c)) throw PreconditionError("coloring is not valid on the diagram");
  if (c.is_trivial()) throw PreconditionError("coloring is trivial");
  SimplifyResult out;
  Rewriter rw(d, c);
  auto spec = diff_spectrum(d, c);
  out.iteration_bound = static_cast<int>(spec.max_diff.get_si());
  while (!is_simple(rw.diagram(), *rw.coloring()).simple) {
    auto path = find_diff_path(rw.diagram(), *rw.coloring());
    if (!path) throw NoApplicableMove("no diff path exists although the coloring is not simple");
    out.paths.push_back(*path);
    out.eliminations += eliminate_max_diff(rw, *path);
    if (++out.outer_iterations > out.iteration_bound) throw InternalError("rewriting exceeded its iteration bound");
  }
  out.result = {rw.diagram(), *rw.coloring(), rw.trace()};
  return out;
}

}  // namespace zcolor
