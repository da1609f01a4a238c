#include "zcolor/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "zcolor/errors.hpp"

namespace zcolor {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

bool is_entering(const Crossing& c, int pos) { return pos == 0 || pos == c.over_in_pos(); }

using Occurrences = std::map<EdgeLabel, std::vector<SlotRef>>;

Occurrences occurrences(const std::vector<Crossing>& crossings) {
  Occurrences occ;
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
    for (int p = 0; p < 4; ++p) occ[crossings[static_cast<std::size_t>(i)].slots[static_cast<std::size_t>(p)]].push_back({i, p});
  return occ;
}

SlotRef other_end(const Occurrences& occ, EdgeLabel e, SlotRef s) {
  const auto& v = occ.at(e);
  return v[0] == s ? v[1] : v[0];
}

// Walks every face of a diagram whose labels each occur exactly twice.
std::vector<Face> walk_faces(const std::vector<Crossing>& crossings, const Occurrences& occ,
                             const std::map<EdgeLabel, SlotRef>* tails) {
  std::vector<Face> faces;
  std::set<SlotRef> seen;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    for (int p = 0; p < 4; ++p) {
      SlotRef start{c, p};
      if (seen.count(start)) continue;
      Face face;
      SlotRef from = start;
      do {
        seen.insert(from);
        EdgeLabel e = crossings[static_cast<std::size_t>(from.crossing)].slots[static_cast<std::size_t>(from.pos)];
        SlotRef to = other_end(occ, e, from);
        bool fwd = tails ? tails->at(e) == from : true;
        face.push_back({e, fwd, from, to});
        from = {to.crossing, (to.pos + 3) % 4};
      } while (from != start);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace

Crossing Crossing::make(EdgeLabel under_in, EdgeLabel under_out, EdgeLabel over_in, EdgeLabel over_out,
                        int sign) {
  Crossing c;
  c.sign = sign;
  if (sign > 0)
    c.slots = {under_in, over_out, under_out, over_in};
  else
    c.slots = {under_in, over_in, under_out, over_out};
  return c;
}

std::vector<std::string> check_crossings(const std::vector<Crossing>& crossings) {
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    if (crossings[i].sign != 1 && crossings[i].sign != -1)
      problems.push_back("crossing " + std::to_string(i + 1) + " has no valid sign");
    for (EdgeLabel e : crossings[i].slots)
      if (e <= 0) problems.push_back("crossing " + std::to_string(i + 1) + " has non-positive label " + std::to_string(e));
  }
  if (!problems.empty()) return problems;

  Occurrences occ = occurrences(crossings);
  bool multiplicity_ok = true;
  for (const auto& [e, slots] : occ) {
    if (slots.size() != 2) {
      problems.push_back("label " + std::to_string(e) + " occurs " + std::to_string(slots.size()) +
                         " times (expected 2)");
      multiplicity_ok = false;
    }
  }
  if (!multiplicity_ok) return problems;

  std::map<EdgeLabel, SlotRef> tails;
  bool orientation_ok = true;
  for (const auto& [e, slots] : occ) {
    int entering = 0;
    for (SlotRef s : slots)
      if (is_entering(crossings[static_cast<std::size_t>(s.crossing)], s.pos)) ++entering;
      else tails[e] = s;
    if (entering != 1) {
      problems.push_back("label " + std::to_string(e) + " is entered " + std::to_string(entering) +
                         " times (orientation inconsistent)");
      orientation_ok = false;
    }
  }
  if (!orientation_ok) return problems;

  // Planarity: each connected piece must satisfy V - E + F = 2.
  UnionFind pieces(crossings.size());
  for (const auto& [e, slots] : occ) pieces.unite(slots[0].crossing, slots[1].crossing);
  std::set<int> roots;
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) roots.insert(pieces.find(i));
  std::size_t faces = walk_faces(crossings, occ, &tails).size();
  std::size_t expected = crossings.size() + 2 * roots.size();
  if (faces != expected)
    problems.push_back("diagram is not planar: " + std::to_string(faces) + " faces, expected " +
                       std::to_string(expected));
  return problems;
}

Diagram Diagram::from_crossings(std::vector<Crossing> crossings, int free_loops, LabelMap* relabel) {
  if (free_loops < 0) throw DiagramError("negative free loop count");
  auto problems = check_crossings(crossings);
  if (!problems.empty()) {
    std::ostringstream os;
    os << problems.front();
    for (std::size_t i = 1; i < problems.size(); ++i) os << "; " << problems[i];
    throw DiagramError(os.str());
  }

  // Raw traversal: from the head slot of e, the strand continues out of the
  // opposite slot.
  Occurrences occ = occurrences(crossings);
  std::map<EdgeLabel, SlotRef> raw_head;
  for (const auto& [e, slots] : occ)
    for (SlotRef s : slots)
      if (is_entering(crossings[static_cast<std::size_t>(s.crossing)], s.pos)) raw_head[e] = s;

  LabelMap canon;
  EdgeLabel next_label = 1;
  for (const auto& [start, unused] : occ) {
    if (canon.count(start)) continue;
    EdgeLabel e = start;
    do {
      canon[e] = next_label++;
      SlotRef h = raw_head.at(e);
      e = crossings[static_cast<std::size_t>(h.crossing)].slots[static_cast<std::size_t>((h.pos + 2) % 4)];
    } while (e != start);
  }

  for (auto& c : crossings)
    for (auto& e : c.slots) e = canon.at(e);
  std::sort(crossings.begin(), crossings.end());

  Diagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  const int n = d.crossing_count();
  d.edges_.assign(static_cast<std::size_t>(2 * n), EdgeInfo{});
  for (int i = 0; i < n; ++i) {
    const Crossing& c = d.crossings_[static_cast<std::size_t>(i)];
    for (int p = 0; p < 4; ++p) {
      EdgeInfo& info = d.edges_[static_cast<std::size_t>(c.slots[static_cast<std::size_t>(p)] - 1)];
      if (is_entering(c, p))
        info.head = {i, p};
      else
        info.tail = {i, p};
    }
  }

  for (EdgeLabel e = 1; e <= 2 * n; ++e) {
    if (d.edges_[static_cast<std::size_t>(e - 1)].component >= 0) continue;
    std::vector<EdgeLabel> comp;
    int idx = static_cast<int>(d.components_.size());
    EdgeLabel cur = e;
    do {
      comp.push_back(cur);
      d.edges_[static_cast<std::size_t>(cur - 1)].component = idx;
      cur = d.next_edge(cur);
    } while (cur != e);
    d.components_.push_back(std::move(comp));
  }

  UnionFind arcs(static_cast<std::size_t>(2 * n));
  UnionFind pieces(static_cast<std::size_t>(std::max(n, 1)));
  for (int i = 0; i < n; ++i) {
    const Crossing& c = d.crossings_[static_cast<std::size_t>(i)];
    arcs.unite(c.slots[1] - 1, c.slots[3] - 1);
  }
  for (EdgeLabel e = 1; e <= 2 * n; ++e) pieces.unite(d.head(e).crossing, d.tail(e).crossing);

  std::map<int, int> arc_ids;
  for (EdgeLabel e = 1; e <= 2 * n; ++e) {
    int root = arcs.find(e - 1);
    auto [it, inserted] = arc_ids.emplace(root, static_cast<int>(d.arcs_.size()));
    if (inserted) d.arcs_.emplace_back();
    d.arcs_[static_cast<std::size_t>(it->second)].push_back(e);
    d.edges_[static_cast<std::size_t>(e - 1)].arc = it->second;
  }
  std::map<int, int> piece_ids;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = piece_ids.emplace(pieces.find(i), static_cast<int>(piece_ids.size()));
    d.crossing_piece_.push_back(it->second);
  }
  d.piece_count_ = static_cast<int>(piece_ids.size());

  if (relabel) *relabel = std::move(canon);
  return d;
}

const Diagram::EdgeInfo& Diagram::edge_info(EdgeLabel e) const {
  if (e < 1 || e > edge_count()) throw PreconditionError("edge label " + std::to_string(e) + " out of range");
  return edges_[static_cast<std::size_t>(e - 1)];
}

EdgeLabel Diagram::next_edge(EdgeLabel e) const {
  SlotRef h = head(e);
  return edge_at({h.crossing, (h.pos + 2) % 4});
}

EdgeLabel Diagram::prev_edge(EdgeLabel e) const {
  SlotRef t = tail(e);
  return edge_at({t.crossing, (t.pos + 2) % 4});
}

std::vector<Face> Diagram::faces() const {
  Occurrences occ = occurrences(crossings_);
  std::map<EdgeLabel, SlotRef> tails;
  for (EdgeLabel e = 1; e <= edge_count(); ++e) tails[e] = tail(e);
  return walk_faces(crossings_, occ, &tails);
}

std::vector<std::string> Diagram::validate() const {
  std::vector<std::string> problems = check_crossings(crossings_);
  std::vector<int> visits(static_cast<std::size_t>(edge_count()), 0);
  for (const auto& comp : components_)
    for (EdgeLabel e : comp) ++visits[static_cast<std::size_t>(e - 1)];
  for (EdgeLabel e = 1; e <= edge_count(); ++e)
    if (visits[static_cast<std::size_t>(e - 1)] != 1)
      problems.push_back("traversal visits label " + std::to_string(e) + " " +
                         std::to_string(visits[static_cast<std::size_t>(e - 1)]) + " times");
  for (const auto& comp : components_)
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (next_edge(comp[i]) != comp[(i + 1) % comp.size()])
        problems.push_back("component traversal is not closed at label " + std::to_string(comp[i]));
  return problems;
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

int Diagram::linking_number(int i, int j) const {
  const int comps = static_cast<int>(components_.size());
  if (i < 0 || j < 0 || i >= comps || j >= comps)
    throw PreconditionError("component index out of range (diagram has " + std::to_string(comps) +
                            " crossing components)");
  if (i == j) throw PreconditionError("linking number needs two distinct components");
  int twice = 0;
  for (const auto& c : crossings_) {
    int under = component_of(c.under_in());
    int over = component_of(c.over_in());
    if ((under == i && over == j) || (under == j && over == i)) twice += c.sign;
  }
  return twice / 2;
}

namespace {

// Extends a partial crossing map by following shared edges. Returns false on
// any inconsistency.
bool propagate(const Diagram& a, const Diagram& b, std::vector<int>& cmap, std::vector<int>& used,
               int seed_a, int seed_b) {
  std::vector<std::pair<int, int>> stack{{seed_a, seed_b}};
  while (!stack.empty()) {
    auto [ca, cb] = stack.back();
    stack.pop_back();
    if (cmap[static_cast<std::size_t>(ca)] >= 0) {
      if (cmap[static_cast<std::size_t>(ca)] != cb) return false;
      continue;
    }
    if (used[static_cast<std::size_t>(cb)] >= 0) return false;
    const Crossing& xa = a.crossing(ca);
    const Crossing& xb = b.crossing(cb);
    if (xa.sign != xb.sign) return false;
    cmap[static_cast<std::size_t>(ca)] = cb;
    used[static_cast<std::size_t>(cb)] = ca;
    for (int p = 0; p < 4; ++p) {
      EdgeLabel ea = xa.slots[static_cast<std::size_t>(p)];
      EdgeLabel eb = xb.slots[static_cast<std::size_t>(p)];
      SlotRef sa = a.head(ea) == SlotRef{ca, p} ? a.tail(ea) : a.head(ea);
      SlotRef sb = b.head(eb) == SlotRef{cb, p} ? b.tail(eb) : b.head(eb);
      if (sa.pos != sb.pos) return false;
      stack.push_back({sa.crossing, sb.crossing});
    }
  }
  return true;
}

bool match_from(const Diagram& a, const Diagram& b, std::vector<int>& cmap, std::vector<int>& used) {
  int next = -1;
  for (int i = 0; i < a.crossing_count(); ++i)
    if (cmap[static_cast<std::size_t>(i)] < 0) {
      next = i;
      break;
    }
  if (next < 0) return true;
  for (int j = 0; j < b.crossing_count(); ++j) {
    if (used[static_cast<std::size_t>(j)] >= 0) continue;
    auto cmap2 = cmap;
    auto used2 = used;
    if (propagate(a, b, cmap2, used2, next, j) && match_from(a, b, cmap2, used2)) {
      cmap = std::move(cmap2);
      used = std::move(used2);
      return true;
    }
  }
  return false;
}

}  // namespace

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.free_loops() != b.free_loops()) return false;
  if (a == b) return true;
  std::vector<int> cmap(static_cast<std::size_t>(a.crossing_count()), -1);
  std::vector<int> used(static_cast<std::size_t>(b.crossing_count()), -1);
  return match_from(a, b, cmap, used);
}

}  // namespace zcolor
