#include "zcolor/parallel_coloring.hpp"

#include <algorithm>
#include <string>

#include "slide.hpp"
#include "zcolor/coloring_analysis.hpp"
#include "zcolor/errors.hpp"

namespace zcolor {

BoundaryPattern BoundaryPattern::standard(int k) {
  if (k < 2 || k % 2 != 0) throw PreconditionError("boundary pattern needs an even strand count");
  BoundaryPattern p;
  p.k = k;
  p.colors.assign(static_cast<std::size_t>(k), 0);
  p.colors[static_cast<std::size_t>(k / 2 - 1)] = 1;
  p.colors[static_cast<std::size_t>(k / 2)] = 1;
  return p;
}

RegionColoring propagate_region(const std::vector<Integer>& over, const std::vector<Integer>& under_in) {
  RegionColoring r;
  r.over_colors = over;
  r.under_in = under_in;
  for (const Integer& u : under_in) {
    std::vector<Integer> row;
    Integer cur = u;
    for (const Integer& o : over) {
      cur = 2 * o - cur;
      row.push_back(cur);
    }
    r.under_out.push_back(cur);
    r.interior.push_back(std::move(row));
  }
  return r;
}

Coloring color_even_parallel(const CabledDiagram& c) {
  for (int n : c.spec.multiplicities)
    if (n < 4 || n % 2 != 0)
      throw PreconditionError("even parallel coloring needs multiplicities even and >= 4, got " + std::to_string(n));
  if (!c.twists.empty()) throw PreconditionError("even parallel coloring does not handle inserted twists");
  if (c.base.is_split()) throw PreconditionError("even parallel coloring needs a non-split base diagram");

  std::vector<std::optional<Integer>> val(static_cast<std::size_t>(c.diagram.edge_count()));
  auto put = [&](EdgeLabel e, const Integer& x) {
    auto& v = val[static_cast<std::size_t>(e - 1)];
    if (v && *v != x) throw InternalError("propagation reached edge " + std::to_string(e) + " with two colors");
    v = x;
  };
  for (EdgeLabel e = 1; e <= c.base.edge_count(); ++e) {
    auto p = BoundaryPattern::standard(c.multiplicity_of_edge(e));
    const auto& copies = c.segments[static_cast<std::size_t>(e - 1)];
    for (std::size_t k = 0; k < copies.size(); ++k)
      for (EdgeLabel s : copies[k]) put(s, p.colors[k]);
  }
  for (const auto& g : c.grids) {
    const Crossing& x = c.base.crossing(g.base_crossing);
    auto po = BoundaryPattern::standard(c.multiplicity_of_edge(x.over_in()));
    auto pu = BoundaryPattern::standard(c.multiplicity_of_edge(x.under_in()));
    const int no = po.k;
    std::vector<Integer> order;
    for (int t = 1; t <= no; ++t) order.push_back(po.colors[static_cast<std::size_t>(g.sign > 0 ? no - t : t - 1)]);
    RegionColoring r = propagate_region(order, pu.colors);
    for (std::size_t k = 0; k < g.under.size(); ++k) {
      if (r.under_out[k] != pu.colors[k]) throw InternalError("under strand leaves a grid with a changed color");
      for (std::size_t t = 1; t < g.under[k].size(); ++t) put(g.under[k][t], r.interior[k][t - 1]);
    }
    for (std::size_t l = 0; l < g.over.size(); ++l)
      for (EdgeLabel e : g.over[l]) put(e, po.colors[l]);
  }
  std::vector<Integer> out;
  for (EdgeLabel e = 1; e <= c.diagram.edge_count(); ++e) {
    if (!val[static_cast<std::size_t>(e - 1)]) throw InternalError("edge " + std::to_string(e) + " left uncolored");
    out.push_back(*val[static_cast<std::size_t>(e - 1)]);
  }
  Coloring col(std::move(out));
  if (!verify_coloring(c.diagram, col)) throw InternalError("even parallel coloring failed verification");
  return col;
}

namespace {

std::size_t count_color(const Coloring& c, const Integer& x) {
  return static_cast<std::size_t>(std::count(c.values().begin(), c.values().end(), x));
}

bool within(const Coloring& c, const std::set<Integer>& allowed) {
  return std::all_of(c.values().begin(), c.values().end(), [&](const Integer& v) { return allowed.count(v) > 0; });
}

// Under-at-both-ends edges on the same strand within two steps of an edge
// colored `target`.
std::vector<EdgeLabel> near_target(const Diagram& d, const Coloring& c, const Integer& target, int reach) {
  std::set<EdgeLabel> out;
  for (EdgeLabel e = 1; e <= d.edge_count(); ++e) {
    if (c[e] != target) continue;
    EdgeLabel f = e, b = e;
    out.insert(e);
    for (int i = 0; i < reach; ++i) {
      f = d.next_edge(f);
      b = d.prev_edge(b);
      out.insert(f);
      out.insert(b);
    }
  }
  std::vector<EdgeLabel> v;
  for (EdgeLabel e : out)
    if (detail::under_at_both_ends(d, e)) v.push_back(e);
  return v;
}

}  // namespace

void delete_color_moves(Rewriter& rw, const Integer& target) {
  if (!rw.coloring()) throw PreconditionError("color deletion needs a colored diagram");
  const std::set<Integer> allowed = palette(*rw.coloring());
  if (!allowed.count(target)) throw PreconditionError("color " + target.get_str() + " is not in the palette");
  std::set<Integer> keep = allowed;
  keep.erase(target);

  while (count_color(*rw.coloring(), target) > 0) {
    const std::size_t before = count_color(*rw.coloring(), target);
    auto better = [&](const Rewriter& r) {
      return within(*r.coloring(), allowed) && count_color(*r.coloring(), target) < before;
    };
    std::optional<Rewriter> found;
    std::vector<Rewriter> level1;
    for (EdgeLabel s : near_target(rw.diagram(), *rw.coloring(), target, 2)) {
      for (auto& r : detail::slides_at(rw, s)) {
        if (!within(*r.coloring(), allowed)) continue;
        if (better(r)) {
          found = std::move(r);
          break;
        }
        level1.push_back(std::move(r));
      }
      if (found) break;
    }
    for (std::size_t i = 0; !found && i < level1.size(); ++i) {
      const Rewriter& r1 = level1[i];
      for (EdgeLabel s : near_target(r1.diagram(), *r1.coloring(), target, 0)) {
        for (auto& r : detail::slides_at(r1, s))
          if (better(r)) {
            found = std::move(r);
            break;
          }
        if (found) break;
      }
    }
    if (!found)
      throw NoApplicableMove("no local move removes color " + target.get_str() + " (" + std::to_string(before) +
                             " edges remain)");
    rw = std::move(*found);
  }
}

ColoredDiagram delete_color_moves(const Diagram& d, const Coloring& c, const Integer& target) {
  if (!verify_coloring(d, c)) throw PreconditionError("coloring is not valid on the diagram");
  Rewriter rw(d, c);
  delete_color_moves(rw, target);
  return {rw.diagram(), *rw.coloring(), rw.trace()};
}

std::vector<TwistInsertion> balanced_twist_plan(const Diagram& d) {
  std::vector<TwistInsertion> plan;
  for (const auto& x : d.crossings()) {
    if (x.sign > 0)
      plan.push_back({x.under_out(), 0, -1, 1, 1});
    else
      plan.push_back({x.under_in(), 1, 1, 1, 1});
  }
  return plan;
}

TwoParallelColoring color_two_parallel(const Diagram& d, const std::optional<std::vector<TwistInsertion>>& plan) {
  CabledDiagram base = two_parallel_untwisted(d);
  std::vector<TwistInsertion> sites = plan ? *plan : balanced_twist_plan(d);
  int total = 0;
  for (const auto& s : sites) total += s.sign * s.count;
  if (total != 0) throw PreconditionError("twist plan is not balanced (net " + std::to_string(total) + " full twists)");

  TwoParallelColoring r;
  r.cable = parallel(d, {{2}, sites});
  if (r.cable.grids.empty()) {
    r.coloring = Coloring{};
    return r;
  }
  std::map<EdgeLabel, Integer> pins;
  for (const auto& g : r.cable.grids) {
    pins[g.over[0].front()] = 2;
    pins[g.over[1].front()] = 3;
  }
  auto sol = solve_partial(r.cable.diagram, pins);
  if (!sol || !sol->unique) throw PreconditionError("twist plan does not carry the pair coloring (2, 3) around the knot");
  r.coloring = std::move(sol->coloring);
  if (!verify_coloring(r.cable.diagram, r.coloring)) throw InternalError("2-parallel coloring failed verification");
  return r;
}

}  // namespace zcolor
