#include "zcolor/cabling.hpp"

#include <algorithm>
#include <string>

#include "zcolor/errors.hpp"

namespace zcolor {

int CabledDiagram::multiplicity_of_edge(EdgeLabel base_edge) const {
  return spec.multiplicities.at(static_cast<std::size_t>(base.component_of(base_edge)));
}

int CabledDiagram::copy_component(int component, int copy) const {
  if (component < 0 || component >= static_cast<int>(base.components().size()))
    throw PreconditionError("no crossing component " + std::to_string(component));
  EdgeLabel e = base.components()[static_cast<std::size_t>(component)].front();
  const auto& copies = segments.at(static_cast<std::size_t>(e - 1));
  if (copy < 1 || copy > static_cast<int>(copies.size()))
    throw PreconditionError("component " + std::to_string(component) + " has no copy " + std::to_string(copy));
  return diagram.component_of(copies[static_cast<std::size_t>(copy - 1)].front());
}

namespace {

void relabel_all(CabledDiagram& c, const LabelMap& m) {
  auto f = [&](EdgeLabel& e) { e = m.at(e); };
  for (auto& g : c.grids) {
    for (auto& v : g.under) std::for_each(v.begin(), v.end(), f);
    for (auto& v : g.over) std::for_each(v.begin(), v.end(), f);
  }
  for (auto& per_edge : c.segments)
    for (auto& v : per_edge) std::for_each(v.begin(), v.end(), f);
  for (auto& t : c.twists) {
    std::for_each(t.left.begin(), t.left.end(), f);
    std::for_each(t.right.begin(), t.right.end(), f);
  }
}

CabledDiagram insert_one_twist(const CabledDiagram& c, const TwistInsertion& site) {
  const EdgeLabel e = site.base_edge;
  CabledDiagram out = c;
  auto& copies = out.segments[static_cast<std::size_t>(e - 1)];
  EdgeLabel x = copies[static_cast<std::size_t>(site.first_copy - 1)].back();
  EdgeLabel y = copies[static_cast<std::size_t>(site.first_copy)].back();

  std::vector<Crossing> xs = c.diagram.crossings();
  EdgeLabel fresh = c.diagram.edge_count() + 1;
  EdgeLabel x1 = fresh++, x2 = fresh++, y1 = fresh++, y2 = fresh++;
  SlotRef hx = c.diagram.head(x), hy = c.diagram.head(y);
  xs[static_cast<std::size_t>(hx.crossing)].slots[static_cast<std::size_t>(hx.pos)] = x2;
  xs[static_cast<std::size_t>(hy.crossing)].slots[static_cast<std::size_t>(hy.pos)] = y2;
  if (site.sign > 0) {
    xs.push_back({{y, x1, y1, x}, 1});
    xs.push_back({{x1, y2, x2, y1}, 1});
  } else {
    xs.push_back({{x, y, x1, y1}, -1});
    xs.push_back({{y1, x1, y2, x2}, -1});
  }

  auto& head_grid = out.grids[static_cast<std::size_t>(c.base.head(e).crossing)];
  for (auto* side : {&head_grid.under, &head_grid.over})
    for (auto& piece : *side) {
      if (piece.front() == x) piece.front() = x2;
      else if (piece.front() == y) piece.front() = y2;
    }
  copies[static_cast<std::size_t>(site.first_copy - 1)].push_back(x2);
  copies[static_cast<std::size_t>(site.first_copy)].push_back(y2);
  TwistInsertion one = site;
  one.count = 1;
  out.twists.push_back({one, {x, x1, x2}, {y, y1, y2}});

  LabelMap m;
  out.diagram = Diagram::from_crossings(std::move(xs), c.diagram.free_loops(), &m);
  relabel_all(out, m);
  return out;
}

}  // namespace

CabledDiagram insert_full_twist(const CabledDiagram& c, const TwistInsertion& site) {
  if (site.base_edge < 1 || site.base_edge > c.base.edge_count())
    throw PreconditionError("twist site: base edge " + std::to_string(site.base_edge) + " does not exist");
  if (site.sign != 1 && site.sign != -1) throw PreconditionError("twist site: sign must be +1 or -1");
  if (site.count < 0) throw PreconditionError("twist site: negative count");
  int m = c.multiplicity_of_edge(site.base_edge);
  if (site.first_copy < 1 || site.first_copy >= m)
    throw PreconditionError("twist site: copies " + std::to_string(site.first_copy) + "," +
                            std::to_string(site.first_copy + 1) + " do not exist on a " + std::to_string(m) +
                            "-parallel");
  CabledDiagram out = c;
  for (int i = 0; i < site.count; ++i) out = insert_one_twist(out, site);
  return out;
}

CabledDiagram parallel(const Diagram& d, const CableSpec& spec) {
  if (static_cast<int>(spec.multiplicities.size()) != d.component_count())
    throw PreconditionError("cable spec lists " + std::to_string(spec.multiplicities.size()) +
                            " multiplicities for " + std::to_string(d.component_count()) + " components");
  for (int n : spec.multiplicities)
    if (n < 1) throw PreconditionError("multiplicities must be positive");

  CabledDiagram c;
  c.base = d;
  c.spec = spec;
  c.spec.twist_insertions.clear();
  auto mult = [&](EdgeLabel e) { return spec.multiplicities[static_cast<std::size_t>(d.component_of(e))]; };

  EdgeLabel next = 1;
  c.segments.resize(static_cast<std::size_t>(d.edge_count()));
  for (EdgeLabel e = 1; e <= d.edge_count(); ++e)
    for (int k = 0; k < mult(e); ++k) c.segments[static_cast<std::size_t>(e - 1)].push_back({next++});
  auto seg = [&](EdgeLabel e, int k) { return c.segments[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(k)][0]; };

  std::vector<Crossing> xs;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const Crossing& x = d.crossing(ci);
    const int nu = mult(x.under_in()), no = mult(x.over_in());
    CableGrid g;
    g.base_crossing = ci;
    g.sign = x.sign;
    g.under.assign(static_cast<std::size_t>(nu), std::vector<EdgeLabel>(static_cast<std::size_t>(no + 1)));
    g.over.assign(static_cast<std::size_t>(no), std::vector<EdgeLabel>(static_cast<std::size_t>(nu + 1)));
    for (int k = 0; k < nu; ++k) {
      auto& u = g.under[static_cast<std::size_t>(k)];
      u.front() = seg(x.under_in(), k);
      u.back() = seg(x.under_out(), k);
      for (int t = 1; t < no; ++t) u[static_cast<std::size_t>(t)] = next++;
    }
    for (int l = 0; l < no; ++l) {
      auto& o = g.over[static_cast<std::size_t>(l)];
      o.front() = seg(x.over_in(), l);
      o.back() = seg(x.over_out(), l);
      for (int s = 1; s < nu; ++s) o[static_cast<std::size_t>(s)] = next++;
    }
    for (int k = 0; k < nu; ++k)
      for (int t = 1; t <= no; ++t) {
        int l = x.sign > 0 ? no - t : t - 1;
        int s = x.sign > 0 ? k + 1 : nu - k;
        const auto& u = g.under[static_cast<std::size_t>(k)];
        const auto& o = g.over[static_cast<std::size_t>(l)];
        xs.push_back(Crossing::make(u[static_cast<std::size_t>(t - 1)], u[static_cast<std::size_t>(t)],
                                    o[static_cast<std::size_t>(s - 1)], o[static_cast<std::size_t>(s)], x.sign));
      }
    c.grids.push_back(std::move(g));
  }

  int loops = 0;
  for (std::size_t i = d.components().size(); i < spec.multiplicities.size(); ++i) loops += spec.multiplicities[i];
  LabelMap m;
  c.diagram = Diagram::from_crossings(std::move(xs), loops, &m);
  relabel_all(c, m);

  auto sites = spec.twist_insertions;
  std::stable_sort(sites.begin(), sites.end(), [](const auto& a, const auto& b) {
    return std::pair(a.base_edge, a.offset) < std::pair(b.base_edge, b.offset);
  });
  for (const auto& s : sites) {
    c = insert_full_twist(c, s);
    c.spec.twist_insertions.push_back(s);
  }
  return c;
}

CabledDiagram two_parallel_untwisted(const Diagram& d) {
  if (d.component_count() != 1) throw PreconditionError("untwisted 2-parallel needs a knot diagram");
  if (d.writhe() != 0)
    throw PreconditionError("untwisted 2-parallel needs writhe 0, diagram has writhe " + std::to_string(d.writhe()));
  return parallel(d, {{2}, {}});
}

Lemma4Check check_lemma4(const Diagram& d) {
  if (d.component_count() != 1) throw PreconditionError("writhe/linking check needs a knot diagram");
  Lemma4Check r;
  r.writhe = d.writhe();
  if (d.crossing_count() > 0) {
    CabledDiagram c = parallel(d, {{2}, {}});
    r.linking = c.diagram.linking_number(c.copy_component(0, 1), c.copy_component(0, 2));
  }
  r.equal = r.writhe == r.linking;
  return r;
}

}  // namespace zcolor
