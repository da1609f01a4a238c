#include "zcolor/json_io.hpp"

#include <optional>
#include <string>

#include "zcolor/errors.hpp"
#include "zcolor/pd_io.hpp"

namespace zcolor {

namespace {

const Integer kSafeLimit("9007199254740991");

[[noreturn]] void bad(const std::string& what) { throw PreconditionError("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

Json integer_json(const Integer& x) {
  if (abs(x) <= kSafeLimit) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad("'" + j.get<std::string>() + "' is not an integer");
    return x;
  }
  bad("expected an integer");
}

Json diagram_json(const Diagram& d) {
  Json j;
  j["pd"] = serialize_pd(d);
  j["crossings"] = d.crossing_count();
  j["components"] = d.component_count();
  j["free_loops"] = d.free_loops();
  j["writhe"] = d.writhe();
  return j;
}

Json coloring_json(const Coloring& c) {
  Json j;
  Json values = Json::array();
  for (const auto& v : c.values()) values.push_back(integer_json(v));
  j["values"] = std::move(values);
  Json pal = Json::array();
  for (const auto& v : palette(c)) pal.push_back(integer_json(v));
  j["palette_size"] = pal.size();
  j["palette"] = std::move(pal);
  j["trivial"] = c.is_trivial();
  return j;
}

Coloring coloring_from_json(const Diagram& d, const Json& j) {
  if (j.is_object() && !j.contains("values")) {
    // {"label": color, ...} keyed by edge label
    std::vector<std::optional<Integer>> v(static_cast<std::size_t>(d.edge_count()));
    for (const auto& [key, x] : j.items()) {
      std::size_t used = 0;
      int e = 0;
      try {
        e = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || e < 1 || e > d.edge_count()) bad("coloring key '" + key + "' is not an edge label");
      v[static_cast<std::size_t>(e - 1)] = integer_from_json(x);
    }
    std::vector<Integer> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i]) throw PreconditionError("coloring leaves edge " + std::to_string(i + 1) + " uncolored");
      out.push_back(*v[i]);
    }
    return Coloring(std::move(out));
  }
  const Json& values = j.is_array() ? j : field(j, "values");
  if (!values.is_array()) bad("coloring values must be an array");
  if (static_cast<int>(values.size()) != d.edge_count())
    throw PreconditionError("coloring has " + std::to_string(values.size()) + " values for " +
                            std::to_string(d.edge_count()) + " edges");
  std::vector<Integer> v;
  for (const auto& x : values) v.push_back(integer_from_json(x));
  return Coloring(std::move(v));
}

Json lattice_json(const ColoringLattice& l) {
  Json basis = Json::array();
  for (const auto& row : l.basis) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    basis.push_back(std::move(r));
  }
  return Json{{"rank", l.rank()}, {"basis", std::move(basis)}};
}

Json spectrum_json(const Diagram& d, const Coloring& c) {
  auto s = diff_spectrum(d, c);
  Json diffs = Json::array();
  for (const auto& x : s.diffs) diffs.push_back(integer_json(x));
  Json hist = Json::array();
  for (const auto& [k, n] : s.histogram) hist.push_back(Json::array({integer_json(k), n}));
  auto simple = is_simple(s.histogram);
  Json j{{"diffs", std::move(diffs)}, {"histogram", std::move(hist)}, {"max_diff", integer_json(s.max_diff)},
         {"simple", simple.simple}};
  j["d"] = simple.d ? integer_json(*simple.d) : Json(nullptr);
  return j;
}

Json move_json(const Move& m) {
  return Json{{"kind", to_string(m.kind)},     {"edges", m.edges}, {"under_forward", m.under_forward},
              {"sign", m.sign},                {"over_first", m.over_first}, {"disk", m.disk}};
}

Move move_from_json(const Json& j) {
  Move m;
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("move kind must be a string");
  auto k = move_kind_from_string(kind.get<std::string>());
  if (!k) bad("unknown move kind '" + kind.get<std::string>() + "'");
  m.kind = *k;
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("move edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_number_integer()) bad("move edges must be integers");
    m.edges.push_back(e.get<EdgeLabel>());
  }
  if (j.contains("under_forward")) {
    if (!j.at("under_forward").is_boolean()) bad("under_forward must be a boolean");
    m.under_forward = j.at("under_forward").get<bool>();
  }
  if (j.contains("over_first")) {
    if (!j.at("over_first").is_boolean()) bad("over_first must be a boolean");
    m.over_first = j.at("over_first").get<bool>();
  }
  m.sign = int_field(j, "sign", 1);
  m.disk = int_field(j, "disk", 0);
  return m;
}

Json trace_json(const MoveTrace& t) {
  Json moves = Json::array();
  for (const auto& m : t.moves) moves.push_back(move_json(m));
  Json disks = Json::array();
  for (const auto& [id, edges] : t.disks) disks.push_back(Json{{"id", id}, {"edges", edges}});
  return Json{{"moves", std::move(moves)}, {"disks", std::move(disks)}};
}

MoveTrace trace_from_json(const Json& j) {
  MoveTrace t;
  const Json& moves = field(j, "moves");
  if (!moves.is_array()) bad("trace moves must be an array");
  for (const auto& m : moves) t.moves.push_back(move_from_json(m));
  if (j.contains("disks")) {
    if (!j.at("disks").is_array()) bad("trace disks must be an array");
    for (const auto& d : j.at("disks")) {
      int id = int_field(d, "id", 0);
      const Json& edges = field(d, "edges");
      if (!edges.is_array()) bad("disk edges must be an array");
      auto& set = t.disks[id];
      for (const auto& e : edges) {
        if (!e.is_number_integer()) bad("disk edges must be integers");
        set.insert(e.get<EdgeLabel>());
      }
    }
  }
  return t;
}

Json path_json(const DiffPath& p) {
  auto role = [](PathRole r) { return r == PathRole::Over ? "over" : "under"; };
  return Json{{"start", p.start},          {"end", p.end},
              {"via", p.via},              {"color", integer_json(p.color)},
              {"max_diff", integer_json(p.max_diff)}, {"diff", integer_json(p.diff)},
              {"start_role", role(p.start_role)},     {"end_role", role(p.end_role)},
              {"kind", p.kind()}};
}

Json cable_spec_json(const CableSpec& s) {
  Json twists = Json::array();
  for (const auto& t : s.twist_insertions)
    twists.push_back(Json{{"edge", t.base_edge},
                          {"offset", t.offset},
                          {"sign", t.sign},
                          {"count", t.count},
                          {"first_copy", t.first_copy}});
  return Json{{"multiplicities", s.multiplicities}, {"twists", std::move(twists)}};
}

CableSpec cable_spec_from_json(const Json& j) {
  CableSpec s;
  if (j.contains("multiplicities")) {
    const Json& m = j.at("multiplicities");
    if (!m.is_array()) bad("multiplicities must be an array");
    for (const auto& x : m) {
      if (!x.is_number_integer()) bad("multiplicities must be integers");
      s.multiplicities.push_back(x.get<int>());
    }
  }
  if (j.contains("twists")) {
    if (!j.at("twists").is_array()) bad("twists must be an array");
    for (const auto& t : j.at("twists")) {
      TwistInsertion ti;
      ti.base_edge = int_field(t, "edge", 0);
      ti.offset = int_field(t, "offset", 0);
      ti.sign = int_field(t, "sign", 1);
      ti.count = int_field(t, "count", 1);
      ti.first_copy = int_field(t, "first_copy", 1);
      s.twist_insertions.push_back(ti);
    }
  }
  return s;
}

}  // namespace zcolor
