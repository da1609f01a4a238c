#include "zcolor_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zcolor/errors.hpp"
#include "zcolor/parallel_coloring.hpp"
#include "zcolor/pd_io.hpp"
#include "zcolor/rewrite.hpp"

namespace zcolor::cli {

namespace {

// Bad invocation or unreadable input; maps to exit code 2.
class UsageError : public Error {
 public:
  UsageError(std::string what, const char* kind) : Error(std::move(what)), kind_(kind) {}
  const char* kind() const noexcept override { return kind_; }

 private:
  const char* kind_;
};

std::string read_text(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot read " + path, "io_error");
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Diagram load_diagram(const std::string& path) { return parse_pd(read_text(path)); }

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what(), "parse_error");
  }
}

Json envelope(const std::string& command) { return Json{{"schema_version", kSchemaVersion}, {"command", command}}; }

std::vector<int> parse_spec(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("--spec expects comma-separated integers, got '" + text + "'", "usage_error");
    }
  }
  if (out.empty()) throw UsageError("--spec is empty", "usage_error");
  return out;
}

Json linking_json(const Diagram& d) {
  Json out = Json::array();
  const int n = static_cast<int>(d.components().size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(Json{{"components", {i, j}}, {"linking_number", d.linking_number(i, j)}});
  return out;
}

Json invariants(const Diagram& d) {
  Json j;
  j["writhe"] = d.writhe();
  j["determinant"] = d.empty() ? Json(nullptr) : integer_json(determinant(d));
  j["components"] = d.component_count();
  j["z_colorable"] = is_z_colorable(d).colorable;
  j["crossings"] = d.crossing_count();
  j["arcs"] = d.arc_count();
  j["split"] = d.is_split();
  j["linking_numbers"] = linking_json(d);
  return j;
}

Json colored_json(const Diagram& d, const Coloring& c) {
  return Json{{"diagram", diagram_json(d)}, {"coloring", coloring_json(c)}, {"spectrum", spectrum_json(d, c)}};
}

struct Options {
  std::string input;
  std::string second;
  std::string spec;
  std::string twists;
  std::string target;
  std::string n = "0";
  bool two_parallel = false;
  bool reduce = false;
  int coeff_bound = 3;
  int max_palette = 0;
  bool pretty = false;
};

Json cmd_validate(const Options& o) {
  Diagram d = load_diagram(o.input);
  Json j = envelope("validate");
  j["valid"] = true;
  j["diagram"] = diagram_json(d);
  return j;
}

Json cmd_invariants(const Options& o) {
  Json j = envelope("invariants");
  j.update(invariants(load_diagram(o.input)));
  return j;
}

Json cmd_colorability(const Options& o) {
  Diagram d = load_diagram(o.input);
  auto c = is_z_colorable(d);
  Json j = envelope("colorability");
  j["z_colorable"] = c.colorable;
  j["witness"] = c.witness ? coloring_json(*c.witness) : Json(nullptr);
  j["lattice"] = lattice_json(kernel_lattice(d));
  return j;
}

Json cmd_fox(const Options& o) {
  Diagram d = load_diagram(o.input);
  Integer n;
  if (n.set_str(o.n, 10) != 0) throw UsageError("--n expects an integer", "usage_error");
  Json j = envelope("fox-count");
  j["n"] = integer_json(n);
  j["count"] = integer_json(fox_coloring_count(d, n));
  return j;
}

CabledDiagram build_cable(const Options& o, const Diagram& d) {
  const bool spec_given = !o.spec.empty() || !o.twists.empty();
  if (o.two_parallel == spec_given)
    throw UsageError("give exactly one of --spec, --two-parallel-untwisted or --twists", "usage_error");
  if (o.two_parallel) return two_parallel_untwisted(d);
  CableSpec spec;
  if (!o.twists.empty()) spec = cable_spec_from_json(load_json(o.twists));
  if (!o.spec.empty()) spec.multiplicities = parse_spec(o.spec);
  return parallel(d, spec);
}

Json cable_json(const CabledDiagram& c) {
  Json j;
  j["spec"] = cable_spec_json(c.spec);
  j["diagram"] = diagram_json(c.diagram);
  j["linking_numbers"] = linking_json(c.diagram);
  return j;
}

Json cmd_cable(const Options& o) {
  Diagram d = load_diagram(o.input);
  Json j = envelope("cable");
  j.update(cable_json(build_cable(o, d)));
  return j;
}

Json cmd_color_parallel(const Options& o) {
  Diagram d = load_diagram(o.input);
  Json j = envelope("color-parallel");
  Diagram cabled;
  Coloring c;
  if (o.two_parallel) {
    auto r = color_two_parallel(d);
    cabled = r.cable.diagram;
    c = r.coloring;
    j["cable"] = cable_json(r.cable);
  } else {
    if (o.spec.empty()) throw UsageError("color-parallel needs --spec or --two-parallel", "usage_error");
    auto cable = parallel(d, {parse_spec(o.spec), {}});
    c = color_even_parallel(cable);
    cabled = cable.diagram;
    j["cable"] = cable_json(cable);
  }
  j["initial"] = colored_json(cabled, c);
  if (o.reduce) {
    Rewriter rw(cabled, c);
    const auto pal = palette(c);
    if (o.two_parallel) {
      for (Integer t : {Integer(4), Integer(-1)})
        if (pal.count(t)) delete_color_moves(rw, t);
    } else if (pal.count(3)) {
      delete_color_moves(rw, 3);
    }
    j["reduced"] = colored_json(rw.diagram(), *rw.coloring());
    j["trace"] = trace_json(rw.trace());
    j["local_equivalence"] = verify_local_equivalence(cabled, rw.diagram(), rw.trace()).ok;
    j["palette"] = j["reduced"]["coloring"]["palette"];
  } else {
    j["palette"] = j["initial"]["coloring"]["palette"];
  }
  return j;
}

Json cmd_simplify(const Options& o) {
  Diagram d = load_diagram(o.input);
  Coloring c = coloring_from_json(d, load_json(o.second));
  auto r = to_simple_coloring(d, c);
  Json j = envelope("simplify-coloring");
  j.update(colored_json(r.result.diagram, r.result.coloring));
  j["trace"] = trace_json(r.result.trace);
  Json paths = Json::array();
  for (const auto& p : r.paths) paths.push_back(path_json(p));
  j["paths"] = std::move(paths);
  j["outer_iterations"] = r.outer_iterations;
  j["eliminations"] = r.eliminations;
  j["local_equivalence"] = verify_local_equivalence(d, r.result.diagram, r.result.trace).ok;
  return j;
}

Json cmd_minimize(const Options& o) {
  Diagram d = load_diagram(o.input);
  PaletteSearchOptions opts;
  opts.coeff_bound = o.coeff_bound;
  if (o.max_palette > 0) opts.max_palette = static_cast<std::size_t>(o.max_palette);
  auto r = minimize_palette_on_diagram(d, kernel_lattice(d), opts);
  Json j = envelope("minimize");
  j["coeff_bound"] = o.coeff_bound;
  j["found"] = r.best.has_value();
  j["palette_size"] = r.best ? Json(r.palette_size) : Json(nullptr);
  j["coloring"] = r.best ? coloring_json(*r.best) : Json(nullptr);
  j["leaves"] = r.leaves;
  return j;
}

Json cmd_verify(const Options& o) {
  Diagram d = load_diagram(o.input);
  Coloring c = coloring_from_json(d, load_json(o.second));
  Json j = envelope("verify");
  bool ok = verify_coloring(d, c);
  j["valid"] = ok;
  j["coloring"] = coloring_json(c);
  if (ok) j["spectrum"] = spectrum_json(d, c);
  return j;
}

Json cmd_replay(const Options& o) {
  Diagram d = load_diagram(o.input);
  MoveTrace t = trace_from_json(load_json(o.second));
  Json j = envelope("replay");
  j["diagram"] = diagram_json(replay_trace(d, t));
  if (!o.target.empty()) {
    auto rep = verify_local_equivalence(d, load_diagram(o.target), t);
    j["local_equivalence"] = rep.ok;
    j["problems"] = rep.problems;
  }
  return j;
}

Json error_json(const std::string& command, const char* kind, const std::string& message) {
  Json j = envelope(command);
  j["error"] = Json{{"kind", kind}, {"message", message}};
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Z-colorings of link diagrams", "zcolor"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto input = [&](CLI::App* sub) { sub->add_option("input", o.input, "PD file")->required(); };
  auto* validate = app.add_subcommand("validate", "Parse and validate a PD file");
  input(validate);
  auto* inv = app.add_subcommand("invariants", "Writhe, determinant, components, Z-colorability");
  input(inv);
  auto* col = app.add_subcommand("colorability", "Z-colorability with witness and kernel lattice");
  input(col);
  auto* fox = app.add_subcommand("fox-count", "Number of Fox n-colorings");
  input(fox);
  fox->add_option("--n", o.n, "Modulus")->required();
  auto* cable = app.add_subcommand("cable", "Parallel cabling");
  input(cable);
  cable->add_option("--spec", o.spec, "Multiplicities, e.g. 3,2");
  cable->add_flag("--two-parallel-untwisted", o.two_parallel, "2-parallel of a writhe-0 knot diagram");
  cable->add_option("--twists", o.twists, "Cable spec JSON with twist insertions");
  auto* cp = app.add_subcommand("color-parallel", "Explicit colorings of even or untwisted 2-parallels");
  input(cp);
  cp->add_option("--spec", o.spec, "Even multiplicities, e.g. 4,4");
  cp->add_flag("--two-parallel", o.two_parallel, "Untwisted 2-parallel of a writhe-0 knot diagram");
  cp->add_flag("--reduce", o.reduce, "Delete extreme colors by local moves");
  auto* simp = app.add_subcommand("simplify-coloring", "Rewrite to a simple coloring");
  input(simp);
  simp->add_option("coloring", o.second, "Coloring JSON")->required();
  auto* mini = app.add_subcommand("minimize", "Bounded search for a coloring with few colors");
  input(mini);
  mini->add_option("--coeff-bound", o.coeff_bound, "Lattice coefficient bound")->check(CLI::Range(0, 64));
  mini->add_option("--max-palette", o.max_palette, "Only report colorings with at most this many colors");
  auto* ver = app.add_subcommand("verify", "Check a coloring");
  input(ver);
  ver->add_option("coloring", o.second, "Coloring JSON")->required();
  auto* rep = app.add_subcommand("replay", "Replay a move trace");
  input(rep);
  rep->add_option("trace", o.second, "Trace JSON")->required();
  rep->add_option("--target", o.target, "Diagram the trace should reach");
  auto* corpus = app.add_subcommand("corpus", "Run the corpus checks");
  corpus->add_option("dir", o.input, "Corpus directory")->required();

  std::string command = "zcolor";
  auto emit = [&](const Json& j) { out << j.dump(o.pretty ? 2 : -1) << '\n'; };
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit(error_json(command, "usage_error", e.what()));
    return kUsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  command = sub->get_name();
  try {
    Json j;
    if (sub == validate) j = cmd_validate(o);
    else if (sub == inv) j = cmd_invariants(o);
    else if (sub == col) j = cmd_colorability(o);
    else if (sub == fox) j = cmd_fox(o);
    else if (sub == cable) j = cmd_cable(o);
    else if (sub == cp) j = cmd_color_parallel(o);
    else if (sub == simp) j = cmd_simplify(o);
    else if (sub == mini) j = cmd_minimize(o);
    else if (sub == ver) j = cmd_verify(o);
    else if (sub == rep) j = cmd_replay(o);
    else {
      auto r = run_corpus(o.input);
      emit(r.json);
      return r.ok ? kOk : kDomainError;
    }
    emit(j);
    return kOk;
  } catch (const ParseError& e) {
    Json j = error_json(command, e.kind(), e.what());
    j["error"]["line"] = e.line();
    j["error"]["column"] = e.column();
    emit(j);
    return kUsageError;
  } catch (const UsageError& e) {
    emit(error_json(command, e.kind(), e.what()));
    return kUsageError;
  } catch (const Error& e) {
    emit(error_json(command, e.kind(), e.what()));
    return kDomainError;
  } catch (const std::exception& e) {
    emit(error_json(command, "internal_error", e.what()));
    return kDomainError;
  }
}

}  // namespace zcolor::cli
