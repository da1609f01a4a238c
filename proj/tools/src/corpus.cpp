#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zcolor/errors.hpp"
#include "zcolor/parallel_coloring.hpp"
#include "zcolor/pd_io.hpp"
#include "zcolor_cli/cli.hpp"

namespace zcolor::cli {

namespace {

namespace fs = std::filesystem;

Json palette_json(const std::set<Integer>& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(integer_json(x));
  return out;
}

std::set<Integer> palette_from(const Json& j) {
  std::set<Integer> out;
  for (const auto& x : j) out.insert(integer_from_json(x));
  return out;
}

bool subset(const std::set<Integer>& a, const std::set<Integer>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

class Checker {
 public:
  explicit Checker(Json& mismatches) : mismatches_(mismatches) {}

  template <class A, class B>
  void expect(const std::string& what, const A& got, const B& want) {
    ++checks_;
    if (!(got == want)) mismatches_.push_back(what + ": expected " + Json(want).dump() + ", got " + Json(got).dump());
  }

  void expect_true(const std::string& what, bool ok, const std::string& detail = {}) {
    ++checks_;
    if (!ok) mismatches_.push_back(what + (detail.empty() ? "" : ": " + detail));
  }

  int checks() const { return checks_; }

 private:
  Json& mismatches_;
  int checks_ = 0;
};

void check_colored(Checker& ck, const std::string& tag, const Diagram& d, const Coloring& c, const Json& want) {
  ck.expect_true(tag + " coloring verifies", verify_coloring(d, c));
  auto pal = palette(c);
  if (want.contains("palette_subset"))
    ck.expect_true(tag + " palette within bound", subset(pal, palette_from(want.at("palette_subset"))),
                   palette_json(pal).dump());
  if (!want.contains("reduced_palette")) return;
  Rewriter rw(d, c);
  for (const auto& t : want.value("delete", Json::array())) {
    Integer x = integer_from_json(t);
    if (palette(*rw.coloring()).count(x)) delete_color_moves(rw, x);
  }
  auto reduced = palette(*rw.coloring());
  ck.expect(tag + " reduced palette", palette_json(reduced), want.at("reduced_palette"));
  auto simple = is_simple(rw.diagram(), *rw.coloring());
  ck.expect_true(tag + " reduced coloring is simple", simple.simple);
  ck.expect_true(tag + " trace is local",
                 verify_local_equivalence(d, rw.diagram(), rw.trace()).ok);
}

void check_file(const Diagram& d, const Json& want, Checker& ck) {
  if (want.contains("writhe")) ck.expect("writhe", d.writhe(), want.at("writhe"));
  if (want.contains("components")) ck.expect("components", d.component_count(), want.at("components"));
  if (want.contains("crossings")) ck.expect("crossings", d.crossing_count(), want.at("crossings"));
  if (want.contains("determinant")) ck.expect("determinant", integer_json(determinant(d)), want.at("determinant"));
  if (want.contains("z_colorable")) ck.expect("z_colorable", is_z_colorable(d).colorable, want.at("z_colorable"));
  if (want.contains("fox_counts"))
    for (const auto& [n, count] : want.at("fox_counts").items())
      ck.expect("fox count mod " + n, integer_json(fox_coloring_count(d, Integer(n))), count);
  if (want.contains("linking_numbers"))
    for (const auto& t : want.at("linking_numbers"))
      ck.expect("linking number " + t.at(0).dump() + "," + t.at(1).dump(),
                d.linking_number(t.at(0).get<int>(), t.at(1).get<int>()), t.at(2));
  if (want.value("writhe_equals_linking", false)) {
    auto l = check_lemma4(d);
    ck.expect_true("2-parallel linking equals writhe", l.equal, std::to_string(l.writhe) + " vs " + std::to_string(l.linking));
  }
  if (want.contains("min_palette")) {
    const Json& m = want.at("min_palette");
    PaletteSearchOptions opts;
    opts.coeff_bound = m.value("coeff_bound", 3);
    auto r = minimize_palette_on_diagram(d, kernel_lattice(d), opts);
    ck.expect("minimal palette", r.best ? Json(r.palette_size) : Json(nullptr), m.at("size"));
  }
  for (const auto& p : want.value("parallels", Json::array())) {
    std::vector<int> spec = p.at("spec").get<std::vector<int>>();
    auto cable = parallel(d, {spec, {}});
    std::string tag = "parallel " + Json(spec).dump();
    if (p.contains("crossings")) ck.expect(tag + " crossings", cable.diagram.crossing_count(), p.at("crossings"));
    if (p.value("color", false)) check_colored(ck, tag, cable.diagram, color_even_parallel(cable), p);
  }
  if (want.contains("two_parallel")) {
    const Json& p = want.at("two_parallel");
    if (p.value("rejected", false)) {
      bool threw = false;
      try {
        two_parallel_untwisted(d);
      } catch (const PreconditionError&) {
        threw = true;
      }
      ck.expect_true("untwisted 2-parallel rejected", threw);
    } else {
      auto cable = two_parallel_untwisted(d);
      ck.expect("2-parallel linking number", cable.diagram.linking_number(0, 1), 0);
      auto r = color_two_parallel(d);
      check_colored(ck, "2-parallel", r.cable.diagram, r.coloring, p);
    }
  }
}

}  // namespace

CorpusReport run_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw PreconditionError("corpus directory " + dir + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pd") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  CorpusReport report;
  report.json = Json{{"schema_version", kSchemaVersion}, {"command", "corpus"}, {"directory", dir}};
  Json entries = Json::array();
  int passed = 0, failed = 0;
  for (const auto& f : files) {
    Json mismatches = Json::array();
    Checker ck(mismatches);
    try {
      Diagram d = read_pd_file(f.string());
      fs::path sidecar = f;
      sidecar.replace_extension(".json");
      Json want = Json::object();
      if (fs::exists(sidecar)) {
        std::ifstream in(sidecar);
        want = Json::parse(in);
      }
      check_file(d, want, ck);
    } catch (const std::exception& e) {
      mismatches.push_back(std::string("error: ") + e.what());
    }
    bool ok = mismatches.empty();
    ok ? ++passed : ++failed;
    entries.push_back(Json{{"file", f.filename().string()}, {"ok", ok}, {"checks", ck.checks()}, {"mismatches", mismatches}});
  }
  report.json["files"] = std::move(entries);
  report.json["passed"] = passed;
  report.json["failed"] = failed;
  report.ok = failed == 0;
  return report;
}

}  // namespace zcolor::cli
