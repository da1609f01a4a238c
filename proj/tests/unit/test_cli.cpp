#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "zcolor/json_io.hpp"
#include "zcolor/pd_io.hpp"
#include "zcolor_cli/cli.hpp"

using namespace zcolor;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  Json json;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  int code = cli::run(args, out);
  Json j = Json::parse(out.str(), nullptr, false);
  return {code, j};
}

std::string pd(const std::string& name) { return oracle::corpus_dir() + "/" + name + ".pd"; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("zcolor_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, ValidateAndInvariants) {
  auto v = call({"validate", pd("trefoil")});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.json.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(v.json.at("valid"), true);
  auto i = call({"invariants", pd("figure_eight")});
  EXPECT_EQ(i.code, 0);
  EXPECT_EQ(i.json.at("determinant"), 5);
  EXPECT_EQ(i.json.at("writhe"), 0);
  EXPECT_EQ(i.json.at("z_colorable"), false);
}

TEST(Cli, FoxCountAndColorability) {
  auto f = call({"fox-count", pd("trefoil"), "--n", "3"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.json.at("count"), 9);
  auto c = call({"colorability", pd("unlink_clasp")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.json.at("z_colorable"), true);
}

TEST(Cli, ErrorsMapToExitCodes) {
  TempDir tmp;
  auto bad = call({"validate", tmp.write("bad.pd", "X[1,2,3")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.json.at("error").at("kind"), "parse_error");
  auto invalid = call({"validate", tmp.write("invalid.pd", "X[1,2,3,4]")});
  EXPECT_EQ(invalid.code, 1);
  EXPECT_EQ(invalid.json.at("error").at("kind"), "invalid_diagram");
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"fox-count", pd("trefoil")}).code, 2);
  auto missing = call({"validate", "/nonexistent/file.pd"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.json.at("error").at("kind"), "io_error");
  auto pre = call({"color-parallel", pd("trefoil"), "--two-parallel"});
  EXPECT_EQ(pre.code, 1);
  EXPECT_EQ(pre.json.at("error").at("kind"), "precondition");
}

TEST(Cli, CableAndColorParallel) {
  auto c = call({"cable", pd("hopf"), "--spec", "4,4"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.json.at("diagram").at("crossings"), 32);
  auto p = call({"color-parallel", pd("hopf"), "--spec", "4,4", "--reduce"});
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(p.json.at("palette"), Json::parse("[-1,0,1,2]"));
  EXPECT_EQ(p.json.at("local_equivalence"), true);
  auto two = call({"color-parallel", pd("trefoil_writhe0"), "--two-parallel", "--reduce"});
  ASSERT_EQ(two.code, 0);
  EXPECT_EQ(two.json.at("palette"), Json::parse("[0,1,2,3]"));
}

TEST(Cli, VerifySimplifyAndReplay) {
  TempDir tmp;
  Diagram d = oracle::chain(3);
  std::string pdfile = tmp.write("chain.pd", serialize_pd(d));
  Coloring c = oracle::chain_coloring(parse_pd(serialize_pd(d)), {0, 3, 4});
  std::string colfile = tmp.write("chain.json", coloring_json(c).dump());
  auto v = call({"verify", pdfile, colfile});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.json.at("valid"), true);

  auto s = call({"simplify-coloring", pdfile, colfile});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.json.at("spectrum").at("simple"), true);
  std::string tracefile = tmp.write("trace.json", s.json.at("trace").dump());
  std::string target = tmp.write("target.pd", s.json.at("diagram").at("pd").get<std::string>());
  auto r = call({"replay", pdfile, tracefile, "--target", target});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json.at("local_equivalence"), true);

  Coloring broken = c;
  broken[1] += 1;
  auto bad = call({"verify", pdfile, tmp.write("broken.json", coloring_json(broken).dump())});
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(bad.json.at("valid"), false);
  EXPECT_EQ(call({"verify", pdfile, tmp.write("junk.json", "{not json")}).code, 2);
}

TEST(Cli, MinimizeAndCorpus) {
  auto m = call({"minimize", pd("trefoil_4"), "--coeff-bound", "3"});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(m.json.at("palette_size"), 4);
  auto none = call({"minimize", pd("trefoil_4"), "--max-palette", "3"});
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(none.json.at("found"), false);
  auto corpus = call({"corpus", oracle::corpus_dir()});
  EXPECT_EQ(corpus.code, 0);
  EXPECT_EQ(corpus.json.at("failed"), 0);
  EXPECT_EQ(call({"corpus", "/nonexistent/dir"}).code, 1);
}

TEST(Cli, CorpusReportsBrokenFiles) {
  TempDir tmp;
  fs::path dir = fs::path(tmp.write("placeholder", "")).parent_path() / "corpus";
  fs::create_directories(dir);
  auto empty = call({"corpus", dir.string()});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.json.at("passed"), 0);
  std::ofstream(dir / "good.pd") << "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n";
  std::ofstream(dir / "good.json") << R"({"determinant": 3})";
  std::ofstream(dir / "broken.pd") << "X[1,4,2,5] X[3,6,4";
  auto r = call({"corpus", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json.at("passed"), 1);
  EXPECT_EQ(r.json.at("failed"), 1);
  EXPECT_EQ(r.json.at("files").at(0).at("file"), "broken.pd");
  EXPECT_EQ(r.json.at("files").at(0).at("ok"), false);
}

TEST(Cli, PrettyOutputIndents) {
  std::ostringstream out;
  ASSERT_EQ(cli::run({"--pretty", "validate", pd("hopf")}, out), 0);
  EXPECT_NE(out.str().find("\n  \""), std::string::npos);
}
