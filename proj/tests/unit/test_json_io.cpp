#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zcolor/errors.hpp"
#include "zcolor/json_io.hpp"
#include "zcolor/moves.hpp"
#include "zcolor/pd_io.hpp"
#include "zcolor/rewrite.hpp"

using namespace zcolor;
using oracle::corpus;

TEST(IntegerJson, SafeRangeAndStrings) {
  EXPECT_TRUE(integer_json(42).is_number_integer());
  EXPECT_EQ(integer_json(-7), -7);
  Integer big("9007199254740993");
  Json j = integer_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(integer_from_json(j), big);
  EXPECT_EQ(integer_from_json(Json(-9007199254740991LL)), Integer("-9007199254740991"));
  EXPECT_EQ(integer_from_json(Json("-12")), -12);
  EXPECT_THROW(integer_from_json(Json("1.5")), PreconditionError);
  EXPECT_THROW(integer_from_json(Json(1.5)), PreconditionError);
}

TEST(DiagramJson, Fields) {
  Json j = diagram_json(corpus("hopf"));
  EXPECT_EQ(j.at("crossings"), 2);
  EXPECT_EQ(j.at("components"), 2);
  EXPECT_EQ(j.at("writhe"), -2);
  EXPECT_TRUE(isomorphic(parse_pd(j.at("pd").get<std::string>()), corpus("hopf")));
}

TEST(ColoringJson, RoundTrip) {
  Diagram d = oracle::chain(3);
  Coloring c = oracle::chain_coloring(d, {0, 3, 4});
  Json j = coloring_json(c);
  EXPECT_EQ(coloring_from_json(d, j), c);
  EXPECT_EQ(coloring_from_json(d, j.at("values")), c);
  EXPECT_EQ(j.at("palette_size"), j.at("palette").size());
  EXPECT_THROW(coloring_from_json(corpus("trefoil"), j), PreconditionError);
  Json keyed = Json::object();
  for (EdgeLabel e = 1; e <= d.edge_count(); ++e) keyed[std::to_string(e)] = integer_json(c[e]);
  EXPECT_EQ(coloring_from_json(d, keyed), c);
  keyed.erase("1");
  EXPECT_THROW(coloring_from_json(d, keyed), PreconditionError);
  EXPECT_THROW(coloring_from_json(d, Json{{"x", 1}}), PreconditionError);
}

TEST(TraceJson, RoundTrip) {
  Diagram d = oracle::chain(3);
  auto r = to_simple_coloring(d, oracle::chain_coloring(d, {0, 3, 4}));
  Json j = trace_json(r.result.trace);
  MoveTrace back = trace_from_json(j);
  EXPECT_EQ(back.moves, r.result.trace.moves);
  EXPECT_EQ(back.disks, r.result.trace.disks);
  EXPECT_TRUE(isomorphic(replay_trace(d, back), r.result.diagram));
}

TEST(MoveJson, KindsAndErrors) {
  for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3}) {
    Move m{k, {1, 2}, false, -1, true, 3};
    EXPECT_EQ(move_from_json(move_json(m)), m);
  }
  EXPECT_THROW(move_from_json(Json{{"kind", "R4"}, {"edges", {1}}}), PreconditionError);
}

TEST(CableSpecJson, RoundTrip) {
  CableSpec s{{2, 4}, {{3, 1, -1, 2, 1}}};
  CableSpec back = cable_spec_from_json(cable_spec_json(s));
  EXPECT_EQ(back.multiplicities, s.multiplicities);
  EXPECT_EQ(back.twist_insertions, s.twist_insertions);
  CableSpec bare = cable_spec_from_json(Json{{"multiplicities", {2}}, {"twists", {{{"edge", 1}, {"sign", 1}}}}});
  ASSERT_EQ(bare.twist_insertions.size(), 1u);
  EXPECT_EQ(bare.twist_insertions[0].count, 1);
  EXPECT_EQ(bare.twist_insertions[0].offset, 0);
}
