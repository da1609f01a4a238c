#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zcolor/coloring_analysis.hpp"
#include "zcolor/errors.hpp"
#include "zcolor/moves.hpp"
#include "zcolor/pd_io.hpp"

using namespace zcolor;
using oracle::corpus;

namespace {

std::optional<Face> face_of_size(const Diagram& d, std::size_t n) {
  for (const auto& f : d.faces())
    if (f.size() == n) return f;
  return std::nullopt;
}

// Adds a bigon by pushing one side of a face over the opposite one.
MoveResult add_bigon(const Diagram& d) {
  for (const auto& f : d.faces())
    if (f.size() >= 2) return apply_move(d, {MoveKind::R2Add, {f[0].edge, f[1].edge}, f[0].forward});
  throw std::logic_error("no face with two sides");
}

}  // namespace

TEST(R1, AddAndRemove) {
  Diagram d = corpus("trefoil");
  for (int sign : {1, -1})
    for (bool over_first : {false, true}) {
      auto r = apply_move(d, {MoveKind::R1Add, {2}, true, sign, over_first});
      EXPECT_EQ(r.diagram.crossing_count(), 4);
      EXPECT_EQ(r.diagram.writhe(), d.writhe() + sign);
      EXPECT_TRUE(r.diagram.validate().empty());
      auto mono = face_of_size(r.diagram, 1);
      ASSERT_TRUE(mono);
      auto back = apply_move(r.diagram, {MoveKind::R1Remove, {(*mono)[0].edge}});
      EXPECT_TRUE(isomorphic(back.diagram, d));
    }
}

TEST(R1, RemoveNeedsAMonogon) {
  EXPECT_THROW(apply_move(corpus("trefoil"), {MoveKind::R1Remove, {1}}), PreconditionError);
  EXPECT_THROW(apply_move(corpus("trefoil"), {MoveKind::R1Add, {7}}), PreconditionError);
  EXPECT_THROW(apply_move(corpus("trefoil"), {MoveKind::R1Add, {1}, true, 0}), PreconditionError);
}

TEST(R1, KinkOnKinkAndBack) {
  Diagram d = corpus("unknot_kink");
  auto r = apply_move(d, {MoveKind::R1Remove, {d.faces()[0].size() == 1 ? d.faces()[0][0].edge : d.faces()[1][0].edge}});
  EXPECT_EQ(r.diagram.crossing_count(), 0);
  EXPECT_EQ(r.diagram.free_loops(), 1);
}

TEST(R2, AddAndRemove) {
  Diagram d = corpus("figure_eight");
  auto r = add_bigon(d);
  EXPECT_EQ(r.diagram.crossing_count(), 6);
  EXPECT_EQ(r.diagram.writhe(), d.writhe());
  EXPECT_EQ(r.pieces.size(), 6u);
  // the new bigon: the under side is under at both ends and goes first
  std::optional<Move> remove;
  for (const auto& f : r.diagram.faces()) {
    if (f.size() != 2) continue;
    for (int k : {0, 1}) {
      EdgeLabel u = f[static_cast<std::size_t>(k)].edge, o = f[static_cast<std::size_t>(1 - k)].edge;
      if (r.diagram.head(u).pos == 0 && r.diagram.tail(u).pos == 2 && r.diagram.head(o).pos != 0 &&
          r.diagram.tail(o).pos != 2)
        remove = Move{MoveKind::R2Remove, {u, o}};
    }
  }
  ASSERT_TRUE(remove);
  EXPECT_TRUE(isomorphic(apply_move(r.diagram, *remove).diagram, d));
}

TEST(R2, Errors) {
  Diagram d = corpus("trefoil");
  EXPECT_THROW(apply_move(d, {MoveKind::R2Add, {1, 1}}), PreconditionError);
  EXPECT_THROW(apply_move(d, {MoveKind::R2Remove, {1, 2}}), PreconditionError);
}

TEST(R3, IsAnInvolution) {
  Diagram d = corpus("trefoil");
  // scramble until a triangle admitting R3 shows up
  std::mt19937 rng(4);
  int applied = 0;
  for (int tries = 0; tries < 200 && applied < 5; ++tries) {
    Diagram base = oracle::scramble(d, 4, rng);
    for (const auto& f : base.faces()) {
      if (f.size() != 3) continue;
      MoveResult r;
      try {
        r = apply_move(base, {MoveKind::R3, {f[0].edge, f[1].edge, f[2].edge}});
      } catch (const PreconditionError&) {
        continue;
      }
      EXPECT_EQ(r.diagram.crossing_count(), base.crossing_count());
      EXPECT_EQ(r.diagram.writhe(), base.writhe());
      bool undone = false;
      for (const auto& g : r.diagram.faces()) {
        if (g.size() != 3) continue;
        try {
          auto back = apply_move(r.diagram, {MoveKind::R3, {g[0].edge, g[1].edge, g[2].edge}});
          undone = undone || isomorphic(back.diagram, base);
        } catch (const PreconditionError&) {
        }
      }
      EXPECT_TRUE(undone) << serialize_pd(base);
      ++applied;
      break;
    }
  }
  EXPECT_GE(applied, 5);
}

TEST(Moves, PreserveFoxCounts) {
  std::mt19937 rng(8);
  for (int i = 0; i < 40; ++i) {
    Diagram d = oracle::scramble(corpus(i % 2 ? "trefoil" : "figure_eight"), 3, rng);
    for (int n : {3, 5}) EXPECT_EQ(fox_coloring_count(d, n), oracle::brute_fox_count(i % 2 ? corpus("trefoil") : corpus("figure_eight"), n));
  }
}

TEST(Rewriter, CarriesColoringsThroughMoves) {
  Diagram d = oracle::chain(3);
  Coloring c = oracle::chain_coloring(d, {0, 2, 5});
  Rewriter rw(d, c);
  std::mt19937 rng(2);
  int applied = 0;
  for (int i = 0; i < 30; ++i) {
    auto faces = rw.diagram().faces();
    const Face& f = faces[rng() % faces.size()];
    const FaceSide& a = f[rng() % f.size()];
    const FaceSide& b = f[rng() % f.size()];
    try {
      if (f.size() == 3 && rng() % 2) rw.apply({MoveKind::R3, {f[0].edge, f[1].edge, f[2].edge}});
      else if (a.edge != b.edge) rw.apply({MoveKind::R2Add, {a.edge, b.edge}, a.forward});
      else rw.apply({MoveKind::R1Add, {a.edge}, true, rng() % 2 ? 1 : -1});
      ++applied;
    } catch (const PreconditionError&) {
    }
    ASSERT_TRUE(rw.coloring());
    ASSERT_TRUE(verify_coloring(rw.diagram(), *rw.coloring()));
  }
  EXPECT_GT(applied, 10);
  EXPECT_EQ(rw.trace().moves.size(), static_cast<std::size_t>(applied));
  EXPECT_TRUE(isomorphic(replay_trace(d, rw.trace()), rw.diagram()));
  auto rep = verify_local_equivalence(d, rw.diagram(), rw.trace());
  EXPECT_TRUE(rep.ok) << (rep.problems.empty() ? "" : rep.problems[0]);
}

TEST(Locality, DetectsTampering) {
  Diagram d = corpus("figure_eight");
  Rewriter rw(d);
  auto f = d.faces();
  rw.apply({MoveKind::R2Add, {f[0][0].edge, f[0][1].edge}, f[0][0].forward});
  MoveTrace t = rw.trace();
  ASSERT_TRUE(verify_local_equivalence(d, rw.diagram(), t).ok);

  MoveTrace unknown = t;
  unknown.moves[0].disk = 42;
  EXPECT_FALSE(verify_local_equivalence(d, rw.diagram(), unknown).ok);

  MoveTrace narrow = t;
  narrow.disks.begin()->second.clear();
  EXPECT_FALSE(verify_local_equivalence(d, rw.diagram(), narrow).ok);

  EXPECT_FALSE(verify_local_equivalence(d, corpus("trefoil"), t).ok);
}

TEST(CompleteColoring, ExtendsOrRefuses) {
  Diagram d = corpus("unlink_clasp");
  Coloring w = *is_z_colorable(d).witness;
  std::map<EdgeLabel, Integer> known;
  for (const auto& arc : d.arcs()) known[arc[0]] = w[arc[0]];
  auto full = complete_coloring(d, known);
  ASSERT_TRUE(full);
  EXPECT_EQ(*full, w);
  EXPECT_FALSE(complete_coloring(corpus("trefoil"), {{1, 0}, {2, 1}, {3, 7}}));
}
