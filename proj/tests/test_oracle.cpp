#include <gtest/gtest.h>

#include "ivc/checker.hpp"
#include "ivc/coloring.hpp"
#include "ivc/errors.hpp"
#include "ivc/generators.hpp"
#include "ivc/oracle.hpp"
#include "ivc/pathfactor.hpp"
#include "support.hpp"

namespace ivc {
namespace {

using test::make;

TEST(Oracle, PathFactorKnownAnswers) {
  EXPECT_FALSE(oracle_path_factor(claw_triple_graph()).has_value());
  const auto k = oracle_path_factor(k34());
  ASSERT_TRUE(k.has_value());
  EXPECT_TRUE(check_proper_path_factor(k34(), *k));
  const auto s = subset_graph_6();
  const auto f = oracle_path_factor(s.graph);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(check_proper_path_factor(s.graph, *f));
}

TEST(Oracle, PathFactorOutputAlwaysVerifiesAndColors) {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_34_biregular(1 + seed % 3, 7000 + seed, seed % 2 == 1);
    const auto f = oracle_path_factor(g);
    if (!f) continue;
    ++found;
    EXPECT_EQ(explain_path_factor(g, *f), std::nullopt) << "seed " << seed;
    const EdgeColoring c = color_from_factor(g, *f);
    EXPECT_TRUE(check_interval(g, c));
  }
  EXPECT_GT(found, 150u);
}

TEST(Oracle, IntervalColoringKnownAnswers) {
  EXPECT_FALSE(oracle_interval_coloring(k34(), 5).has_value());
  const auto c = oracle_interval_coloring(k34(), 6);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(check_interval(k34(), *c));
  for (int col : c->colors) {
    EXPECT_GE(col, 1);
    EXPECT_LE(col, 6);
  }
  const auto one = make(1, 1, {{0, 0}});
  const auto e = oracle_interval_coloring(one, 1);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->colors, (std::vector<int>{1}));
  // A 4-cycle needs only 2 colors; a star with three leaves needs 3.
  EXPECT_TRUE(oracle_interval_coloring(
                  make(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), 2)
                  .has_value());
  EXPECT_FALSE(
      oracle_interval_coloring(make(1, 3, {{0, 0}, {0, 1}, {0, 2}}), 2)
          .has_value());
}

TEST(Oracle, SixColorsWheneverAFactorExists) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_34_biregular(1, 300 + seed, false);
    if (!oracle_path_factor(g)) continue;
    const auto c = oracle_interval_coloring(g, 6);
    ASSERT_TRUE(c.has_value()) << "seed " << seed;
    EXPECT_TRUE(check_interval(g, *c));
  }
}

TEST(Oracle, ClawIsSixColorableWithoutAFactor) {
  // The converse direction fails: six colors suffice without any factor.
  const auto c = oracle_interval_coloring(claw_triple_graph(), 6);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(check_interval(claw_triple_graph(), *c));
}

TEST(Oracle, FullThreeRegularKnownAnswers) {
  EXPECT_FALSE(oracle_full_3regular(subset_graph_6().graph).has_value());
  EXPECT_FALSE(oracle_full_3regular(eight_triples_graph()).has_value());
  const auto c = oracle_full_3regular(claw_triple_graph());
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(check_full_3regular(claw_triple_graph(), *c));
  EXPECT_EQ(c->edges, (std::vector<EdgeId>{3, 4, 5, 6, 7, 8, 9, 10, 11}));
  const auto k = oracle_full_3regular(k34());
  ASSERT_TRUE(k.has_value());
  EXPECT_TRUE(check_full_3regular(k34(), *k));
}

TEST(Oracle, PathsFromEdges) {
  // x0 - y0 - x1 - y1 - x2 given out of order.
  const auto g = make(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  const PathFactor f = paths_from_edges(g, {2, 0, 3, 1});
  ASSERT_EQ(f.paths.size(), 1u);
  EXPECT_EQ(f.paths[0].vertices,
            (std::vector<VertexId>{xv(0), yv(0), xv(1), yv(1), xv(2)}));
  EXPECT_EQ(f.paths[0].edges, (std::vector<EdgeId>{0, 1, 2, 3}));
  // Leaving x2 uncovered is rejected.
  EXPECT_THROW(paths_from_edges(g, {0, 1}), CheckError);
  // So is a cycle.
  const auto c = make(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_THROW(paths_from_edges(c, {0, 1, 2, 3}), CheckError);
}

TEST(Oracle, AgreesWithSearchOnSmallMultigraphs) {
  // Up to 21 vertices, with and without multi-edges.
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_34_biregular(1 + seed % 3, 90'000 + seed, seed % 4 == 0);
    const auto r = search_proper_path_factor(g);
    ASSERT_NE(r.status, SearchStatus::Unknown);
    EXPECT_EQ(r.status == SearchStatus::Found, oracle_path_factor(g).has_value())
        << "seed " << 90'000 + seed;
  }
}

}  // namespace
}  // namespace ivc
