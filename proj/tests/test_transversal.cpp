#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ivc/coloring.hpp"
#include "ivc/errors.hpp"
#include "ivc/generators.hpp"
#include "ivc/pathfactor.hpp"
#include "ivc/transversal.hpp"

namespace ivc {
namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms = {
    {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};

// K_{3,4} with x0 outside the certificate and a hand-picked Latin-square
// coloring of x1..x3: F is the directed 3-cycle y0 -> y1 -> y2 -> y0.
struct K34Setup {
  BipartiteMultigraph g = k34();
  SubgraphCertificate cert{{3, 4, 5, 6, 7, 8, 9, 10, 11}};
  std::vector<int> colors{0, 0, 0, 1, 2, 3, 2, 3, 1, 3, 1, 2};
};

TEST(Transversal, ThreeEdgeColoringIsProper) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = random_34_biregular(1 + seed % 3, seed, seed % 2 == 0);
    const auto full = search_full_3regular(g);
    if (!full.certificate) continue;
    const auto colors = color_certificate(g, *full.certificate);
    std::vector<bool> in_cert(g.edge_count(), false);
    for (EdgeId e : full.certificate->edges) in_cert[e] = true;
    for (std::size_t f = 0; f < g.vertex_count(); ++f) {
      std::vector<int> seen;
      for (EdgeId e : g.incident(g.from_flat(f)))
        if (in_cert[e]) seen.push_back(colors[e]);
      if (seen.empty()) continue;
      std::sort(seen.begin(), seen.end());
      EXPECT_EQ(seen, (std::vector<int>{1, 2, 3}));
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!in_cert[e]) EXPECT_EQ(colors[e], 0);
  }
  EXPECT_THROW(proper_3_edge_color(k34()), GraphError);
}

TEST(Transversal, PermuteColorsKeepsZero) {
  EXPECT_EQ(permute_colors({0, 1, 2, 3}, {3, 1, 2}),
            (std::vector<int>{0, 3, 1, 2}));
}

TEST(Transversal, BuildFOnK34) {
  const K34Setup s;
  const FConstruction fc = build_f(s.g, s.cert, s.colors);
  ASSERT_EQ(fc.f.cycles.size(), 1u);
  EXPECT_EQ(fc.f.cycles[0].vertices, (std::vector<std::size_t>{0, 1, 2}));
  ASSERT_EQ(fc.triples.triples.size(), 1u);
  EXPECT_EQ(fc.triples.triples[0], (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_EQ(fc.triples.centers, (std::vector<std::size_t>{0}));
  const FEdge& e = fc.f.edges[fc.f.cycles[0].edges[0]];
  EXPECT_EQ(e.via_x, 1u);
  EXPECT_EQ(e.color1, 3u);
  EXPECT_EQ(e.color2, 4u);
  EXPECT_EQ(build_fstar(fc.f, fc.triples).degrees(),
            (std::vector<std::size_t>{4, 4, 4}));
}

TEST(Transversal, BuildFRejectsBadColoring) {
  K34Setup s;
  s.colors[4] = 1;
  EXPECT_THROW(build_f(s.g, s.cert, s.colors), CheckError);
  s.colors.pop_back();
  EXPECT_THROW(build_f(s.g, s.cert, s.colors), CheckError);
}

TEST(Transversal, MakeFGraphRejectsNonCycles) {
  EXPECT_THROW(make_fgraph(2, {{0, 1}, {0, 1}}), InvariantError);
  EXPECT_THROW(make_fgraph(2, {{0, 1}}), InvariantError);
  const FGraph f = make_fgraph(3, {{2, 2}, {1, 0}, {0, 1}});
  ASSERT_EQ(f.cycles.size(), 2u);
  EXPECT_EQ(f.cycles[1].vertices, (std::vector<std::size_t>{2}));
  EXPECT_EQ(f.cycle_of, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(Transversal, IndependentCaseOnK34) {
  const K34Setup s;
  const FConstruction fc = build_f(s.g, s.cert, s.colors);
  const auto t = find_mixed_transversal(fc.f, fc.triples);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->chosen, (std::vector<std::size_t>{0}));
  EXPECT_EQ(t->parts[0].kind, TransversalKind::Independent);
  const PathFactor f = factor_from_mixed_transversal(s.g, s.cert, s.colors, *t);
  // mate(y1) y1 x0 y2 mate(y2), then y0 and its mate after x2.
  ASSERT_EQ(f.paths.size(), 1u);
  EXPECT_EQ(f.paths[0].vertices,
            (std::vector<VertexId>{xv(3), yv(1), xv(0), yv(2), xv(2), yv(0),
                                   xv(1)}));
  EXPECT_EQ(f.paths[0].edges, (std::vector<EdgeId>{10, 1, 2, 8, 6, 3}));
}

TEST(Transversal, SpreadCaseOnK34) {
  const K34Setup s;
  const FConstruction fc = build_f(s.g, s.cert, s.colors);
  const auto comps = fstar_components(fc.f, fc.triples);
  Transversal t{{0}, {{comps[0], TransversalKind::Spread}}};
  const PathFactor f = factor_from_mixed_transversal(s.g, s.cert, s.colors, t);
  ASSERT_EQ(f.paths.size(), 1u);
  EXPECT_EQ(f.paths[0].vertices,
            (std::vector<VertexId>{xv(0), yv(0), xv(1), yv(1), xv(3), yv(2),
                                   xv(2)}));
  EXPECT_EQ(f.paths[0].edges, (std::vector<EdgeId>{0, 3, 4, 10, 11, 8}));
}

TEST(Transversal, PredicatesOnASmallSystem) {
  // Triples {0,1,2} and {3,4,5}; F: 0 -> 3 -> 0 and the 4-cycle 1 2 4 5.
  const FGraph f =
      make_fgraph(6, {{0, 3}, {3, 0}, {1, 2}, {2, 4}, {4, 5}, {5, 1}});
  const TripleSystem ts{{{0, 1, 2}, {3, 4, 5}}, {}};
  const auto comps = fstar_components(f, ts);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_FALSE(is_independent_on(f, ts, comps[0], {0, 3}));
  EXPECT_TRUE(is_independent_on(f, ts, comps[0], {0, 4}));
  // {0, 3} covers the 2-cycle but leaves the 4-cycle empty.
  EXPECT_FALSE(is_spread_on(f, ts, comps[0], {0, 3}));
  EXPECT_FALSE(is_independent_on(f, ts, comps[0], {3, 0}));
}

TEST(Transversal, SpreadWindowIsThree) {
  // One 5-cycle 0..4 and a 1-vertex filler so the triples partition.
  const FGraph f = make_fgraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 5}});
  const TripleSystem ts{{{0, 5, 1}, {2, 3, 4}}, {}};
  const auto comps = fstar_components(f, ts);
  ASSERT_EQ(comps.size(), 1u);
  // Chosen {5, 2}: the loop at 5 is covered; on the 5-cycle the run after 2
  // is 3, 4, 0, 1, four long, so 3 has nothing within three steps.
  EXPECT_FALSE(is_spread_on(f, ts, comps[0], {5, 2}));
  // Chosen {0, 3}: runs 1,2 and 4 are short, but the loop at 5 is uncovered.
  EXPECT_FALSE(is_spread_on(f, ts, comps[0], {0, 3}));
  // Chosen {5, 4}: the 5-cycle run 0, 1, 2, 3 is too long either way.
  EXPECT_FALSE(is_spread_on(f, ts, comps[0], {5, 4}));
  EXPECT_FALSE(find_spread_transversal(f, ts, comps[0]).has_value());
}

TEST(Transversal, SpreadOrientationDoesNotMatter) {
  // Random 2-regular digraphs with random triples: forward and reversed
  // readings of the spread condition agree on every transversal.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 3, n = 3 * k;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<FEdge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, perm[i]});
    const FGraph f = make_fgraph(n, edges);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    TripleSystem ts;
    for (std::size_t i = 0; i < k; ++i)
      ts.triples.push_back({order[3 * i], order[3 * i + 1], order[3 * i + 2]});
    const std::vector<bool> flip(f.cycles.size(), true);
    for (const auto& comp : fstar_components(f, ts)) {
      for (std::size_t code = 0; code < static_cast<std::size_t>(std::pow(3, k));
           ++code) {
        std::size_t c = code;
        std::vector<std::size_t> chosen(k, kNone);
        for (std::size_t i = 0; i < k; ++i, c /= 3)
          chosen[i] = ts.triples[i][c % 3];
        EXPECT_EQ(is_spread_on(f, ts, comp, chosen),
                  is_spread_on(f, ts, comp, chosen, flip));
      }
    }
  }
}

TEST(Transversal, SearchesAgreeWithEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + rng() % 4, n = 3 * k;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<FEdge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, perm[i]});
    const FGraph f = make_fgraph(n, edges);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    TripleSystem ts;
    for (std::size_t i = 0; i < k; ++i)
      ts.triples.push_back({order[3 * i], order[3 * i + 1], order[3 * i + 2]});
    for (const auto& comp : fstar_components(f, ts)) {
      bool any_ind = false, any_spread = false;
      const std::size_t total = static_cast<std::size_t>(std::pow(3, k));
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        std::vector<std::size_t> chosen(k, kNone);
        for (std::size_t i = 0; i < k; ++i, c /= 3)
          chosen[i] = ts.triples[i][c % 3];
        any_ind = any_ind || is_independent_on(f, ts, comp, chosen);
        any_spread = any_spread || is_spread_on(f, ts, comp, chosen);
      }
      EXPECT_EQ(find_independent_transversal(f, ts, comp).has_value(), any_ind)
          << "trial " << trial;
      EXPECT_EQ(find_spread_transversal(f, ts, comp).has_value(), any_spread)
          << "trial " << trial;
    }
  }
}

TEST(Transversal, PipelineOnRandomSimpleInstances) {
  std::size_t built = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = random_34_biregular(1 + seed % 3, seed, true);
    const auto full = search_full_3regular(g);
    if (!full.certificate) continue;
    for (const auto& perm : kPerms) {
      const auto colors =
          permute_colors(color_certificate(g, *full.certificate), perm);
      const FConstruction fc = build_f(g, *full.certificate, colors);
      for (const auto& c : fc.f.cycles) EXPECT_GE(c.vertices.size(), 2u);
      const auto t = find_mixed_transversal(fc.f, fc.triples);
      if (!t) continue;
      const PathFactor f =
          factor_from_mixed_transversal(g, *full.certificate, colors, *t);
      EXPECT_EQ(explain_path_factor(g, f), std::nullopt);
      EXPECT_TRUE(check_interval(g, color_from_factor(g, f)));
      ++built;
    }
  }
  EXPECT_GT(built, 100u);
}

TEST(Transversal, ClawGraphHasLoopsAndNoMixedTransversal) {
  const auto g = claw_triple_graph();
  const SubgraphCertificate cert{{3, 4, 5, 6, 7, 8, 9, 10, 11}};
  const FConstruction fc = build_f(g, cert, color_certificate(g, cert));
  EXPECT_EQ(fc.f.cycles.size(), 3u);
  for (const auto& c : fc.f.cycles) EXPECT_EQ(c.vertices.size(), 1u);
  EXPECT_FALSE(find_mixed_transversal(fc.f, fc.triples).has_value());
}

}  // namespace
}  // namespace ivc
