#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"
#include "ivc/transversal.hpp"

namespace ivc {

struct GraphWithFactor {
  BipartiteMultigraph graph;
  PathFactor factor;
};

/// X = the 20 3-subsets of {1..6}, Y = the 15 2-subsets, both in
/// lexicographic order; x ~ y iff y is contained in x. Edges are listed per
/// X-vertex in lexicographic order of its 2-subsets. The factor consists of
/// five paths of length 6.
GraphWithFactor subset_graph_6();

/// Label of a subset vertex, e.g. "124" for an X-vertex or "12" for a
/// Y-vertex of subset_graph_6.
std::string subset_label(VertexId v);

/// Y = {1..6} (indices 0..5); X-vertices have neighborhoods 123, 124, 235,
/// 346, 346, 145, 156, 256 in that order.
BipartiteMultigraph eight_triples_graph();

/// eight_triples_graph with the P7-factor
/// 123-1-124-2-235-3-346 and 346-4-145-5-156-6-256.
GraphWithFactor eight_triples_with_factor();

/// x1, x2, x3 each joined to y0, y1, y2 respectively by three parallel
/// edges, and x0 joined once to each of y0, y1, y2.
BipartiteMultigraph claw_triple_graph();

/// Complete bigraph with |X| = 4 and |Y| = 3; edges grouped by X.
BipartiteMultigraph k34();

/// Disjoint union of g1 and g2 (g2 relabelled after g1) with e1 = x1y1 and
/// e2 = x2y2 replaced in place by x1y2 and x2y1. Each input must be
/// 2-edge-connected, (3,4)-biregular, carry a P7-factor, and the chosen edge
/// must lie outside that factor; otherwise GraphError.
GraphWithFactor two_switch(const BipartiteMultigraph& g1, const PathFactor& f1,
                           EdgeId e1, const BipartiteMultigraph& g2,
                           const PathFactor& f2, EdgeId e2);

/// F made of k/2 4-cycles and k/3 3-cycles whose triple system has no
/// independent transversal. k must be a positive multiple of 6.
FConstruction independent_obstruction(std::size_t k);

/// F made of 3k/2 2-cycles whose triple system has no spread transversal.
/// k must be a positive even number.
FConstruction spread_obstruction(std::size_t k);

/// independent_obstruction(12) and spread_obstruction(8) side by side with
/// the first vertex of each exchanged between the two F's. The result has a
/// connected F* and no mixed transversal. Vertices 0..35 belong to the
/// first part (triple i holds 3i, 3i+1, 3i+2), 36..59 to the second.
FConstruction no_mixed_transversal_instance();

/// Configuration model with 4k X-vertices of degree 3 and 3k Y-vertices of
/// degree 4, deterministic per (k, seed). With simple_only the draw is
/// repeated until the result is simple (at most 10^4 attempts, then
/// GraphError). Edges are sorted by (x, y).
BipartiteMultigraph random_34_biregular(std::size_t k, std::uint64_t seed,
                                        bool simple_only);

}  // namespace ivc
