// Shared helpers for the test suites: small independent reference
// computations and random instance sources.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ivc/bigraph.hpp"
#include "ivc/generators.hpp"
#include "ivc/pathfactor.hpp"

namespace ivc::test {

inline BipartiteMultigraph make(std::size_t nx, std::size_t ny,
                                std::vector<EdgePair> edges) {
  return BipartiteMultigraph::build(nx, ny, edges);
}

/// Connectivity by repeated relabelling, ignoring the edges in `skip`.
inline bool connected_without(const BipartiteMultigraph& g,
                              const std::set<EdgeId>& skip = {}) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (skip.count(e)) continue;
      const std::size_t a = g.flat(xv(g.edge(e).x));
      const std::size_t b = g.flat(yv(g.edge(e).y));
      const std::size_t m = std::min(label[a], label[b]);
      if (label[a] != m || label[b] != m) {
        label[a] = label[b] = m;
        changed = true;
      }
    }
  }
  return std::all_of(label.begin(), label.end(),
                     [](std::size_t l) { return l == 0; });
}

/// Y-cover by trying every k-subset of Y.
inline std::optional<std::vector<std::size_t>> brute_y_cover(
    const BipartiteMultigraph& g) {
  const std::size_t k = g.x_count() / 4;
  std::vector<bool> pick(g.y_count(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  std::sort(pick.begin(), pick.end(), std::greater<>());
  do {
    std::vector<int> hits(g.x_count(), 0);
    std::vector<std::size_t> chosen;
    for (std::size_t y = 0; y < g.y_count(); ++y) {
      if (!pick[y]) continue;
      chosen.push_back(y);
      for (EdgeId e : g.incident(yv(y))) ++hits[g.edge(e).x];
    }
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }))
      return chosen;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

/// G minus the given Y-vertices.
inline Subgraph remove_y(const BipartiteMultigraph& g,
                         const std::vector<std::size_t>& ys) {
  std::vector<bool> keep_x(g.x_count(), true), keep_y(g.y_count(), true);
  for (std::size_t y : ys) keep_y[y] = false;
  return induced_subgraph(g, keep_x, keep_y);
}

/// Random (3,4)-biregular graphs that have an exact Y-cover, drawn from
/// consecutive seeds starting at `seed`.
inline std::vector<BipartiteMultigraph> random_with_y_cover(
    std::size_t count, std::uint64_t seed, bool simple, std::size_t max_k) {
  std::vector<BipartiteMultigraph> out;
  for (std::uint64_t s = seed; out.size() < count; ++s) {
    const std::size_t k = 1 + s % max_k;
    BipartiteMultigraph g = random_34_biregular(k, s, simple);
    if (find_y_cover(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ivc::test
