#include "ivc/coloring.hpp"

#include <algorithm>
#include <array>

#include "ivc/errors.hpp"
#include "ivc/pathfactor.hpp"

namespace ivc {

namespace {

// Colors along a factor path, read from its first vertex. `first_internal`
// and `central` are the sides of the relevant internal X-vertices.
std::vector<int> pattern(std::size_t length, Side first_internal,
                         Side central) {
  switch (length) {
    case 2:
      return {2, 5};
    case 4:
      return central == Side::A ? std::vector<int>{2, 1, 2, 5}
                                : std::vector<int>{2, 5, 6, 5};
    case 6:
      return first_internal == Side::A ? std::vector<int>{2, 1, 2, 5, 6, 5}
                                       : std::vector<int>{5, 6, 5, 2, 1, 2};
    case 8: {
      const std::array<int, 2> mid =
          central == Side::A ? std::array<int, 2>{1, 2}
                             : std::array<int, 2>{5, 6};
      if (first_internal == Side::A)
        return {2, 1, 2, mid[0], mid[1], 5, 6, 5};
      return {5, 6, 5, mid[1], mid[0], 2, 1, 2};
    }
    default:
      throw InvariantError("factor path of length " + std::to_string(length));
  }
}

}  // namespace

EdgeColoring color_from_factor(const BipartiteMultigraph& g,
                               const PathFactor& factor) {
  const QDecomposition q = build_q(g, factor);
  const PGraph pg = build_pgraph(g, factor, q);
  const TwoColoring side = two_color_pgraph(pg);

  EdgeColoring out;
  out.palette_size = 6;
  out.colors.assign(g.edge_count(), 0);

  for (const auto& cycle : q.cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out.colors[cycle[i]] = i % 2 == 0 ? 3 : 4;

  for (const Path& qp : q.paths) {
    const bool a_first = side.at(qp.front().index) == Side::A;
    if (side.at(qp.back().index) == side.at(qp.front().index))
      throw InvariantError("Q-path ends share a side");
    // 3 on the edge at the A end, alternating to 4 at the B end.
    const std::size_t n = qp.edges.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t from_a = a_first ? i : n - 1 - i;
      out.colors[qp.edges[i]] = from_a % 2 == 0 ? 3 : 4;
    }
  }

  for (const Path& p : factor.paths) {
    const std::size_t len = p.length();
    // Short paths: the end whose edge has the lower id takes color 2.
    bool reversed = len <= 4 && p.edges.back() < p.edges.front();
    Side first_internal = Side::A;
    Side central = Side::A;
    if (len == 4) central = side.at(p.vertices[2].index);
    if (len == 6) first_internal = side.at(p.vertices[2].index);
    if (len == 8) {
      first_internal = side.at(p.vertices[2].index);
      central = side.at(p.vertices[4].index);
    }
    const auto colors = pattern(len, first_internal, central);
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t k = reversed ? len - 1 - i : i;
      out.colors[p.edges[k]] = colors[i];
    }
  }

  if (!check_proper(g, out))
    throw InvariantError("path-factor coloring is not proper");
  if (auto bad = find_interval_violation(g, out)) {
    std::string cs;
    for (int c : bad->colors) cs += " " + std::to_string(c);
    throw InvariantError("path-factor coloring is not interval at " +
                         to_string(bad->vertex) + ":" + cs);
  }
  return out;
}

std::vector<VertexColors> color_summary(const BipartiteMultigraph& g,
                                        const EdgeColoring& coloring) {
  require_total(g, coloring);
  std::vector<VertexColors> out;
  out.reserve(g.vertex_count());
  for (std::size_t f = 0; f < g.vertex_count(); ++f) {
    VertexColors vc;
    vc.vertex = g.from_flat(f);
    for (EdgeId e : g.incident(vc.vertex)) vc.colors.push_back(coloring.colors[e]);
    std::sort(vc.colors.begin(), vc.colors.end());
    if (!vc.colors.empty()) {
      vc.low = vc.colors.front();
      vc.high = vc.colors.back();
      vc.interval =
          std::adjacent_find(vc.colors.begin(), vc.colors.end()) ==
              vc.colors.end() &&
          static_cast<std::size_t>(vc.high - vc.low) + 1 == vc.colors.size();
    } else {
      vc.interval = true;
    }
    out.push_back(std::move(vc));
  }
  return out;
}

}  // namespace ivc
