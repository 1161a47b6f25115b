#include "ivc/checker.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ivc/errors.hpp"

namespace ivc {

void require_total(const BipartiteMultigraph& g, const EdgeColoring& coloring) {
  if (coloring.colors.size() != g.edge_count()) {
    throw CheckError("coloring has " + std::to_string(coloring.colors.size()) +
                     " entries for " + std::to_string(g.edge_count()) +
                     " edges");
  }
  std::vector<EdgeId> uncolored;
  for (EdgeId e = 0; e < coloring.colors.size(); ++e) {
    const int c = coloring.colors[e];
    if (c <= 0) {
      uncolored.push_back(e);
    } else if (c > coloring.palette_size) {
      throw CheckError("edge " + std::to_string(e) + " has color " +
                       std::to_string(c) + " outside palette 1.." +
                       std::to_string(coloring.palette_size));
    }
  }
  if (!uncolored.empty()) {
    std::ostringstream msg;
    msg << "uncolored edges:";
    for (EdgeId e : uncolored) msg << ' ' << e;
    throw CheckError(msg.str());
  }
}

namespace {

std::vector<int> incident_colors(const BipartiteMultigraph& g,
                                 const EdgeColoring& coloring, VertexId v) {
  std::vector<int> cs;
  for (EdgeId e : g.incident(v)) cs.push_back(coloring.colors[e]);
  std::sort(cs.begin(), cs.end());
  return cs;
}

template <typename Fn>
void for_each_vertex(const BipartiteMultigraph& g, Fn&& fn) {
  for (std::size_t i = 0; i < g.x_count(); ++i)
    if (!fn(xv(i))) return;
  for (std::size_t j = 0; j < g.y_count(); ++j)
    if (!fn(yv(j))) return;
}

}  // namespace

bool check_proper(const BipartiteMultigraph& g, const EdgeColoring& coloring) {
  require_total(g, coloring);
  bool ok = true;
  for_each_vertex(g, [&](VertexId v) {
    const auto cs = incident_colors(g, coloring, v);
    ok = std::adjacent_find(cs.begin(), cs.end()) == cs.end();
    return ok;
  });
  return ok;
}

std::optional<IntervalViolation> find_interval_violation(
    const BipartiteMultigraph& g, const EdgeColoring& coloring) {
  if (!check_proper(g, coloring))
    throw CheckError("interval property is undefined for an improper coloring");
  std::optional<IntervalViolation> bad;
  for_each_vertex(g, [&](VertexId v) {
    auto cs = incident_colors(g, coloring, v);
    if (!cs.empty() &&
        static_cast<std::size_t>(cs.back() - cs.front()) + 1 != cs.size()) {
      bad = IntervalViolation{v, std::move(cs)};
      return false;
    }
    return true;
  });
  return bad;
}

bool check_interval(const BipartiteMultigraph& g,
                    const EdgeColoring& coloring) {
  return !find_interval_violation(g, coloring).has_value();
}

std::optional<std::string> explain_path_factor(const BipartiteMultigraph& g,
                                               const PathFactor& factor) {
  std::vector<bool> covered(g.vertex_count(), false);
  std::vector<bool> edge_used(g.edge_count(), false);
  for (std::size_t p = 0; p < factor.paths.size(); ++p) {
    const Path& path = factor.paths[p];
    const std::string where = "path " + std::to_string(p);
    for (VertexId v : path.vertices)
      if (!g.contains(v))
        throw CheckError(where + " names missing vertex " + to_string(v));
    for (EdgeId e : path.edges)
      if (e >= g.edge_count())
        throw CheckError(where + " names dangling edge " + std::to_string(e));

    if (path.vertices.empty() || path.vertices.size() != path.edges.size() + 1)
      return where + " has mismatched vertex and edge counts";
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
      const Edge& ed = g.edge(path.edges[i]);
      VertexId a = path.vertices[i], b = path.vertices[i + 1];
      if (a.part == Part::Y) std::swap(a, b);
      if (a.part != Part::X || b.part != Part::Y || ed.x != a.index ||
          ed.y != b.index)
        return where + " edge " + std::to_string(path.edges[i]) +
               " does not join " + to_string(path.vertices[i]) + " and " +
               to_string(path.vertices[i + 1]);
      if (edge_used[path.edges[i]])
        return where + " reuses edge " + std::to_string(path.edges[i]);
      edge_used[path.edges[i]] = true;
    }
    for (VertexId v : path.vertices) {
      const std::size_t f = g.flat(v);
      if (covered[f]) return "vertex " + to_string(v) + " covered twice";
      covered[f] = true;
    }
    if (path.front().part != Part::X || path.back().part != Part::X)
      return where + " has an endpoint outside X";
    const std::size_t len = path.length();
    if (len != 2 && len != 4 && len != 6 && len != 8)
      return where + " has length " + std::to_string(len);
  }
  for (std::size_t f = 0; f < covered.size(); ++f)
    if (!covered[f]) return "vertex " + to_string(g.from_flat(f)) + " uncovered";
  return std::nullopt;
}

bool check_proper_path_factor(const BipartiteMultigraph& g,
                              const PathFactor& factor) {
  return !explain_path_factor(g, factor).has_value();
}

bool check_full_3regular(const BipartiteMultigraph& g,
                         const SubgraphCertificate& cert) {
  std::vector<std::size_t> dx(g.x_count(), 0), dy(g.y_count(), 0);
  std::set<EdgeId> seen;
  for (EdgeId e : cert.edges) {
    if (e >= g.edge_count() || !seen.insert(e).second) return false;
    ++dx[g.edge(e).x];
    ++dy[g.edge(e).y];
  }
  for (std::size_t d : dy)
    if (d != 3) return false;
  for (std::size_t d : dx)
    if (d != 0 && d != 3) return false;
  return true;
}

std::vector<bool> factor_edge_mask(const BipartiteMultigraph& g,
                                   const PathFactor& factor) {
  std::vector<bool> mask(g.edge_count(), false);
  for (const Path& p : factor.paths)
    for (EdgeId e : p.edges) {
      if (e >= g.edge_count())
        throw CheckError("factor names dangling edge " + std::to_string(e));
      mask[e] = true;
    }
  return mask;
}

}  // namespace ivc
