#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivc/bigraph.hpp"

namespace ivc {

/// Total map EdgeId -> color. Colors are positive; 0 marks an uncolored edge.
struct EdgeColoring {
  std::vector<int> colors;
  int palette_size = 0;
};

/// A path stored with explicit edges: edges[i] joins vertices[i] and
/// vertices[i + 1]. Length is the edge count.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
};

struct PathFactor {
  std::vector<Path> paths;
};

/// An edge set; used for full 3-regular subgraphs.
struct SubgraphCertificate {
  std::vector<EdgeId> edges;
};

/// Throws CheckError if the coloring is not total on E(g) or a color lies
/// outside 1..palette_size.
void require_total(const BipartiteMultigraph& g, const EdgeColoring& coloring);

bool check_proper(const BipartiteMultigraph& g, const EdgeColoring& coloring);

struct IntervalViolation {
  VertexId vertex;
  std::vector<int> colors;  // sorted incident colors
};

/// First vertex (in X-then-Y order) whose incident colors are not
/// consecutive. Throws CheckError if the coloring is improper.
std::optional<IntervalViolation> find_interval_violation(
    const BipartiteMultigraph& g, const EdgeColoring& coloring);

bool check_interval(const BipartiteMultigraph& g, const EdgeColoring& coloring);

/// Reason the factor is not a proper path-factor, or nullopt when it is a
/// proper path-factor. Throws CheckError for dangling edge or vertex ids.
std::optional<std::string> explain_path_factor(const BipartiteMultigraph& g,
                                               const PathFactor& factor);

/// Spanning, vertex-disjoint paths whose consecutive vertices are joined by
/// the named edges, both ends in X and every length in {2, 4, 6, 8}.
bool check_proper_path_factor(const BipartiteMultigraph& g,
                              const PathFactor& factor);

/// Every Y-vertex has degree 3 and every X-vertex degree 0 or 3 in the edge
/// set. Duplicate or out-of-range ids make the certificate invalid.
bool check_full_3regular(const BipartiteMultigraph& g,
                         const SubgraphCertificate& cert);

/// Edges of the factor as a membership mask over E(g).
std::vector<bool> factor_edge_mask(const BipartiteMultigraph& g,
                                   const PathFactor& factor);

}  // namespace ivc
