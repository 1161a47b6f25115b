#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ivc {

enum class Part : std::uint8_t { X, Y };

/// A vertex named by its side of the bipartition and its index within that
/// side. Orders all X-vertices before all Y-vertices.
struct VertexId {
  Part part = Part::X;
  std::size_t index = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline VertexId xv(std::size_t i) { return {Part::X, i}; }
inline VertexId yv(std::size_t i) { return {Part::Y, i}; }

/// "x3" / "y0".
std::string to_string(VertexId v);

/// Positional identity of one edge instance. Parallel edges get distinct ids.
using EdgeId = std::size_t;

struct Edge {
  std::size_t x = 0;
  std::size_t y = 0;
};

using EdgePair = std::pair<std::size_t, std::size_t>;

/// Bipartite multigraph with parts X and Y. The edge list is the only source
/// of truth; incidence lists are derived on construction and never change.
class BipartiteMultigraph {
 public:
  BipartiteMultigraph() = default;

  /// Edge ids are assigned 0..m-1 in input order. Throws GraphError on an
  /// out-of-range endpoint.
  static BipartiteMultigraph build(std::size_t x_count, std::size_t y_count,
                                   std::span<const EdgePair> edges);

  std::size_t x_count() const { return x_count_; }
  std::size_t y_count() const { return y_count_; }
  std::size_t vertex_count() const { return x_count_ + y_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::vector<EdgePair> edge_pairs() const;

  /// Incident edge ids in ascending order.
  std::span<const EdgeId> incident(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident(v).size(); }

  VertexId other_end(EdgeId e, VertexId v) const;
  bool contains(VertexId v) const;

  /// Dense index: X-vertices first, then Y-vertices.
  std::size_t flat(VertexId v) const {
    return v.part == Part::X ? v.index : x_count_ + v.index;
  }
  VertexId from_flat(std::size_t i) const {
    return i < x_count_ ? xv(i) : yv(i - x_count_);
  }

 private:
  std::size_t x_count_ = 0;
  std::size_t y_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> x_incident_;
  std::vector<std::vector<EdgeId>> y_incident_;
};

struct DegreeProfile {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
};

DegreeProfile degree_profile(const BipartiteMultigraph& g);

/// Every X-vertex has degree a and every Y-vertex has degree b.
bool is_biregular(const BipartiteMultigraph& g, std::size_t a, std::size_t b);

/// No vertex pair carries two or more edges.
bool is_simple(const BipartiteMultigraph& g);

/// Connected components, each sorted ascending; components ordered by their
/// smallest vertex. Isolated vertices form singleton components.
std::vector<std::vector<VertexId>> components(const BipartiteMultigraph& g);

/// Closed walk through every edge of `component` exactly once (Hierholzer,
/// lowest unused edge id first, starting at the smallest vertex). Throws
/// GraphError naming the first odd-degree vertex.
std::vector<EdgeId> eulerian_circuit(const BipartiteMultigraph& g,
                                     std::span<const VertexId> component);

/// Same walk started at `start`, which must belong to `component`.
std::vector<EdgeId> eulerian_circuit(const BipartiteMultigraph& g,
                                     std::span<const VertexId> component,
                                     VertexId start);

/// Connected, at least one vertex, and no bridges.
bool is_two_edge_connected(const BipartiteMultigraph& g);

/// A subgraph stored as its own graph plus the maps back into the parent.
struct Subgraph {
  BipartiteMultigraph graph;
  std::vector<EdgeId> parent_edge;
  std::vector<std::size_t> parent_x;
  std::vector<std::size_t> parent_y;
};

/// Keeps the flagged vertices (reindexed in ascending order) and every edge
/// with both ends kept, in parent edge order.
Subgraph induced_subgraph(const BipartiteMultigraph& g,
                          const std::vector<bool>& keep_x,
                          const std::vector<bool>& keep_y);

/// Subgraph formed by the given edges and their endpoints.
Subgraph edge_subgraph(const BipartiteMultigraph& g,
                       std::span<const EdgeId> edge_ids);

/// Disjoint union; the second graph's vertices and edges follow the first's.
BipartiteMultigraph disjoint_union(const BipartiteMultigraph& a,
                                   const BipartiteMultigraph& b);

}  // namespace ivc
