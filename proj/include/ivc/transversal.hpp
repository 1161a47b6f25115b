#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"

namespace ivc {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Proper 3-edge-coloring (colors 1..3, indexed by edge id of h) of a
/// 3-regular bipartite multigraph, built from three successive perfect
/// matchings (augmenting paths, X and edges in ascending order). Throws
/// GraphError unless h is 3-regular.
std::vector<int> proper_3_edge_color(const BipartiteMultigraph& h);

/// 3-edge-coloring of the certificate's edges, indexed by edge id of g with
/// 0 on edges outside the certificate. Throws CheckError for an invalid
/// certificate.
std::vector<int> color_certificate(const BipartiteMultigraph& g,
                                   const SubgraphCertificate& cert);

/// Renames color c to perm[c - 1]; 0 stays 0.
std::vector<int> permute_colors(std::vector<int> colors,
                                const std::array<int, 3>& perm);

/// Directed edge u -> v of F. Edges produced from a graph carry the X-vertex
/// whose color-1 edge reaches u and color-2 edge reaches v.
struct FEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t via_x = kNone;
  EdgeId color1 = kNone;
  EdgeId color2 = kNone;
};

/// edges[i] runs from vertices[i] to vertices[(i + 1) % size]; vertices are
/// listed in the forward direction.
struct FCycle {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
};

/// 2-regular graph on Y whose edges, read u -> v, form directed cycles.
/// Loops (u == v) are allowed and form 1-cycles.
struct FGraph {
  std::size_t vertex_count = 0;
  std::vector<FEdge> edges;
  std::vector<FCycle> cycles;  // ordered by smallest vertex
  std::vector<std::size_t> cycle_of;
  std::vector<std::size_t> position;  // index within its cycle
};

/// Validates in/out-degree 1 everywhere and computes the cycles. Throws
/// InvariantError otherwise.
FGraph make_fgraph(std::size_t vertex_count, std::vector<FEdge> edges);

/// Disjoint triples partitioning the vertex set of F. centers[i] is the
/// X-vertex whose neighborhood is triple i (empty for synthetic systems).
struct TripleSystem {
  std::vector<std::array<std::size_t, 3>> triples;
  std::vector<std::size_t> centers;
};

/// Throws InvariantError unless the triples partition 0..vertex_count-1.
void validate_triples(const TripleSystem& ts, std::size_t vertex_count);

struct FConstruction {
  FGraph f;
  TripleSystem triples;
};

/// F from colors 1 and 2 of the certificate coloring: every X-vertex of the
/// certificate contributes one edge joining the far ends of its color-1 and
/// color-2 edges (directed color-1 end first). Triples are the
/// neighborhoods of the X-vertices outside the certificate, in X order.
FConstruction build_f(const BipartiteMultigraph& g,
                      const SubgraphCertificate& cert,
                      const std::vector<int>& coloring);

/// F plus a triangle on every triple.
struct FStar {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::size_t> degrees() const;
};

FStar build_fstar(const FGraph& f, const TripleSystem& ts);

struct FStarComponent {
  std::vector<std::size_t> triples;   // ascending
  std::vector<std::size_t> vertices;  // ascending
  std::vector<std::size_t> cycles;    // ascending F-cycle indices
};

/// Components of F*, ordered by smallest triple index.
std::vector<FStarComponent> fstar_components(const FGraph& f,
                                             const TripleSystem& ts);

enum class TransversalKind : std::uint8_t { Independent, Spread };

struct TaggedComponent {
  FStarComponent component;
  TransversalKind kind = TransversalKind::Independent;
};

/// chosen[i] is the element picked from triple i, or kNone for triples
/// outside the components listed in `parts`.
struct Transversal {
  std::vector<std::size_t> chosen;
  std::vector<TaggedComponent> parts;
};

/// One element per triple of the component, no two F-adjacent and none on
/// an F-loop.
bool is_independent_on(const FGraph& f, const TripleSystem& ts,
                       const FStarComponent& component,
                       const std::vector<std::size_t>& chosen);

/// One element per triple of the component, and every unchosen vertex on
/// the component's cycles has a chosen vertex among the next three in the
/// forward direction. `reversed[c]` flips cycle c; empty means all forward.
bool is_spread_on(const FGraph& f, const TripleSystem& ts,
                  const FStarComponent& component,
                  const std::vector<std::size_t>& chosen,
                  const std::vector<bool>& reversed = {});

std::optional<Transversal> find_independent_transversal(
    const FGraph& f, const TripleSystem& ts, const FStarComponent& component);

/// Spread is decided on the forward orientation: on a cycle the condition
/// says every maximal run of unchosen vertices has length at most 3 and the
/// cycle meets the set, which reads the same in both directions.
std::optional<Transversal> find_spread_transversal(
    const FGraph& f, const TripleSystem& ts, const FStarComponent& component);

/// Per F*-component: independent if possible, otherwise spread.
std::optional<Transversal> find_mixed_transversal(const FGraph& f,
                                                  const TripleSystem& ts);

/// Proper path-factor from a mixed transversal. Independent components use
/// the length-4 paths through each triple's centre extended by color-2
/// edges; spread components cut each forward F-cycle before every chosen
/// vertex and expand the remaining F-edges into G. Throws CheckError if the
/// transversal does not match its tags.
PathFactor factor_from_mixed_transversal(const BipartiteMultigraph& g,
                                         const SubgraphCertificate& cert,
                                         const std::vector<int>& coloring,
                                         const Transversal& transversal);

}  // namespace ivc
