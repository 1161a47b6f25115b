#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"

namespace ivc {

/// Q = G - E(P), split into its components: even cycles (edge sequences
/// starting at the cycle's lowest edge id) and paths joining two X-vertices
/// of Q-degree 1 (oriented from the lower-indexed endpoint).
struct QDecomposition {
  std::vector<std::vector<EdgeId>> cycles;
  std::vector<Path> paths;
};

/// Throws CheckError if `factor` is not a proper path-factor of g.
QDecomposition build_q(const BipartiteMultigraph& g, const PathFactor& factor);

enum class PEdgeKind : std::uint8_t {
  SameLength6,   // the two internal X-vertices of a length-6 component
  Distance4In8,  // the 2nd and 4th X-vertices of a length-8 component
  QPathEnds,     // the two ends of one Q-path
};

struct PGraphEdge {
  std::size_t u = 0;  // X index
  std::size_t v = 0;  // X index
  PEdgeKind kind = PEdgeKind::QPathEnds;
};

/// Auxiliary graph on the X-vertices that have degree 2 in the factor.
struct PGraph {
  std::vector<std::size_t> vertices;  // ascending X indices
  std::vector<PGraphEdge> edges;
};

PGraph build_pgraph(const BipartiteMultigraph& g, const PathFactor& factor);
PGraph build_pgraph(const BipartiteMultigraph& g, const PathFactor& factor,
                    const QDecomposition& q);

/// Throws InvariantError unless every vertex has exactly one QPathEnds edge
/// and degree at most 2.
void validate_pgraph(const PGraph& pg);

enum class Side : std::uint8_t { A, B };

using TwoColoring = std::map<std::size_t, Side>;

/// BFS from the lowest uncolored vertex, roots colored A. An odd cycle
/// raises InvariantError.
TwoColoring two_color_pgraph(const PGraph& pg);

/// Edge set of a (1,2)-biregular spanning subgraph of a (2,4)-biregular
/// graph whose components are all P3 with ends on the degree-2 side.
struct HalfFactor {
  std::vector<EdgeId> edges;  // ascending
};

enum class Parity : std::uint8_t { Even, Odd };

/// Takes every other edge of an Eulerian circuit in each component.
/// `start_shift` rotates which vertex of each component starts the circuit.
/// Throws GraphError unless h is (2,4)-biregular.
HalfFactor p3_half_factor(const BipartiteMultigraph& h,
                          Parity parity = Parity::Even,
                          std::size_t start_shift = 0);

bool is_half_factor(const BipartiteMultigraph& h, const HalfFactor& half);

/// k pairwise disjoint Y-neighborhoods covering X (|X| = 4k), as ascending Y
/// indices; nullopt if none exists. Throws GraphError unless g is
/// (3,4)-biregular.
std::optional<std::vector<std::size_t>> find_y_cover(
    const BipartiteMultigraph& g);

enum class Via24Status : std::uint8_t { Found, NoYCover, Degenerate };

struct Via24Result {
  Via24Status status = Via24Status::NoYCover;
  std::optional<PathFactor> factor;
  std::vector<std::size_t> y_cover;
  std::size_t attempts = 0;
};

/// P7-factor built from an exact Y-cover: P3 half-factor of G - Ŷ, then a
/// half-factor of the contracted graph joins pairs of P3s through each
/// u in Ŷ.
Via24Result p7_factor_via_24(const BipartiteMultigraph& g);

enum class SearchStatus : std::uint8_t { Found, None, Unknown };

std::string to_string(SearchStatus s);

struct SearchConfig {
  std::uint64_t max_nodes = 10'000'000;  // 0 disables the bound
  // Path lengths the factor search may use; {6} asks for a P7-factor.
  std::vector<std::size_t> lengths{2, 4, 6, 8};
};

struct FactorSearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<PathFactor> factor;
  std::uint64_t nodes = 0;
};

/// Exhaustive search over path covers grown around the lowest uncovered
/// X-vertex. Unknown means the node bound was hit.
FactorSearchResult search_proper_path_factor(const BipartiteMultigraph& g,
                                             const SearchConfig& config = {});

struct Full3SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<SubgraphCertificate> certificate;
  std::vector<std::size_t> deleted_x;
  std::uint64_t nodes = 0;
};

/// Full 3-regular subgraph search. Each X-vertex has degree 3, so it keeps
/// all or none of its edges; the kept Y-degrees are all 3 exactly when the
/// deleted X-vertices have disjoint 3-element neighborhoods covering Y. This
/// is solved as an exact cover of Y.
Full3SearchResult search_full_3regular(const BipartiteMultigraph& g,
                                       const SearchConfig& config = {});

}  // namespace ivc
