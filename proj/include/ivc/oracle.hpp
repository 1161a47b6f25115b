#pragma once

#include <optional>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"

namespace ivc {

/// Exhaustive proper path-factor search. Every Y-vertex takes exactly two
/// of its edges, chosen Y by Y, under a rollback union-find that rejects
/// cycles, X-degree above 2 and components above 8 edges. Definitive.
std::optional<PathFactor> oracle_path_factor(const BipartiteMultigraph& g);

/// Interval coloring with colors 1..k by edge-by-edge backtracking, pruning
/// any vertex whose colors already span more than its degree. Definitive.
std::optional<EdgeColoring> oracle_interval_coloring(
    const BipartiteMultigraph& g, int k);

/// Full 3-regular subgraph by trying every set of |X| - |Y| X-vertices to
/// drop and testing the rest with a max-flow degree check. Definitive.
std::optional<SubgraphCertificate> oracle_full_3regular(
    const BipartiteMultigraph& g);

/// Paths of a spanning subgraph whose components are paths with both ends
/// in X, in order of their lowest end. Throws CheckError otherwise.
PathFactor paths_from_edges(const BipartiteMultigraph& g,
                            const std::vector<EdgeId>& edges);

}  // namespace ivc
