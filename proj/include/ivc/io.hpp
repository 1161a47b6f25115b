#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ivc/bigraph.hpp"
#include "ivc/checker.hpp"
#include "ivc/transversal.hpp"

namespace ivc {

using Json = nlohmann::json;

/// {"x_count": n, "y_count": m, "edges": [[x, y], ...]} in edge id order.
Json graph_to_json(const BipartiteMultigraph& g);
BipartiteMultigraph graph_from_json(const Json& j);

/// "x3" / "y12".
VertexId parse_vertex(const std::string& s);

/// One array per path alternating vertex names and edge ids:
/// [["x0", 0, "y1", 3, "x2"], ...].
Json factor_to_json(const PathFactor& factor);
PathFactor factor_from_json(const Json& j);

/// Array of colors indexed by edge id.
Json coloring_to_json(const EdgeColoring& coloring);
EdgeColoring coloring_from_json(const Json& j);

/// {"edges": [...]}.
Json certificate_to_json(const SubgraphCertificate& cert);
SubgraphCertificate certificate_from_json(const Json& j);

/// {"vertex_count": n, "cycles": [[v, ...], ...], "triples": [[a, b, c], ...],
///  "centers": [...]}. Cycles are listed in their forward direction.
Json fconstruction_to_json(const FConstruction& fc);
FConstruction fconstruction_from_json(const Json& j);

/// {"chosen": [v or null per triple],
///  "components": [{"kind": "independent"|"spread", "triples": [...]}]}.
Json transversal_to_json(const Transversal& t);

/// Undirected DOT with X-vertices as circles in one rank and Y-vertices as
/// squares in another. Parallel edges are emitted separately. With a
/// coloring, colors 1..6 are drawn from a fixed palette and used as labels.
std::string to_dot(const BipartiteMultigraph& g,
                   const EdgeColoring* coloring = nullptr);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace ivc
