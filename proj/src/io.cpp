#include "ivc/io.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ivc/errors.hpp"

namespace ivc {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

template <typename T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json graph_to_json(const BipartiteMultigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.x, e.y});
  return {{"x_count", g.x_count()}, {"y_count", g.y_count()}, {"edges", edges}};
}

BipartiteMultigraph graph_from_json(const Json& j) {
  const auto nx = field<std::size_t>(j, "x_count");
  const auto ny = field<std::size_t>(j, "y_count");
  const auto edges = field<std::vector<std::array<std::size_t, 2>>>(j, "edges");
  std::vector<EdgePair> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e[0], e[1]);
  return BipartiteMultigraph::build(nx, ny, pairs);
}

VertexId parse_vertex(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y') ||
      s.find_first_not_of("0123456789", 1) != std::string::npos)
    throw FormatError("bad vertex name \"" + s + "\"");
  try {
    const std::size_t index = std::stoull(s.substr(1));
    return s[0] == 'x' ? xv(index) : yv(index);
  } catch (const std::out_of_range&) {
    throw FormatError("vertex index out of range in \"" + s + "\"");
  }
}

Json factor_to_json(const PathFactor& factor) {
  Json out = Json::array();
  for (const Path& p : factor.paths) {
    Json row = Json::array();
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      row.push_back(to_string(p.vertices[i]));
      if (i < p.edges.size()) row.push_back(p.edges[i]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

PathFactor factor_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("factor must be an array of paths");
  PathFactor f;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() % 2 == 0)
      throw FormatError("factor path must alternate vertices and edges and "
                        "start and end with a vertex");
    Path p;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i % 2 == 0)
        p.vertices.push_back(parse_vertex(as<std::string>(row[i], "vertex")));
      else
        p.edges.push_back(as<EdgeId>(row[i], "edge id"));
    }
    f.paths.push_back(std::move(p));
  }
  return f;
}

Json coloring_to_json(const EdgeColoring& coloring) { return coloring.colors; }

EdgeColoring coloring_from_json(const Json& j) {
  EdgeColoring c;
  c.colors = as<std::vector<int>>(j, "coloring");
  c.palette_size = 0;
  for (int v : c.colors) c.palette_size = std::max(c.palette_size, v);
  return c;
}

Json certificate_to_json(const SubgraphCertificate& cert) {
  return {{"edges", cert.edges}};
}

SubgraphCertificate certificate_from_json(const Json& j) {
  return {field<std::vector<EdgeId>>(j, "edges")};
}

Json fconstruction_to_json(const FConstruction& fc) {
  Json cycles = Json::array();
  for (const FCycle& c : fc.f.cycles) cycles.push_back(c.vertices);
  return {{"vertex_count", fc.f.vertex_count},
          {"cycles", cycles},
          {"triples", fc.triples.triples},
          {"centers", fc.triples.centers}};
}

FConstruction fconstruction_from_json(const Json& j) {
  const auto n = field<std::size_t>(j, "vertex_count");
  const auto cycles = field<std::vector<std::vector<std::size_t>>>(j, "cycles");
  std::vector<FEdge> edges;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      edges.push_back({c[i], c[(i + 1) % c.size()]});
  FConstruction fc;
  try {
    fc.f = make_fgraph(n, std::move(edges));
    fc.triples.triples =
        field<std::vector<std::array<std::size_t, 3>>>(j, "triples");
    if (j.contains("centers"))
      fc.triples.centers = field<std::vector<std::size_t>>(j, "centers");
    validate_triples(fc.triples, n);
  } catch (const InvariantError& e) {
    throw FormatError(e.what());
  }
  return fc;
}

Json transversal_to_json(const Transversal& t) {
  Json chosen = Json::array();
  for (std::size_t v : t.chosen)
    chosen.push_back(v == kNone ? Json(nullptr) : Json(v));
  Json parts = Json::array();
  for (const TaggedComponent& p : t.parts)
    parts.push_back(
        {{"kind", p.kind == TransversalKind::Independent ? "independent"
                                                         : "spread"},
         {"triples", p.component.triples}});
  return {{"chosen", chosen}, {"components", parts}};
}

std::string to_dot(const BipartiteMultigraph& g, const EdgeColoring* coloring) {
  static constexpr std::array<const char*, 6> kPalette = {
      "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628"};
  std::ostringstream out;
  out << "graph G {\n  rankdir=LR;\n";
  out << "  subgraph xs {\n    rank=same;\n    node [shape=circle];\n";
  for (std::size_t x = 0; x < g.x_count(); ++x) out << "    x" << x << ";\n";
  out << "  }\n";
  out << "  subgraph ys {\n    rank=same;\n    node [shape=square];\n";
  for (std::size_t y = 0; y < g.y_count(); ++y) out << "    y" << y << ";\n";
  out << "  }\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  x" << g.edge(e).x << " -- y" << g.edge(e).y;
    if (coloring && e < coloring->colors.size()) {
      const int c = coloring->colors[e];
      out << " [label=\"" << c << "\"";
      if (c >= 1 && c <= 6) out << ", color=\"" << kPalette[c - 1] << "\"";
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace ivc
