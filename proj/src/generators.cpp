#include "ivc/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "ivc/errors.hpp"

namespace ivc {

namespace {

// Subsets of {1..6} as ascending digit strings.
std::vector<std::string> subsets_of_six(std::size_t size) {
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, char next) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (char c = next; c <= '6'; ++c) {
      cur.push_back(c);
      self(self, static_cast<char>(c + 1));
      cur.pop_back();
    }
  };
  rec(rec, '1');
  return out;
}

const std::vector<std::string>& triples6() {
  static const auto v = subsets_of_six(3);
  return v;
}

const std::vector<std::string>& pairs6() {
  static const auto v = subsets_of_six(2);
  return v;
}

std::size_t index_of(const std::vector<std::string>& v, const std::string& s) {
  const auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) throw GraphError("unknown subset " + s);
  return static_cast<std::size_t>(it - v.begin());
}

// Builds a path from alternating X/Y vertices, resolving each step to the
// lowest-id edge joining them that the path has not used yet.
Path path_through(const BipartiteMultigraph& g,
                  const std::vector<VertexId>& vertices) {
  Path p;
  p.vertices = vertices;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const VertexId a = vertices[i], b = vertices[i + 1];
    EdgeId found = kNone;
    for (EdgeId e : g.incident(a)) {
      if (g.other_end(e, a) != b) continue;
      if (std::find(p.edges.begin(), p.edges.end(), e) != p.edges.end())
        continue;
      found = e;
      break;
    }
    if (found == kNone)
      throw GraphError("no edge between " + to_string(a) + " and " +
                       to_string(b));
    p.edges.push_back(found);
  }
  return p;
}

BipartiteMultigraph graph_from_neighborhoods(
    std::size_t y_count, const std::vector<std::vector<std::size_t>>& nbrs) {
  std::vector<EdgePair> edges;
  for (std::size_t x = 0; x < nbrs.size(); ++x)
    for (std::size_t y : nbrs[x]) edges.emplace_back(x, y);
  return BipartiteMultigraph::build(nbrs.size(), y_count, edges);
}

}  // namespace

// ---------------------------------------------------------------------------
// Named graphs

GraphWithFactor subset_graph_6() {
  const auto& xs = triples6();
  const auto& ys = pairs6();
  std::vector<std::vector<std::size_t>> nbrs;
  for (const std::string& t : xs)
    nbrs.push_back({index_of(ys, {t[0], t[1]}), index_of(ys, {t[0], t[2]}),
                    index_of(ys, {t[1], t[2]})});

  GraphWithFactor out;
  out.graph = graph_from_neighborhoods(ys.size(), nbrs);
  const std::vector<std::vector<std::string>> listed = {
      {"124", "12", "123", "23", "235", "35", "345"},
      {"135", "13", "134", "34", "346", "46", "456"},
      {"146", "14", "145", "45", "245", "25", "256"},
      {"125", "15", "156", "56", "356", "36", "236"},
      {"136", "16", "126", "26", "246", "24", "234"},
  };
  for (const auto& names : listed) {
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < names.size(); ++i)
      vs.push_back(i % 2 == 0 ? xv(index_of(xs, names[i]))
                              : yv(index_of(ys, names[i])));
    out.factor.paths.push_back(path_through(out.graph, vs));
  }
  return out;
}

std::string subset_label(VertexId v) {
  return v.part == Part::X ? triples6().at(v.index) : pairs6().at(v.index);
}

BipartiteMultigraph eight_triples_graph() {
  return graph_from_neighborhoods(6, {{0, 1, 2},
                                      {0, 1, 3},
                                      {1, 2, 4},
                                      {2, 3, 5},
                                      {2, 3, 5},
                                      {0, 3, 4},
                                      {0, 4, 5},
                                      {1, 4, 5}});
}

GraphWithFactor eight_triples_with_factor() {
  GraphWithFactor out{eight_triples_graph(), {}};
  // 123-1-124-2-235-3-346 and 346-4-145-5-156-6-256, using both copies of 346.
  out.factor.paths.push_back(path_through(
      out.graph, {xv(0), yv(0), xv(1), yv(1), xv(2), yv(2), xv(3)}));
  out.factor.paths.push_back(path_through(
      out.graph, {xv(4), yv(3), xv(5), yv(4), xv(6), yv(5), xv(7)}));
  return out;
}

BipartiteMultigraph claw_triple_graph() {
  return graph_from_neighborhoods(
      3, {{0, 1, 2}, {0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
}

BipartiteMultigraph k34() {
  return graph_from_neighborhoods(
      3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
}

// ---------------------------------------------------------------------------
// Composition

namespace {

void require_switch_input(const BipartiteMultigraph& g, const PathFactor& f,
                          EdgeId e, const char* which) {
  const std::string name = which;
  if (!is_biregular(g, 3, 4))
    throw GraphError(name + " is not (3,4)-biregular");
  if (!is_two_edge_connected(g))
    throw GraphError(name + " is not 2-edge-connected");
  if (auto why = explain_path_factor(g, f))
    throw GraphError(name + " factor is invalid: " + *why);
  for (const Path& p : f.paths)
    if (p.length() != 6) throw GraphError(name + " factor is not a P7-factor");
  if (e >= g.edge_count())
    throw GraphError(name + " switch edge " + std::to_string(e) +
                     " does not exist");
  if (factor_edge_mask(g, f)[e])
    throw GraphError(name + " switch edge " + std::to_string(e) +
                     " lies in the factor");
}

}  // namespace

GraphWithFactor two_switch(const BipartiteMultigraph& g1, const PathFactor& f1,
                           EdgeId e1, const BipartiteMultigraph& g2,
                           const PathFactor& f2, EdgeId e2) {
  require_switch_input(g1, f1, e1, "first graph");
  require_switch_input(g2, f2, e2, "second graph");

  const std::size_t dx = g1.x_count(), dy = g1.y_count();
  const std::size_t de = g1.edge_count();
  std::vector<EdgePair> edges = g1.edge_pairs();
  for (const auto& [x, y] : g2.edge_pairs()) edges.emplace_back(x + dx, y + dy);
  const Edge a = g1.edge(e1), b = g2.edge(e2);
  edges[e1] = {a.x, b.y + dy};
  edges[de + e2] = {b.x + dx, a.y};

  GraphWithFactor out;
  out.graph = BipartiteMultigraph::build(dx + g2.x_count(), dy + g2.y_count(),
                                         edges);
  out.factor = f1;
  for (Path p : f2.paths) {
    for (VertexId& v : p.vertices) v.index += v.part == Part::X ? dx : dy;
    for (EdgeId& e : p.edges) e += de;
    out.factor.paths.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Triple systems without transversals

namespace {

// Vertex y_i^j (i, j 1-based) of a triple system whose triple i-1 holds
// 3(i-1), 3(i-1)+1, 3(i-1)+2.
std::size_t named(std::size_t i, std::size_t j) { return (i - 1) * 3 + (j - 1); }

TripleSystem consecutive_triples(std::size_t k, std::size_t offset) {
  TripleSystem ts;
  for (std::size_t i = 0; i < k; ++i)
    ts.triples.push_back({offset + 3 * i, offset + 3 * i + 1, offset + 3 * i + 2});
  return ts;
}

void add_cycle(std::vector<FEdge>& edges, const std::vector<std::size_t>& cyc) {
  for (std::size_t i = 0; i < cyc.size(); ++i)
    edges.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
}

std::vector<std::vector<std::size_t>> independent_cycles(std::size_t k) {
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t i = 1; i <= k / 2; ++i)
    cycles.push_back({named(2 * i - 1, 1), named(2 * i, 1), named(2 * i - 1, 2),
                      named(2 * i, 2)});
  auto wrap = [k](std::size_t i) { return (i - 1) % k + 1; };
  for (std::size_t i = 1; i <= k / 6; ++i) {
    cycles.push_back({named(wrap(6 * i - 3), 3), named(wrap(6 * i - 1), 3),
                      named(wrap(6 * i + 1), 3)});
    cycles.push_back({named(6 * i - 4, 3), named(6 * i - 2, 3),
                      named(6 * i, 3)});
  }
  return cycles;
}

std::vector<std::vector<std::size_t>> spread_cycles(std::size_t k) {
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t i = 1; i <= k; ++i)
    cycles.push_back({named(i, 1), named(i % k + 1, 2)});
  for (std::size_t i = 1; i <= k / 2; ++i)
    cycles.push_back({named(2 * i - 1, 3), named(2 * i, 3)});
  return cycles;
}

FConstruction assemble(std::size_t vertex_count,
                       const std::vector<std::vector<std::size_t>>& cycles,
                       TripleSystem ts) {
  std::vector<FEdge> edges;
  for (const auto& c : cycles) add_cycle(edges, c);
  FConstruction out{make_fgraph(vertex_count, std::move(edges)), std::move(ts)};
  validate_triples(out.triples, vertex_count);
  return out;
}

}  // namespace

FConstruction independent_obstruction(std::size_t k) {
  if (k == 0 || k % 6 != 0)
    throw GraphError("independent obstruction needs a positive multiple of 6");
  return assemble(3 * k, independent_cycles(k), consecutive_triples(k, 0));
}

FConstruction spread_obstruction(std::size_t k) {
  if (k == 0 || k % 2 != 0)
    throw GraphError("spread obstruction needs a positive even number");
  return assemble(3 * k, spread_cycles(k), consecutive_triples(k, 0));
}

FConstruction no_mixed_transversal_instance() {
  constexpr std::size_t k1 = 12, k2 = 8, offset = 3 * k1;
  auto cycles = independent_cycles(k1);
  for (auto c : spread_cycles(k2)) {
    for (std::size_t& v : c) v += offset;
    cycles.push_back(std::move(c));
  }
  // Exchange y_1^1 and z_1^1 inside the cycles; triples keep their names.
  const std::size_t y11 = named(1, 1), z11 = offset + named(1, 1);
  for (auto& c : cycles)
    for (std::size_t& v : c) {
      if (v == y11)
        v = z11;
      else if (v == z11)
        v = y11;
    }
  TripleSystem ts = consecutive_triples(k1 + k2, 0);
  return assemble(3 * (k1 + k2), cycles, std::move(ts));
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

// Unbiased draw from [0, bound) by rejection on the top of the range.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % bound;
}

}  // namespace

BipartiteMultigraph random_34_biregular(std::size_t k, std::uint64_t seed,
                                        bool simple_only) {
  if (k == 0) throw GraphError("random_34_biregular needs k >= 1");
  constexpr int kMaxAttempts = 10'000;
  const std::size_t nx = 4 * k, ny = 3 * k, stubs = 12 * k;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> y_stubs(stubs);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::size_t i = 0; i < stubs; ++i) y_stubs[i] = i / 4;
    // std::shuffle is implementation-defined; spell Fisher-Yates out so the
    // output is the same on every platform.
    for (std::size_t i = stubs - 1; i > 0; --i)
      std::swap(y_stubs[i], y_stubs[bounded(rng, i + 1)]);
    std::vector<EdgePair> edges;
    for (std::size_t i = 0; i < stubs; ++i) edges.emplace_back(i / 3, y_stubs[i]);
    std::sort(edges.begin(), edges.end());
    if (simple_only &&
        std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      continue;
    return BipartiteMultigraph::build(nx, ny, edges);
  }
  throw GraphError("no simple instance after " + std::to_string(kMaxAttempts) +
                   " draws (k=" + std::to_string(k) +
                   ", seed=" + std::to_string(seed) + ")");
}

}  // namespace ivc
