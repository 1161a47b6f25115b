#include "ivc/pathfactor.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "exact_cover.hpp"
#include "ivc/errors.hpp"

namespace ivc {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::None:
      return "none";
    case SearchStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Q and the P-graph

QDecomposition build_q(const BipartiteMultigraph& g, const PathFactor& factor) {
  if (auto why = explain_path_factor(g, factor))
    throw CheckError("not a proper path-factor: " + *why);

  const std::vector<bool> in_p = factor_edge_mask(g, factor);
  std::vector<bool> internal_x(g.x_count(), false);
  for (const Path& p : factor.paths)
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
      if (p.vertices[i].part == Part::X) internal_x[p.vertices[i].index] = true;

  std::vector<std::size_t> qdeg(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_p[e]) continue;
    ++qdeg[g.flat(xv(g.edge(e).x))];
    ++qdeg[g.flat(yv(g.edge(e).y))];
  }
  for (std::size_t j = 0; j < g.y_count(); ++j)
    if (qdeg[g.flat(yv(j))] != 2)
      throw GraphError("Q-degree of " + to_string(yv(j)) +
                       " is not 2; is the graph (3,4)-biregular?");
  for (std::size_t i = 0; i < g.x_count(); ++i)
    if (qdeg[i] != (internal_x[i] ? 1u : 2u))
      throw GraphError("Q-degree of " + to_string(xv(i)) +
                       " breaks the degree law; is the graph (3,4)-biregular?");

  std::vector<bool> used = in_p;
  auto next_edge = [&](VertexId v) -> std::optional<EdgeId> {
    for (EdgeId e : g.incident(v))
      if (!used[e]) return e;
    return std::nullopt;
  };

  QDecomposition q;
  for (std::size_t i = 0; i < g.x_count(); ++i) {
    if (!internal_x[i] || !next_edge(xv(i))) continue;
    Path p;
    p.vertices.push_back(xv(i));
    while (auto e = next_edge(p.back())) {
      used[*e] = true;
      p.vertices.push_back(g.other_end(*e, p.back()));
      p.edges.push_back(*e);
    }
    if (p.back().part != Part::X || !internal_x[p.back().index])
      throw InvariantError("Q-path from " + to_string(p.front()) +
                           " ends at " + to_string(p.back()));
    q.paths.push_back(std::move(p));
  }
  for (EdgeId first = 0; first < g.edge_count(); ++first) {
    if (used[first]) continue;
    std::vector<EdgeId> cycle{first};
    used[first] = true;
    const VertexId start = xv(g.edge(first).x);
    VertexId v = yv(g.edge(first).y);
    while (auto e = next_edge(v)) {
      used[*e] = true;
      cycle.push_back(*e);
      v = g.other_end(*e, v);
    }
    if (v != start || cycle.size() % 2 != 0)
      throw InvariantError("Q-cycle through edge " + std::to_string(first) +
                           " does not close evenly");
    q.cycles.push_back(std::move(cycle));
  }
  return q;
}

PGraph build_pgraph(const BipartiteMultigraph& g, const PathFactor& factor) {
  return build_pgraph(g, factor, build_q(g, factor));
}

PGraph build_pgraph(const BipartiteMultigraph& g, const PathFactor& factor,
                    const QDecomposition& q) {
  PGraph pg;
  for (const Path& p : factor.paths) {
    for (std::size_t i = 2; i + 1 < p.vertices.size(); i += 2)
      pg.vertices.push_back(p.vertices[i].index);
    if (p.length() == 6)
      pg.edges.push_back({p.vertices[2].index, p.vertices[4].index,
                          PEdgeKind::SameLength6});
    else if (p.length() == 8)
      pg.edges.push_back({p.vertices[2].index, p.vertices[6].index,
                          PEdgeKind::Distance4In8});
  }
  for (const Path& qp : q.paths)
    pg.edges.push_back(
        {qp.front().index, qp.back().index, PEdgeKind::QPathEnds});
  std::sort(pg.vertices.begin(), pg.vertices.end());
  (void)g;
  return pg;
}

void validate_pgraph(const PGraph& pg) {
  std::map<std::size_t, std::pair<int, int>> deg;  // (total, kind c)
  for (std::size_t v : pg.vertices) deg[v] = {0, 0};
  for (const PGraphEdge& e : pg.edges) {
    for (std::size_t end : {e.u, e.v}) {
      auto it = deg.find(end);
      if (it == deg.end())
        throw InvariantError("P-graph edge touches non-vertex x" +
                             std::to_string(end));
      ++it->second.first;
      if (e.kind == PEdgeKind::QPathEnds) ++it->second.second;
    }
  }
  for (const auto& [v, d] : deg) {
    if (d.second != 1)
      throw InvariantError("P-graph vertex x" + std::to_string(v) + " has " +
                           std::to_string(d.second) + " Q-path edges");
    if (d.first > 2)
      throw InvariantError("P-graph vertex x" + std::to_string(v) +
                           " has degree " + std::to_string(d.first));
  }
}

TwoColoring two_color_pgraph(const PGraph& pg) {
  validate_pgraph(pg);
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (std::size_t v : pg.vertices) adj[v];
  for (const PGraphEdge& e : pg.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  TwoColoring color;
  for (std::size_t root : pg.vertices) {
    if (color.count(root)) continue;
    color[root] = Side::A;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      const Side other = color[v] == Side::A ? Side::B : Side::A;
      for (std::size_t w : adj[v]) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = other;
          queue.push_back(w);
        } else if (it->second != other) {
          throw InvariantError("P-graph has an odd cycle through x" +
                               std::to_string(v));
        }
      }
    }
  }
  return color;
}

// ---------------------------------------------------------------------------
// Half-factors and the (2,4)-subgraph construction

HalfFactor p3_half_factor(const BipartiteMultigraph& h, Parity parity,
                          std::size_t start_shift) {
  if (!is_biregular(h, 2, 4))
    throw GraphError("p3_half_factor needs a (2,4)-biregular graph");
  HalfFactor half;
  const std::size_t keep = parity == Parity::Even ? 0 : 1;
  for (const auto& comp : components(h)) {
    if (comp.size() < 2) continue;
    const auto circuit =
        eulerian_circuit(h, comp, comp[start_shift % comp.size()]);
    for (std::size_t i = keep; i < circuit.size(); i += 2)
      half.edges.push_back(circuit[i]);
  }
  std::sort(half.edges.begin(), half.edges.end());
  if (!is_half_factor(h, half))
    throw InvariantError("alternate Eulerian edges do not form a P3-factor");
  return half;
}

bool is_half_factor(const BipartiteMultigraph& h, const HalfFactor& half) {
  std::vector<std::size_t> dx(h.x_count(), 0), dy(h.y_count(), 0);
  std::vector<bool> seen(h.edge_count(), false);
  for (EdgeId e : half.edges) {
    if (e >= h.edge_count() || seen[e]) return false;
    seen[e] = true;
    ++dx[h.edge(e).x];
    ++dy[h.edge(e).y];
  }
  // Ends of degree 1 on X and centres of degree 2 on Y force every
  // component to be a P3 with distinct ends.
  return std::all_of(dx.begin(), dx.end(), [](auto d) { return d == 1; }) &&
         std::all_of(dy.begin(), dy.end(), [](auto d) { return d == 2; });
}

std::optional<std::vector<std::size_t>> find_y_cover(
    const BipartiteMultigraph& g) {
  if (!is_biregular(g, 3, 4))
    throw GraphError("find_y_cover needs a (3,4)-biregular graph");
  std::vector<std::vector<std::size_t>> sets(g.y_count());
  for (std::size_t j = 0; j < g.y_count(); ++j) {
    std::vector<std::size_t> nbrs;
    for (EdgeId e : g.incident(yv(j))) nbrs.push_back(g.edge(e).x);
    std::sort(nbrs.begin(), nbrs.end());
    // A repeated neighbour leaves fewer than four distinct X-vertices, which
    // can never be part of an exact cover of 4k vertices by k sets.
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end())
      sets[j] = std::move(nbrs);
  }
  detail::ExactCover cover(g.x_count(), std::move(sets));
  if (cover.solve(0) != detail::ExactCover::Outcome::Found) return std::nullopt;
  auto chosen = cover.chosen();
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

/// One component of the P3-factor of G - Ŷ, in parent indices.
struct P3 {
  std::size_t y = 0;
  std::size_t end[2] = {0, 0};
  EdgeId edge[2] = {0, 0};  // edge[s] joins end[s] and y
};

}  // namespace

Via24Result p7_factor_via_24(const BipartiteMultigraph& g) {
  Via24Result result;
  auto cover = find_y_cover(g);
  if (!cover) {
    result.status = Via24Status::NoYCover;
    return result;
  }
  result.y_cover = *cover;
  const std::size_t k = cover->size();

  std::vector<bool> keep_y(g.y_count(), true);
  for (std::size_t u : *cover) keep_y[u] = false;
  const Subgraph h =
      induced_subgraph(g, std::vector<bool>(g.x_count(), true), keep_y);
  const HalfFactor t_half = p3_half_factor(h.graph);

  std::vector<bool> in_t(h.graph.edge_count(), false);
  for (EdgeId e : t_half.edges) in_t[e] = true;
  std::vector<P3> ts;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> t_of_x(g.x_count(), kUnset), side_of_x(g.x_count());
  for (std::size_t j = 0; j < h.graph.y_count(); ++j) {
    P3 t;
    t.y = h.parent_y[j];
    std::size_t s = 0;
    for (EdgeId e : h.graph.incident(yv(j))) {
      if (!in_t[e]) continue;
      t.end[s] = h.graph.edge(e).x;  // X is not reindexed
      t.edge[s] = h.parent_edge[e];
      t_of_x[t.end[s]] = ts.size();
      side_of_x[t.end[s]] = s;
      ++s;
    }
    if (s != 2) throw InvariantError("P3 centre without two factor edges");
    ts.push_back(t);
  }
  if (ts.size() != 2 * k) throw InvariantError("expected 2k P3 components");

  // H': contract each P3 to one vertex, keep only the edges into Ŷ.
  std::vector<EdgePair> hp_pairs;
  std::vector<EdgeId> hp_parent;
  for (std::size_t u = 0; u < k; ++u) {
    for (EdgeId e : g.incident(yv((*cover)[u]))) {
      const std::size_t t = t_of_x[g.edge(e).x];
      if (t == kUnset) throw InvariantError("X-vertex outside every P3");
      hp_pairs.emplace_back(t, u);
      hp_parent.push_back(e);
    }
  }
  const auto hp = BipartiteMultigraph::build(2 * k, k, hp_pairs);
  if (!is_biregular(hp, 2, 4))
    throw InvariantError("contracted graph is not (2,4)-biregular");

  std::size_t largest = 1;
  for (const auto& comp : components(hp)) largest = std::max(largest, comp.size());

  for (std::size_t shift = 0; shift < largest; ++shift) {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      ++result.attempts;
      const HalfFactor f_half = p3_half_factor(hp, parity, shift);
      std::vector<bool> in_f(hp.edge_count(), false);
      for (EdgeId e : f_half.edges) in_f[e] = true;

      PathFactor factor;
      std::vector<bool> t_used(ts.size(), false);
      bool degenerate = false;
      for (std::size_t u = 0; u < k && !degenerate; ++u) {
        std::vector<EdgeId> chosen;
        for (EdgeId e : hp.incident(yv(u)))
          if (in_f[e]) chosen.push_back(e);
        if (chosen.size() != 2)
          throw InvariantError("half-factor centre without two edges");
        const std::size_t ti = hp.edge(chosen[0]).x;
        const std::size_t tj = hp.edge(chosen[1]).x;
        if (ti == tj) {
          degenerate = true;
          break;
        }
        for (std::size_t t : {ti, tj}) {
          if (t_used[t])
            throw InvariantError("P3 component claimed by two Ŷ-vertices");
          t_used[t] = true;
        }
        const EdgeId gi = hp_parent[chosen[0]];
        const EdgeId gj = hp_parent[chosen[1]];
        const std::size_t si = side_of_x[g.edge(gi).x];
        const std::size_t sj = side_of_x[g.edge(gj).x];
        const P3& a = ts[ti];
        const P3& b = ts[tj];
        Path p;
        p.vertices = {xv(a.end[1 - si]), yv(a.y), xv(a.end[si]),
                      yv((*cover)[u]), xv(b.end[sj]), yv(b.y),
                      xv(b.end[1 - sj])};
        p.edges = {a.edge[1 - si], a.edge[si], gi, gj, b.edge[sj],
                   b.edge[1 - sj]};
        factor.paths.push_back(std::move(p));
      }
      if (degenerate) continue;
      if (auto why = explain_path_factor(g, factor))
        throw InvariantError("(2,4)-subgraph construction produced an invalid "
                             "factor: " + *why);
      result.status = Via24Status::Found;
      result.factor = std::move(factor);
      return result;
    }
  }
  result.status = Via24Status::Degenerate;
  return result;
}

// ---------------------------------------------------------------------------
// Exact search for a proper path-factor

namespace {

class FactorSearch {
 public:
  FactorSearch(const BipartiteMultigraph& g, const SearchConfig& config)
      : g_(g),
        max_nodes_(config.max_nodes),
        covered_(g.vertex_count(), false) {
    for (std::size_t len : config.lengths) {
      if (len != 2 && len != 4 && len != 6 && len != 8)
        throw GraphError("factor paths cannot have length " +
                         std::to_string(len));
      allowed_[len / 2 - 1] = true;
      max_length_ = std::max(max_length_, len);
    }
  }

  SearchStatus run() {
    const int r = solve();
    if (r > 0) return SearchStatus::Found;
    return r == 0 ? SearchStatus::None : SearchStatus::Unknown;
  }

  PathFactor factor() const { return {placed_}; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Path under construction around an anchor X-vertex. right starts with the
  // anchor; left excludes it and grows outward from it.
  struct Builder {
    std::vector<VertexId> right_v;
    std::vector<EdgeId> right_e;
    std::vector<VertexId> left_v;
    std::vector<EdgeId> left_e;
  };

  bool is_covered(VertexId v) const { return covered_[g_.flat(v)]; }
  void set_covered(VertexId v, bool on) { covered_[g_.flat(v)] = on; }

  bool tick() {
    if (max_nodes_ != 0 && nodes_ >= max_nodes_) return false;
    ++nodes_;
    return true;
  }

  // Uncovered neighbours of v, each reached through its lowest edge id.
  std::vector<std::pair<VertexId, EdgeId>> open_neighbours(VertexId v) const {
    std::vector<std::pair<VertexId, EdgeId>> out;
    for (EdgeId e : g_.incident(v)) {
      const VertexId w = g_.other_end(e, v);
      if (is_covered(w)) continue;
      if (std::none_of(out.begin(), out.end(),
                       [&](const auto& p) { return p.first == w; }))
        out.emplace_back(w, e);
    }
    return out;
  }

  // Y needs two distinct uncovered X-neighbours to sit inside a path; X needs
  // at least one uncovered Y-neighbour.
  bool stranded(VertexId w) const {
    const std::size_t open = open_neighbours(w).size();
    return w.part == Part::Y ? open < 2 : open == 0;
  }

  bool placement_strands(const Path& p) const {
    for (VertexId v : p.vertices)
      for (EdgeId e : g_.incident(v)) {
        const VertexId w = g_.other_end(e, v);
        if (!is_covered(w) && stranded(w)) return true;
      }
    return false;
  }

  int solve() {
    if (!tick()) return -1;
    std::optional<std::size_t> anchor;
    for (std::size_t i = 0; i < g_.x_count(); ++i)
      if (!covered_[i]) {
        anchor = i;
        break;
      }
    if (!anchor) {
      for (std::size_t j = 0; j < g_.y_count(); ++j)
        if (!is_covered(yv(j))) return 0;
      return 1;
    }
    Builder b;
    b.right_v.push_back(xv(*anchor));
    set_covered(xv(*anchor), true);
    const int r = grow_right(b);
    if (r <= 0) set_covered(xv(*anchor), false);
    return r;
  }

  int grow_right(Builder& b) {
    if (!tick()) return -1;
    const VertexId v = b.right_v.back();
    if (v.part == Part::X && !b.right_e.empty()) {
      const int r = grow_left(b);
      if (r != 0) return r;
    }
    if (b.right_e.size() >= max_length_) return 0;
    for (const auto& [w, e] : open_neighbours(v)) {
      set_covered(w, true);
      b.right_v.push_back(w);
      b.right_e.push_back(e);
      const int r = grow_right(b);
      if (r > 0) return r;
      b.right_v.pop_back();
      b.right_e.pop_back();
      set_covered(w, false);
      if (r < 0) return r;
    }
    return 0;
  }

  int grow_left(Builder& b) {
    if (!tick()) return -1;
    const VertexId v = b.left_v.empty() ? b.right_v.front() : b.left_v.back();
    const std::size_t total = b.right_e.size() + b.left_e.size();
    if (v.part == Part::X && total >= 2 && allowed_[total / 2 - 1]) {
      Path p;
      for (std::size_t i = b.left_v.size(); i-- > 0;) {
        p.vertices.push_back(b.left_v[i]);
        p.edges.push_back(b.left_e[i]);
      }
      p.vertices.insert(p.vertices.end(), b.right_v.begin(), b.right_v.end());
      p.edges.insert(p.edges.end(), b.right_e.begin(), b.right_e.end());
      if (!placement_strands(p)) {
        placed_.push_back(std::move(p));
        const int r = solve();
        if (r != 0) return r;
        placed_.pop_back();
      }
    }
    if (total >= max_length_) return 0;
    for (const auto& [w, e] : open_neighbours(v)) {
      // Each path through the anchor is enumerated once: a two-sided path
      // must leave the anchor leftward on a higher edge id than rightward.
      if (b.left_e.empty() && e < b.right_e.front()) continue;
      set_covered(w, true);
      b.left_v.push_back(w);
      b.left_e.push_back(e);
      const int r = grow_left(b);
      if (r > 0) return r;
      b.left_v.pop_back();
      b.left_e.pop_back();
      set_covered(w, false);
      if (r < 0) return r;
    }
    return 0;
  }

  const BipartiteMultigraph& g_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::array<bool, 4> allowed_{};  // lengths 2, 4, 6, 8
  std::size_t max_length_ = 0;
  std::vector<bool> covered_;
  std::vector<Path> placed_;
};

}  // namespace

FactorSearchResult search_proper_path_factor(const BipartiteMultigraph& g,
                                             const SearchConfig& config) {
  FactorSearch search(g, config);
  FactorSearchResult result;
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::Found) {
    result.factor = search.factor();
    if (auto why = explain_path_factor(g, *result.factor))
      throw InvariantError("search returned an invalid factor: " + *why);
  }
  return result;
}

Full3SearchResult search_full_3regular(const BipartiteMultigraph& g,
                                       const SearchConfig& config) {
  if (!is_biregular(g, 3, 4))
    throw GraphError("search_full_3regular needs a (3,4)-biregular graph");
  std::vector<std::vector<std::size_t>> sets(g.x_count());
  for (std::size_t i = 0; i < g.x_count(); ++i) {
    std::vector<std::size_t> nbrs;
    for (EdgeId e : g.incident(xv(i))) nbrs.push_back(g.edge(e).y);
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end())
      sets[i] = std::move(nbrs);
  }
  detail::ExactCover cover(g.y_count(), std::move(sets));
  Full3SearchResult result;
  switch (cover.solve(config.max_nodes)) {
    case detail::ExactCover::Outcome::Found:
      result.status = SearchStatus::Found;
      break;
    case detail::ExactCover::Outcome::None:
      result.status = SearchStatus::None;
      break;
    case detail::ExactCover::Outcome::Unknown:
      result.status = SearchStatus::Unknown;
      break;
  }
  result.nodes = cover.nodes();
  if (result.status != SearchStatus::Found) return result;

  result.deleted_x = cover.chosen();
  std::sort(result.deleted_x.begin(), result.deleted_x.end());
  std::vector<bool> deleted(g.x_count(), false);
  for (std::size_t i : result.deleted_x) deleted[i] = true;
  SubgraphCertificate cert;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!deleted[g.edge(e).x]) cert.edges.push_back(e);
  if (!check_full_3regular(g, cert))
    throw InvariantError("exact cover did not yield a full 3-regular subgraph");
  result.certificate = std::move(cert);
  return result;
}

}  // namespace ivc
