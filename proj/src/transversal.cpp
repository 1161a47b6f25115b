#include "ivc/transversal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ivc/errors.hpp"

namespace ivc {

// ---------------------------------------------------------------------------
// 3-edge-coloring

namespace {

/// Kuhn's augmenting-path matching restricted to edges with colors[e] == 0.
class Matcher {
 public:
  Matcher(const BipartiteMultigraph& h, const std::vector<int>& colors)
      : h_(h), colors_(colors), match_y_(h.y_count(), kNone) {}

  /// match_y_[y] = matched edge id, or kNone.
  bool perfect() {
    for (std::size_t x = 0; x < h_.x_count(); ++x) {
      visited_.assign(h_.y_count(), false);
      if (!augment(x)) return false;
    }
    return true;
  }

  const std::vector<EdgeId>& matching() const { return match_y_; }

 private:
  bool augment(std::size_t x) {
    for (EdgeId e : h_.incident(xv(x))) {
      if (colors_[e] != 0) continue;
      const std::size_t y = h_.edge(e).y;
      if (visited_[y]) continue;
      visited_[y] = true;
      if (match_y_[y] == kNone || augment(h_.edge(match_y_[y]).x)) {
        match_y_[y] = e;
        return true;
      }
    }
    return false;
  }

  const BipartiteMultigraph& h_;
  const std::vector<int>& colors_;
  std::vector<EdgeId> match_y_;
  std::vector<bool> visited_;
};

}  // namespace

std::vector<int> proper_3_edge_color(const BipartiteMultigraph& h) {
  if (!is_biregular(h, 3, 3))
    throw GraphError("proper_3_edge_color needs a 3-regular bipartite graph");
  std::vector<int> colors(h.edge_count(), 0);
  for (int c = 1; c <= 3; ++c) {
    Matcher m(h, colors);
    if (!m.perfect())
      throw InvariantError("regular bipartite graph without perfect matching");
    for (EdgeId e : m.matching()) colors[e] = c;
  }
  return colors;
}

std::vector<int> color_certificate(const BipartiteMultigraph& g,
                                   const SubgraphCertificate& cert) {
  if (!check_full_3regular(g, cert))
    throw CheckError("edge set is not a full 3-regular subgraph");
  const Subgraph h = edge_subgraph(g, cert.edges);
  const std::vector<int> local = proper_3_edge_color(h.graph);
  std::vector<int> colors(g.edge_count(), 0);
  for (EdgeId e = 0; e < local.size(); ++e) colors[h.parent_edge[e]] = local[e];
  return colors;
}

std::vector<int> permute_colors(std::vector<int> colors,
                                const std::array<int, 3>& perm) {
  for (int& c : colors)
    if (c >= 1 && c <= 3) c = perm[c - 1];
  return colors;
}

// ---------------------------------------------------------------------------
// F, triples and F*

FGraph make_fgraph(std::size_t vertex_count, std::vector<FEdge> edges) {
  FGraph f;
  f.vertex_count = vertex_count;
  f.edges = std::move(edges);
  std::vector<std::size_t> out(vertex_count, kNone);
  std::vector<std::size_t> in_count(vertex_count, 0);
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    const FEdge& e = f.edges[i];
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw InvariantError("F-edge " + std::to_string(i) + " out of range");
    if (out[e.u] != kNone)
      throw InvariantError("F-vertex " + std::to_string(e.u) +
                           " has two outgoing edges");
    out[e.u] = i;
    ++in_count[e.v];
  }
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (out[v] == kNone || in_count[v] != 1)
      throw InvariantError("F is not 2-regular at vertex " + std::to_string(v));

  f.cycle_of.assign(vertex_count, kNone);
  f.position.assign(vertex_count, 0);
  for (std::size_t start = 0; start < vertex_count; ++start) {
    if (f.cycle_of[start] != kNone) continue;
    FCycle cycle;
    std::size_t v = start;
    do {
      f.cycle_of[v] = f.cycles.size();
      f.position[v] = cycle.vertices.size();
      cycle.vertices.push_back(v);
      cycle.edges.push_back(out[v]);
      v = f.edges[out[v]].v;
    } while (v != start);
    f.cycles.push_back(std::move(cycle));
  }
  return f;
}

void validate_triples(const TripleSystem& ts, std::size_t vertex_count) {
  std::vector<int> hits(vertex_count, 0);
  for (std::size_t i = 0; i < ts.triples.size(); ++i)
    for (std::size_t v : ts.triples[i]) {
      if (v >= vertex_count || hits[v]++ != 0)
        throw InvariantError("triple " + std::to_string(i) +
                             " overlaps another triple or leaves the range");
    }
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (hits[v] != 1)
      throw InvariantError("vertex " + std::to_string(v) + " is in no triple");
}

FConstruction build_f(const BipartiteMultigraph& g,
                      const SubgraphCertificate& cert,
                      const std::vector<int>& coloring) {
  if (!check_full_3regular(g, cert))
    throw CheckError("edge set is not a full 3-regular subgraph");
  if (coloring.size() != g.edge_count())
    throw CheckError("certificate coloring has the wrong length");

  std::vector<bool> in_cert(g.edge_count(), false);
  for (EdgeId e : cert.edges) in_cert[e] = true;

  // Each certificate vertex must see colors 1, 2 and 3 once each.
  auto by_color = [&](VertexId v) {
    std::array<EdgeId, 3> slot{kNone, kNone, kNone};
    for (EdgeId e : g.incident(v)) {
      if (!in_cert[e]) continue;
      const int c = coloring[e];
      if (c < 1 || c > 3 || slot[c - 1] != kNone)
        throw CheckError("certificate coloring is not a proper 3-coloring at " +
                         to_string(v));
      slot[c - 1] = e;
    }
    return slot;
  };

  FConstruction out;
  std::vector<FEdge> edges;
  for (std::size_t x = 0; x < g.x_count(); ++x) {
    bool touched = false;
    for (EdgeId e : g.incident(xv(x))) touched = touched || in_cert[e];
    if (!touched) {
      std::array<std::size_t, 3> t{};
      std::size_t n = 0;
      for (EdgeId e : g.incident(xv(x))) t[n++] = g.edge(e).y;
      std::sort(t.begin(), t.end());
      if (t[0] == t[1] || t[1] == t[2])
        throw InvariantError("vertex " + to_string(xv(x)) +
                             " outside the certificate has a repeated neighbor");
      out.triples.triples.push_back(t);
      out.triples.centers.push_back(x);
      continue;
    }
    const auto slot = by_color(xv(x));
    edges.push_back({g.edge(slot[0]).y, g.edge(slot[1]).y, x, slot[0], slot[1]});
  }
  for (std::size_t y = 0; y < g.y_count(); ++y) by_color(yv(y));
  validate_triples(out.triples, g.y_count());
  out.f = make_fgraph(g.y_count(), std::move(edges));
  return out;
}

std::vector<std::size_t> FStar::degrees() const {
  std::vector<std::size_t> d(vertex_count, 0);
  for (const auto& [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

FStar build_fstar(const FGraph& f, const TripleSystem& ts) {
  FStar s;
  s.vertex_count = f.vertex_count;
  for (const FEdge& e : f.edges) s.edges.emplace_back(e.u, e.v);
  for (const auto& t : ts.triples) {
    s.edges.emplace_back(t[0], t[1]);
    s.edges.emplace_back(t[1], t[2]);
    s.edges.emplace_back(t[0], t[2]);
  }
  return s;
}

std::vector<FStarComponent> fstar_components(const FGraph& f,
                                             const TripleSystem& ts) {
  validate_triples(ts, f.vertex_count);
  std::vector<std::size_t> parent(f.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (const FEdge& e : f.edges) unite(e.u, e.v);
  for (const auto& t : ts.triples) {
    unite(t[0], t[1]);
    unite(t[1], t[2]);
  }

  std::map<std::size_t, std::size_t> index_of_root;
  std::vector<FStarComponent> comps;
  for (std::size_t i = 0; i < ts.triples.size(); ++i) {
    const std::size_t root = find(ts.triples[i][0]);
    auto [it, fresh] = index_of_root.emplace(root, comps.size());
    if (fresh) comps.emplace_back();
    FStarComponent& c = comps[it->second];
    c.triples.push_back(i);
    for (std::size_t v : ts.triples[i]) c.vertices.push_back(v);
  }
  for (FStarComponent& c : comps) {
    std::sort(c.vertices.begin(), c.vertices.end());
    std::set<std::size_t> cycles;
    for (std::size_t v : c.vertices) cycles.insert(f.cycle_of[v]);
    c.cycles.assign(cycles.begin(), cycles.end());
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Transversal predicates

namespace {

bool picks_one_per_triple(const TripleSystem& ts,
                          const FStarComponent& component,
                          const std::vector<std::size_t>& chosen) {
  if (chosen.size() != ts.triples.size()) return false;
  for (std::size_t i : component.triples) {
    const auto& t = ts.triples[i];
    if (std::find(t.begin(), t.end(), chosen[i]) == t.end()) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> f_adjacency(const FGraph& f) {
  std::vector<std::vector<std::size_t>> adj(f.vertex_count);
  for (const FEdge& e : f.edges) {
    adj[e.u].push_back(e.v);
    if (e.u != e.v) adj[e.v].push_back(e.u);
  }
  return adj;
}

}  // namespace

bool is_independent_on(const FGraph& f, const TripleSystem& ts,
                       const FStarComponent& component,
                       const std::vector<std::size_t>& chosen) {
  if (!picks_one_per_triple(ts, component, chosen)) return false;
  std::vector<bool> in_s(f.vertex_count, false);
  for (std::size_t i : component.triples) in_s[chosen[i]] = true;
  for (const FEdge& e : f.edges)
    if (in_s[e.u] && in_s[e.v]) return false;
  return true;
}

bool is_spread_on(const FGraph& f, const TripleSystem& ts,
                  const FStarComponent& component,
                  const std::vector<std::size_t>& chosen,
                  const std::vector<bool>& reversed) {
  if (!picks_one_per_triple(ts, component, chosen)) return false;
  std::vector<bool> in_s(f.vertex_count, false);
  for (std::size_t i : component.triples) in_s[chosen[i]] = true;
  for (std::size_t c : component.cycles) {
    const auto& vs = f.cycles[c].vertices;
    const std::size_t n = vs.size();
    const bool back = !reversed.empty() && reversed[c];
    for (std::size_t p = 0; p < n; ++p) {
      if (in_s[vs[p]]) continue;
      bool reached = false;
      for (std::size_t step = 1; step <= 3 && !reached; ++step) {
        const std::size_t q = back ? (p + 3 * n - step) % n : (p + step) % n;
        reached = in_s[vs[q]];
      }
      if (!reached) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Transversal searches

namespace {

class IndependentSearch {
 public:
  IndependentSearch(const FGraph& f, const TripleSystem& ts,
                    const FStarComponent& comp)
      : ts_(ts),
        comp_(comp),
        adj_(f_adjacency(f)),
        blocked_(f.vertex_count, 0),
        looped_(f.vertex_count, false),
        chosen_(ts.triples.size(), kNone) {
    for (const FEdge& e : f.edges)
      if (e.u == e.v) looped_[e.u] = true;
  }

  bool run() { return recurse(comp_.triples.size()); }
  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool available(std::size_t v) const { return !looped_[v] && blocked_[v] == 0; }

  bool recurse(std::size_t remaining) {
    if (remaining == 0) return true;
    // Most constrained open triple first; lowest index on ties.
    std::size_t best = kNone, best_count = 4;
    for (std::size_t i : comp_.triples) {
      if (chosen_[i] != kNone) continue;
      std::size_t count = 0;
      for (std::size_t v : ts_.triples[i]) count += available(v) ? 1 : 0;
      if (count < best_count) {
        best = i;
        best_count = count;
      }
    }
    if (best_count == 0) return false;
    for (std::size_t v : ts_.triples[best]) {
      if (!available(v)) continue;
      chosen_[best] = v;
      for (std::size_t w : adj_[v]) ++blocked_[w];
      if (recurse(remaining - 1)) return true;
      for (std::size_t w : adj_[v]) --blocked_[w];
      chosen_[best] = kNone;
    }
    return false;
  }

  const TripleSystem& ts_;
  const FStarComponent& comp_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> blocked_;
  std::vector<bool> looped_;
  std::vector<std::size_t> chosen_;
};

class SpreadSearch {
 public:
  enum class State : std::uint8_t { Open, In, Out };

  SpreadSearch(const FGraph& f, const TripleSystem& ts,
               const FStarComponent& comp)
      : f_(f),
        ts_(ts),
        comp_(comp),
        state_(f.vertex_count, State::Open),
        hits_(f.cycles.size(), 0),
        chosen_(ts.triples.size(), kNone) {}

  bool run() {
    uncovered_ = comp_.cycles.size();
    return recurse(0);
  }
  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  // A cycle is dead once all its vertices are Out or it holds four
  // consecutive Out vertices.
  bool cycle_dead(std::size_t c) const {
    const auto& vs = f_.cycles[c].vertices;
    const std::size_t n = vs.size();
    std::size_t outs = 0;
    for (std::size_t v : vs) outs += state_[v] == State::Out ? 1 : 0;
    if (outs == n) return true;
    if (n < 4) return false;
    std::size_t run = 0;
    for (std::size_t p = 0; p < 2 * n; ++p) {
      run = state_[vs[p % n]] == State::Out ? run + 1 : 0;
      if (run >= 4) return true;
    }
    return false;
  }

  bool recurse(std::size_t depth) {
    const std::size_t remaining = comp_.triples.size() - depth;
    // One new element covers at most one more cycle.
    if (uncovered_ > remaining) return false;
    if (remaining == 0) return true;
    const std::size_t t = comp_.triples[depth];
    const auto& triple = ts_.triples[t];
    for (std::size_t v : triple) {
      chosen_[t] = v;
      for (std::size_t w : triple) state_[w] = w == v ? State::In : State::Out;
      const std::size_t cv = f_.cycle_of[v];
      if (hits_[cv]++ == 0) --uncovered_;
      bool dead = false;
      for (std::size_t w : triple) dead = dead || cycle_dead(f_.cycle_of[w]);
      if (!dead && recurse(depth + 1)) return true;
      if (--hits_[cv] == 0) ++uncovered_;
      for (std::size_t w : triple) state_[w] = State::Open;
      chosen_[t] = kNone;
    }
    return false;
  }

  const FGraph& f_;
  const TripleSystem& ts_;
  const FStarComponent& comp_;
  std::vector<State> state_;
  std::vector<std::size_t> hits_;
  std::size_t uncovered_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<Transversal> find_independent_transversal(
    const FGraph& f, const TripleSystem& ts, const FStarComponent& component) {
  IndependentSearch search(f, ts, component);
  if (!search.run()) return std::nullopt;
  Transversal t{search.chosen(), {{component, TransversalKind::Independent}}};
  if (!is_independent_on(f, ts, component, t.chosen))
    throw InvariantError("independent search returned a dependent set");
  return t;
}

std::optional<Transversal> find_spread_transversal(
    const FGraph& f, const TripleSystem& ts, const FStarComponent& component) {
  SpreadSearch search(f, ts, component);
  if (!search.run()) return std::nullopt;
  Transversal t{search.chosen(), {{component, TransversalKind::Spread}}};
  if (!is_spread_on(f, ts, component, t.chosen))
    throw InvariantError("spread search returned a set that is not spread");
  return t;
}

std::optional<Transversal> find_mixed_transversal(const FGraph& f,
                                                  const TripleSystem& ts) {
  Transversal out;
  out.chosen.assign(ts.triples.size(), kNone);
  for (const FStarComponent& comp : fstar_components(f, ts)) {
    auto part = find_independent_transversal(f, ts, comp);
    if (!part) part = find_spread_transversal(f, ts, comp);
    if (!part) return std::nullopt;
    for (std::size_t i : comp.triples) out.chosen[i] = part->chosen[i];
    out.parts.push_back(std::move(part->parts.front()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factor construction

PathFactor factor_from_mixed_transversal(const BipartiteMultigraph& g,
                                         const SubgraphCertificate& cert,
                                         const std::vector<int>& coloring,
                                         const Transversal& transversal) {
  const FConstruction fc = build_f(g, cert, coloring);
  const FGraph& f = fc.f;
  const TripleSystem& ts = fc.triples;

  std::vector<bool> triple_seen(ts.triples.size(), false);
  for (const TaggedComponent& part : transversal.parts) {
    const bool ok =
        part.kind == TransversalKind::Independent
            ? is_independent_on(f, ts, part.component, transversal.chosen)
            : is_spread_on(f, ts, part.component, transversal.chosen);
    if (!ok)
      throw CheckError(std::string("transversal is not ") +
                       (part.kind == TransversalKind::Independent
                            ? "independent"
                            : "spread") +
                       " on a component tagged that way");
    for (std::size_t i : part.component.triples) triple_seen[i] = true;
  }
  if (std::find(triple_seen.begin(), triple_seen.end(), false) !=
      triple_seen.end())
    throw CheckError("transversal does not cover every F*-component");

  // M = color-1 edges; mate[y] is y's partner in M.
  std::vector<EdgeId> m_edge(g.y_count(), kNone), c2_edge(g.y_count(), kNone);
  std::vector<EdgeId> center_edge(g.y_count(), kNone);
  std::vector<bool> in_cert(g.edge_count(), false);
  for (EdgeId e : cert.edges) in_cert[e] = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::size_t y = g.edge(e).y;
    if (!in_cert[e])
      center_edge[y] = e;
    else if (coloring[e] == 1)
      m_edge[y] = e;
    else if (coloring[e] == 2)
      c2_edge[y] = e;
  }
  auto mate = [&](std::size_t y) { return g.edge(m_edge[y]).x; };
  std::vector<bool> in_s(g.y_count(), false);
  for (std::size_t v : transversal.chosen) in_s[v] = true;

  PathFactor factor;
  for (const TaggedComponent& part : transversal.parts) {
    if (part.kind == TransversalKind::Independent) {
      // Base paths mate(y2), y2, centre, y3, mate(y3).
      const std::size_t first = factor.paths.size();
      std::map<std::size_t, std::pair<std::size_t, bool>> end_of;  // x -> (path, at front)
      for (std::size_t i : part.component.triples) {
        std::vector<std::size_t> rest;
        for (std::size_t v : ts.triples[i])
          if (v != transversal.chosen[i]) rest.push_back(v);
        const std::size_t y2 = rest[0], y3 = rest[1];
        Path p;
        p.vertices = {xv(mate(y2)), yv(y2), xv(ts.centers[i]), yv(y3),
                      xv(mate(y3))};
        p.edges = {m_edge[y2], center_edge[y2], center_edge[y3], m_edge[y3]};
        end_of[mate(y2)] = {factor.paths.size(), true};
        end_of[mate(y3)] = {factor.paths.size(), false};
        factor.paths.push_back(std::move(p));
      }
      std::set<std::size_t> extended;
      for (std::size_t i : part.component.triples) {
        const std::size_t y1 = transversal.chosen[i];
        const EdgeId e2 = c2_edge[y1];
        const std::size_t x = g.edge(e2).x;
        auto it = end_of.find(x);
        if (it == end_of.end())
          throw InvariantError("color-2 neighbor of " + to_string(yv(y1)) +
                               " is not a base path end");
        if (!extended.insert(x).second)
          throw InvariantError("base path end extended twice");
        Path& p = factor.paths[it->second.first];
        if (it->second.second) {
          p.vertices.insert(p.vertices.begin(), {xv(mate(y1)), yv(y1)});
          p.edges.insert(p.edges.begin(), {m_edge[y1], e2});
        } else {
          p.vertices.insert(p.vertices.end(), {yv(y1), xv(mate(y1))});
          p.edges.insert(p.edges.end(), {e2, m_edge[y1]});
        }
      }
      if (extended.size() != factor.paths.size() - first)
        throw InvariantError("independent case made the wrong number of "
                             "extensions");
    } else {
      for (std::size_t i : part.component.triples) {
        std::size_t cur = transversal.chosen[i];
        Path p;
        p.vertices = {xv(ts.centers[i]), yv(cur)};
        p.edges = {center_edge[cur]};
        for (;;) {
          const FCycle& cyc = f.cycles[f.cycle_of[cur]];
          const FEdge& fe = f.edges[cyc.edges[f.position[cur]]];
          if (in_s[fe.v]) break;
          p.vertices.insert(p.vertices.end(), {xv(fe.via_x), yv(fe.v)});
          p.edges.insert(p.edges.end(), {fe.color1, fe.color2});
          cur = fe.v;
        }
        p.vertices.push_back(xv(mate(cur)));
        p.edges.push_back(m_edge[cur]);
        factor.paths.push_back(std::move(p));
      }
    }
  }
  if (auto why = explain_path_factor(g, factor))
    throw InvariantError("transversal construction produced an invalid "
                         "factor: " + *why);
  return factor;
}

}  // namespace ivc
