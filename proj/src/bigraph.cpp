#include "ivc/bigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ivc/errors.hpp"

namespace ivc {

std::string to_string(VertexId v) {
  return (v.part == Part::X ? "x" : "y") + std::to_string(v.index);
}

BipartiteMultigraph BipartiteMultigraph::build(std::size_t x_count,
                                               std::size_t y_count,
                                               std::span<const EdgePair> edges) {
  BipartiteMultigraph g;
  g.x_count_ = x_count;
  g.y_count_ = y_count;
  g.edges_.reserve(edges.size());
  g.x_incident_.assign(x_count, {});
  g.y_incident_.assign(y_count, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [x, y] = edges[i];
    if (x >= x_count || y >= y_count) {
      std::ostringstream msg;
      msg << "edge " << i << " (" << x << ", " << y
          << ") out of range for x_count=" << x_count
          << ", y_count=" << y_count;
      throw GraphError(msg.str());
    }
    g.edges_.push_back({x, y});
    g.x_incident_[x].push_back(i);
    g.y_incident_[y].push_back(i);
  }
  return g;
}

std::vector<EdgePair> BipartiteMultigraph::edge_pairs() const {
  std::vector<EdgePair> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.x, e.y);
  return out;
}

std::span<const EdgeId> BipartiteMultigraph::incident(VertexId v) const {
  if (!contains(v)) throw GraphError("no such vertex " + to_string(v));
  return v.part == Part::X ? std::span<const EdgeId>(x_incident_[v.index])
                           : std::span<const EdgeId>(y_incident_[v.index]);
}

VertexId BipartiteMultigraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (v.part == Part::X && ed.x == v.index) return yv(ed.y);
  if (v.part == Part::Y && ed.y == v.index) return xv(ed.x);
  throw GraphError("edge " + std::to_string(e) + " is not incident to " +
                   to_string(v));
}

bool BipartiteMultigraph::contains(VertexId v) const {
  return v.part == Part::X ? v.index < x_count_ : v.index < y_count_;
}

DegreeProfile degree_profile(const BipartiteMultigraph& g) {
  DegreeProfile p;
  p.x.resize(g.x_count());
  p.y.resize(g.y_count());
  for (std::size_t i = 0; i < g.x_count(); ++i) p.x[i] = g.degree(xv(i));
  for (std::size_t j = 0; j < g.y_count(); ++j) p.y[j] = g.degree(yv(j));
  return p;
}

bool is_biregular(const BipartiteMultigraph& g, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < g.x_count(); ++i)
    if (g.degree(xv(i)) != a) return false;
  for (std::size_t j = 0; j < g.y_count(); ++j)
    if (g.degree(yv(j)) != b) return false;
  return true;
}

bool is_simple(const BipartiteMultigraph& g) {
  for (std::size_t i = 0; i < g.x_count(); ++i) {
    std::vector<std::size_t> ys;
    for (EdgeId e : g.incident(xv(i))) ys.push_back(g.edge(e).y);
    std::sort(ys.begin(), ys.end());
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> components(const BipartiteMultigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const VertexId v = g.from_flat(stack.back());
      stack.pop_back();
      comp.push_back(v);
      for (EdgeId e : g.incident(v)) {
        const std::size_t w = g.flat(g.other_end(e, v));
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<EdgeId> eulerian_circuit(const BipartiteMultigraph& g,
                                     std::span<const VertexId> component) {
  if (component.empty()) return {};
  return eulerian_circuit(
      g, component, *std::min_element(component.begin(), component.end()));
}

std::vector<EdgeId> eulerian_circuit(const BipartiteMultigraph& g,
                                     std::span<const VertexId> component,
                                     VertexId start) {
  if (std::find(component.begin(), component.end(), start) == component.end())
    throw GraphError("start vertex " + to_string(start) +
                     " is not in the component");
  std::size_t edge_total = 0;
  for (VertexId v : component) {
    const std::size_t d = g.degree(v);
    if (d % 2 != 0)
      throw GraphError("vertex " + to_string(v) + " has odd degree " +
                       std::to_string(d));
    edge_total += d;
  }
  edge_total /= 2;

  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);

  std::vector<std::pair<VertexId, EdgeId>> stack{{start, kNone}};
  std::vector<EdgeId> circuit;
  circuit.reserve(edge_total);
  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    const auto inc = g.incident(v);
    std::size_t& c = cursor[g.flat(v)];
    while (c < inc.size() && used[inc[c]]) ++c;
    if (c < inc.size()) {
      const EdgeId e = inc[c];
      used[e] = true;
      stack.emplace_back(g.other_end(e, v), e);
    } else {
      if (stack.back().second != kNone) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != edge_total)
    throw GraphError("vertex set passed to eulerian_circuit is not connected");
  return circuit;
}

bool is_two_edge_connected(const BipartiteMultigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<std::size_t> order(n, kUnseen), low(n, 0);
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, kNone, 0}};
  order[0] = low[0] = counter++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto inc = g.incident(g.from_flat(f.v));
    if (f.next < inc.size()) {
      const EdgeId e = inc[f.next++];
      if (e == f.via) continue;
      const std::size_t w = g.flat(g.other_end(e, g.from_flat(f.v)));
      if (order[w] == kUnseen) {
        order[w] = low[w] = counter++;
        stack.push_back({w, e, 0});
      } else {
        low[f.v] = std::min(low[f.v], order[w]);
      }
    } else {
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > order[parent.v]) return false;  // bridge
      }
    }
  }
  return counter == n;
}

Subgraph induced_subgraph(const BipartiteMultigraph& g,
                          const std::vector<bool>& keep_x,
                          const std::vector<bool>& keep_y) {
  if (keep_x.size() != g.x_count() || keep_y.size() != g.y_count())
    throw GraphError("induced_subgraph: mask sizes do not match the graph");
  Subgraph s;
  constexpr std::size_t kDrop = static_cast<std::size_t>(-1);
  std::vector<std::size_t> xmap(g.x_count(), kDrop), ymap(g.y_count(), kDrop);
  for (std::size_t i = 0; i < g.x_count(); ++i)
    if (keep_x[i]) {
      xmap[i] = s.parent_x.size();
      s.parent_x.push_back(i);
    }
  for (std::size_t j = 0; j < g.y_count(); ++j)
    if (keep_y[j]) {
      ymap[j] = s.parent_y.size();
      s.parent_y.push_back(j);
    }
  std::vector<EdgePair> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (xmap[ed.x] == kDrop || ymap[ed.y] == kDrop) continue;
    pairs.emplace_back(xmap[ed.x], ymap[ed.y]);
    s.parent_edge.push_back(e);
  }
  s.graph = BipartiteMultigraph::build(s.parent_x.size(), s.parent_y.size(),
                                       pairs);
  return s;
}

Subgraph edge_subgraph(const BipartiteMultigraph& g,
                       std::span<const EdgeId> edge_ids) {
  std::vector<EdgeId> ids(edge_ids.begin(), edge_ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::map<std::size_t, std::size_t> xmap, ymap;
  for (EdgeId e : ids) {
    const Edge& ed = g.edge(e);
    xmap.emplace(ed.x, 0);
    ymap.emplace(ed.y, 0);
  }
  Subgraph s;
  for (auto& [parent, local] : xmap) {
    local = s.parent_x.size();
    s.parent_x.push_back(parent);
  }
  for (auto& [parent, local] : ymap) {
    local = s.parent_y.size();
    s.parent_y.push_back(parent);
  }
  std::vector<EdgePair> pairs;
  for (EdgeId e : ids) {
    const Edge& ed = g.edge(e);
    pairs.emplace_back(xmap[ed.x], ymap[ed.y]);
    s.parent_edge.push_back(e);
  }
  s.graph = BipartiteMultigraph::build(s.parent_x.size(), s.parent_y.size(),
                                       pairs);
  return s;
}

BipartiteMultigraph disjoint_union(const BipartiteMultigraph& a,
                                   const BipartiteMultigraph& b) {
  std::vector<EdgePair> pairs = a.edge_pairs();
  for (const auto& e : b.edges())
    pairs.emplace_back(e.x + a.x_count(), e.y + a.y_count());
  return BipartiteMultigraph::build(a.x_count() + b.x_count(),
                                    a.y_count() + b.y_count(), pairs);
}

}  // namespace ivc
