#include "ivc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "ivc/errors.hpp"

namespace ivc {

// ---------------------------------------------------------------------------
// Path factors

PathFactor paths_from_edges(const BipartiteMultigraph& g,
                            const std::vector<EdgeId>& edges) {
  std::vector<std::vector<EdgeId>> inc(g.vertex_count());
  for (EdgeId e : edges) {
    inc[g.flat(xv(g.edge(e).x))].push_back(e);
    inc[g.flat(yv(g.edge(e).y))].push_back(e);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  PathFactor out;
  for (std::size_t x = 0; x < g.x_count(); ++x) {
    if (seen[x] || inc[x].size() != 1) continue;
    Path p;
    VertexId cur = xv(x);
    EdgeId came = std::numeric_limits<EdgeId>::max();
    for (;;) {
      seen[g.flat(cur)] = true;
      p.vertices.push_back(cur);
      const auto& here = inc[g.flat(cur)];
      const auto next = std::find_if(here.begin(), here.end(),
                                     [&](EdgeId e) { return e != came; });
      if (next == here.end()) break;
      if (here.size() > 2)
        throw CheckError("vertex " + to_string(cur) + " has factor degree " +
                         std::to_string(here.size()));
      came = *next;
      p.edges.push_back(came);
      cur = g.other_end(came, cur);
    }
    if (cur.part != Part::X)
      throw CheckError("factor path ends at " + to_string(cur));
    out.paths.push_back(std::move(p));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!seen[v])
      throw CheckError("vertex " + to_string(g.from_flat(v)) +
                       " is not on a factor path");
  return out;
}

namespace {

class FactorOracle {
 public:
  explicit FactorOracle(const BipartiteMultigraph& g)
      : g_(g),
        parent_(g.vertex_count()),
        size_edges_(g.vertex_count(), 0),
        x_degree_(g.x_count(), 0),
        last_y_(g.x_count(), 0) {
    for (std::size_t v = 0; v < parent_.size(); ++v) parent_[v] = v;
    for (std::size_t x = 0; x < g.x_count(); ++x)
      for (EdgeId e : g.incident(xv(x)))
        last_y_[x] = std::max(last_y_[x], g.edge(e).y);
  }

  std::optional<PathFactor> run() {
    for (std::size_t x = 0; x < g_.x_count(); ++x)
      if (g_.degree(xv(x)) == 0) return std::nullopt;
    if (!assign(0)) return std::nullopt;
    return paths_from_edges(g_, chosen_);
  }

 private:
  struct Undo {
    std::size_t child;  // root that was attached
    std::size_t root;   // root whose edge count grew
    std::size_t added;
  };

  std::size_t find(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Adds edge e if it keeps the structure a forest of small paths.
  bool add(EdgeId e) {
    const Edge& ed = g_.edge(e);
    if (x_degree_[ed.x] == 2) return false;
    std::size_t a = find(g_.flat(xv(ed.x))), b = find(g_.flat(yv(ed.y)));
    if (a == b) return false;
    if (size_edges_[a] + size_edges_[b] + 1 > 8) return false;
    if (size_edges_[a] < size_edges_[b]) std::swap(a, b);
    parent_[b] = a;
    size_edges_[a] += size_edges_[b] + 1;
    undo_.push_back({b, a, size_edges_[b] + 1});
    ++x_degree_[ed.x];
    chosen_.push_back(e);
    return true;
  }

  void remove_last() {
    const Undo u = undo_.back();
    undo_.pop_back();
    parent_[u.child] = u.child;
    size_edges_[u.root] -= u.added;
    --x_degree_[g_.edge(chosen_.back()).x];
    chosen_.pop_back();
  }

  bool stranded(std::size_t y) const {
    for (EdgeId e : g_.incident(yv(y))) {
      const std::size_t x = g_.edge(e).x;
      if (last_y_[x] == y && x_degree_[x] == 0) return true;
    }
    return false;
  }

  bool assign(std::size_t y) {
    if (y == g_.y_count()) return true;
    const auto inc = g_.incident(yv(y));
    for (std::size_t i = 0; i < inc.size(); ++i) {
      if (!add(inc[i])) continue;
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (!add(inc[j])) continue;
        if (!stranded(y) && assign(y + 1)) return true;
        remove_last();
      }
      remove_last();
    }
    return false;
  }

  const BipartiteMultigraph& g_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_edges_;
  std::vector<int> x_degree_;
  std::vector<std::size_t> last_y_;
  std::vector<Undo> undo_;
  std::vector<EdgeId> chosen_;
};

}  // namespace

std::optional<PathFactor> oracle_path_factor(const BipartiteMultigraph& g) {
  return FactorOracle(g).run();
}

// ---------------------------------------------------------------------------
// Interval colorings

namespace {

class ColoringOracle {
 public:
  ColoringOracle(const BipartiteMultigraph& g, int k)
      : g_(g),
        k_(k),
        colors_(g.edge_count(), 0),
        used_(g.vertex_count(), std::vector<bool>(k + 1, false)),
        low_(g.vertex_count(), k + 1),
        high_(g.vertex_count(), 0) {}

  std::optional<EdgeColoring> run() {
    if (!place(0)) return std::nullopt;
    return EdgeColoring{colors_, k_};
  }

 private:
  bool fits(std::size_t v, int c) const {
    if (used_[v][c]) return false;
    const int lo = std::min(low_[v], c), hi = std::max(high_[v], c);
    return static_cast<std::size_t>(hi - lo) + 1 <= g_.degree(g_.from_flat(v));
  }

  bool place(EdgeId e) {
    if (e == g_.edge_count()) return true;
    const std::size_t a = g_.flat(xv(g_.edge(e).x));
    const std::size_t b = g_.flat(yv(g_.edge(e).y));
    for (int c = 1; c <= k_; ++c) {
      if (!fits(a, c) || !fits(b, c)) continue;
      const int la = low_[a], ha = high_[a], lb = low_[b], hb = high_[b];
      for (std::size_t v : {a, b}) {
        used_[v][c] = true;
        low_[v] = std::min(low_[v], c);
        high_[v] = std::max(high_[v], c);
      }
      colors_[e] = c;
      if (place(e + 1)) return true;
      colors_[e] = 0;
      used_[a][c] = used_[b][c] = false;
      low_[a] = la;
      high_[a] = ha;
      low_[b] = lb;
      high_[b] = hb;
    }
    return false;
  }

  const BipartiteMultigraph& g_;
  int k_;
  std::vector<int> colors_;
  std::vector<std::vector<bool>> used_;
  std::vector<int> low_, high_;
};

}  // namespace

std::optional<EdgeColoring> oracle_interval_coloring(
    const BipartiteMultigraph& g, int k) {
  if (k < 0) return std::nullopt;
  return ColoringOracle(g, k).run();
}

// ---------------------------------------------------------------------------
// Full 3-regular subgraphs

namespace {

// Source -> kept X (cap 3) -> Y (cap = multiplicity) -> sink (cap 3).
// Returns the certificate if every Y-vertex receives 3 units.
std::optional<SubgraphCertificate> flow_check(const BipartiteMultigraph& g,
                                              const std::vector<bool>& keep_x) {
  const std::size_t nx = g.x_count(), ny = g.y_count();
  const std::size_t n = nx + ny + 2, s = nx + ny, t = s + 1;
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < nx; ++x) {
    if (!keep_x[x]) continue;
    cap[s][x] = 3;
    for (EdgeId e : g.incident(xv(x))) ++cap[x][nx + g.edge(e).y];
  }
  for (std::size_t y = 0; y < ny; ++y) cap[nx + y][t] = 3;
  const auto original = cap;

  int total = 0;
  for (;;) {
    std::vector<std::size_t> prev(n, n);
    prev[s] = s;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty() && prev[t] == n) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v)
        if (prev[v] == n && cap[u][v] > 0) {
          prev[v] = u;
          q.push(v);
        }
    }
    if (prev[t] == n) break;
    int push = std::numeric_limits<int>::max();
    for (std::size_t v = t; v != s; v = prev[v])
      push = std::min(push, cap[prev[v]][v]);
    for (std::size_t v = t; v != s; v = prev[v]) {
      cap[prev[v]][v] -= push;
      cap[v][prev[v]] += push;
    }
    total += push;
  }
  if (total != static_cast<int>(3 * ny)) return std::nullopt;

  SubgraphCertificate cert;
  for (std::size_t x = 0; x < nx; ++x) {
    if (!keep_x[x]) continue;
    // Flow on x -> y is how many of the parallel xy edges to take.
    std::vector<int> take(ny, 0);
    for (std::size_t y = 0; y < ny; ++y)
      take[y] = original[x][nx + y] - cap[x][nx + y];
    for (EdgeId e : g.incident(xv(x)))
      if (take[g.edge(e).y] > 0) {
        --take[g.edge(e).y];
        cert.edges.push_back(e);
      }
  }
  std::sort(cert.edges.begin(), cert.edges.end());
  return cert;
}

}  // namespace

std::optional<SubgraphCertificate> oracle_full_3regular(
    const BipartiteMultigraph& g) {
  const std::size_t nx = g.x_count(), ny = g.y_count();
  if (ny > nx) return std::nullopt;
  const std::size_t drop = nx - ny;
  // Lexicographic enumeration of the dropped set.
  std::vector<std::size_t> idx(drop);
  for (std::size_t i = 0; i < drop; ++i) idx[i] = i;
  for (;;) {
    std::vector<bool> keep(nx, true);
    for (std::size_t i : idx) keep[i] = false;
    if (auto cert = flow_check(g, keep)) return cert;
    std::size_t i = drop;
    while (i > 0 && idx[i - 1] == nx - drop + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < drop; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace ivc
