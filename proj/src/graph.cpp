#include "tpf/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tpf {

Graph::Graph(int n_, const std::vector<Edge>& edges) : n(n_) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::set<Edge> es;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge");
    es.insert({std::min(u, v), std::max(u, v)});
  }
  edge_list.assign(es.begin(), es.end());
  adj.assign(n, {});
  mat.assign((size_t)n * n, 0);
  for (auto [u, v] : edge_list) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    mat[(size_t)u * n + v] = mat[(size_t)v * n + u] = 1;
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
}

VertexSet vs_sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

VertexSet vs_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r));
  return r;
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

bool vs_contains(const VertexSet& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool vs_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet vs_full(int n) {
  VertexSet r(n);
  for (int i = 0; i < n; i++) r[i] = i;
  return r;
}

VertexSet neighborhood(const Graph& g, int x, int d, bool closed) {
  if (x < 0 || x >= g.n) throw std::invalid_argument("neighborhood: bad vertex");
  if (d < 0) throw std::invalid_argument("neighborhood: negative distance");
  std::vector<int> dist(g.n, -1);
  std::deque<int> q{x};
  dist[x] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (dist[v] == d) continue;
    for (int w : g.adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  VertexSet r;
  for (int v = 0; v < g.n; v++) {
    if (dist[v] < 0) continue;
    if (closed ? dist[v] <= d : dist[v] == d) r.push_back(v);
  }
  return r;
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::complete: return "complete";
    case Relation::anticomplete: return "anticomplete";
    default: return "mixed";
  }
}

Relation relation(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
  if (!vs_intersect(xs, ys).empty())
    throw std::invalid_argument("relation: sets overlap");
  bool all = true, none = true;
  for (int x : xs)
    for (int y : ys) (g.adjacent(x, y) ? none : all) = false;
  if (none) return Relation::anticomplete;
  if (all) return Relation::complete;
  return Relation::mixed;
}

bool is_clique(const Graph& g, const VertexSet& xs) {
  for (size_t i = 0; i < xs.size(); i++)
    for (size_t j = i + 1; j < xs.size(); j++)
      if (!g.adjacent(xs[i], xs[j])) return false;
  return true;
}

bool is_stable(const Graph& g, const VertexSet& xs) {
  for (size_t i = 0; i < xs.size(); i++)
    for (size_t j = i + 1; j < xs.size(); j++)
      if (g.adjacent(xs[i], xs[j])) return false;
  return true;
}

VertexSet simplicial_set(const Graph& g) {
  VertexSet r;
  for (int v = 0; v < g.n; v++) {
    VertexSet nb(g.adj[v].begin(), g.adj[v].end());
    if (is_clique(g, nb)) r.push_back(v);
  }
  return r;
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& xs) {
  std::vector<char> in(g.n, 0), out(g.n, 0);
  for (int x : xs) in[x] = 1;
  for (int x : xs)
    for (int w : g.adj[x])
      if (!in[w]) out[w] = 1;
  VertexSet r;
  for (int v = 0; v < g.n; v++)
    if (out[v]) r.push_back(v);
  return r;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& alive) {
  std::vector<char> ok(g.n, 0), seen(g.n, 0);
  for (int v : alive) ok[v] = 1;
  std::vector<VertexSet> comps;
  for (int s : alive) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (ok[w] && !seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
    comps.push_back(vs_sorted(comp));
  }
  return comps;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, vs_full(g.n));
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  return components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
  std::vector<int> idx(g.n, -1);
  for (size_t i = 0; i < vs.size(); i++) idx[vs[i]] = (int)i;
  std::vector<Edge> es;
  for (auto [u, v] : g.edge_list)
    if (idx[u] >= 0 && idx[v] >= 0) es.push_back({idx[u], idx[v]});
  return Graph((int)vs.size(), es);
}

Graph graph_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edge_list;
  for (auto [u, v] : b.edge_list) es.push_back({u + a.n, v + a.n});
  return Graph(a.n + b.n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) es.push_back({i, j});
  return Graph(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; i++) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; i++) es.push_back({i, (i + 1) % n});
  return Graph(n, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; i++)
    for (int j = 0; j < b; j++) es.push_back({i, a + j});
  return Graph(a + b, es);
}

bool is_path(const Graph& g, const Path& p, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (p.empty()) return fail("empty sequence");
  std::set<int> seen;
  for (int v : p) {
    if (v < 0 || v >= g.n) return fail("vertex out of range");
    if (!seen.insert(v).second) return fail("repeated vertex");
  }
  for (size_t i = 0; i < p.size(); i++)
    for (size_t j = i + 1; j < p.size(); j++) {
      bool want = (j == i + 1);
      if (g.adjacent(p[i], p[j]) != want)
        return fail(want ? "consecutive vertices not adjacent"
                         : "chord: non-consecutive vertices adjacent");
    }
  return true;
}

std::optional<Path> shortest_path(const Graph& g, int a, int b,
                                  const VertexSet& allowed) {
  std::vector<char> ok(g.n, 0);
  for (int v : allowed) ok[v] = 1;
  if (!ok[a] || !ok[b]) return std::nullopt;
  std::vector<int> prev(g.n, -2);
  std::deque<int> q{a};
  prev[a] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == b) break;
    for (int w : g.adj[v])
      if (ok[w] && prev[w] == -2) {
        prev[w] = v;
        q.push_back(w);
      }
  }
  if (prev[b] == -2) return std::nullopt;
  Path p;
  for (int v = b; v != -1; v = prev[v]) p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

bool Separation::validate(const Graph& g, std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  VertexSet all = vs_union(vs_union(L, M), R);
  if ((int)L.size() + (int)M.size() + (int)R.size() != g.n ||
      all != vs_full(g.n))
    return fail("L,M,R is not a partition of the vertex set");
  if (L.empty() || R.empty()) return fail("L and R must be nonempty");
  for (int u : L)
    for (int v : R)
      if (g.adjacent(u, v)) return fail("edge between L and R");
  return true;
}

bool PathSystem::validate(const Graph& g, std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
    return fail("bad endpoints");
  if (paths.empty()) return fail("no paths");
  for (const auto& p : paths) {
    std::string w;
    if (!is_path(g, p, &w)) return fail("not an induced path: " + w);
    if (p.front() != a || p.back() != b) return fail("path has wrong ends");
    if (!g.adjacent(a, b) && p.size() < 3)
      return fail("interior empty though ends are non-adjacent");
  }
  for (size_t i = 0; i < paths.size(); i++)
    for (size_t j = i + 1; j < paths.size(); j++) {
      VertexSet pi = vs_sorted(paths[i]), pj = vs_sorted(paths[j]);
      if (vs_intersect(pi, pj) != vs_sorted({a, b}))
        return fail("paths share more than the endpoints");
    }
  return true;
}

}  // namespace tpf
