#include "tpf/generators.hpp"

#include <algorithm>
#include <map>

#include "tpf/obstructions.hpp"
#include "tpf/rng.hpp"

namespace tpf {

namespace {

// Chain of `len-1` fresh interior vertices between two existing endpoints;
// returns the full path including the endpoints.
Path add_chain(std::vector<Edge>& edges, int& next, int from, int to,
               int len) {
  Path p{from};
  int prev = from;
  for (int i = 1; i < len; i++) {
    edges.push_back({prev, next});
    p.push_back(next);
    prev = next++;
  }
  edges.push_back({prev, to});
  p.push_back(to);
  return p;
}

}  // namespace

std::pair<Graph, ThetaEmbedding> make_theta(int l1, int l2, int l3) {
  for (int l : {l1, l2, l3})
    if (l < 2)
      throw std::invalid_argument(
          "make_theta: every path must have length at least 2");
  std::vector<Edge> edges;
  int next = 2;  // 0 = a, 1 = b
  ThetaEmbedding emb;
  emb.a = 0;
  emb.b = 1;
  int ls[3] = {l1, l2, l3};
  for (int i = 0; i < 3; i++) emb.paths[i] = add_chain(edges, next, 0, 1, ls[i]);
  Graph g(next, edges);
  std::string why;
  if (!emb.validate(g, &why))
    throw std::logic_error("make_theta: construction invalid: " + why);
  return {g, emb};
}

std::pair<Graph, PrismEmbedding> make_prism(int l1, int l2, int l3) {
  for (int l : {l1, l2, l3})
    if (l < 1)
      throw std::invalid_argument(
          "make_prism: every path must have length at least 1 (the two "
          "triangles are disjoint)");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  int next = 6;
  PrismEmbedding emb;
  emb.a = {0, 1, 2};
  emb.b = {3, 4, 5};
  int ls[3] = {l1, l2, l3};
  for (int i = 0; i < 3; i++)
    emb.paths[i] = add_chain(edges, next, i, 3 + i, ls[i]);
  Graph g(next, edges);
  std::string why;
  if (!emb.validate(g, &why))
    throw std::logic_error("make_prism: construction invalid: " + why);
  return {g, emb};
}

std::pair<Graph, PyramidEmbedding> make_pyramid(int l1, int l2, int l3) {
  int units = 0;
  for (int l : {l1, l2, l3}) {
    if (l < 1)
      throw std::invalid_argument(
          "make_pyramid: every path must have length at least 1");
    if (l == 1) units++;
  }
  if (units > 1)
    throw std::invalid_argument(
        "make_pyramid: at most one path may have length exactly 1");
  std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 3}};  // base triangle
  int next = 4;                                     // 0 = apex
  PyramidEmbedding emb;
  emb.apex = 0;
  emb.base = {1, 2, 3};
  int ls[3] = {l1, l2, l3};
  for (int i = 0; i < 3; i++)
    emb.paths[i] = add_chain(edges, next, 0, 1 + i, ls[i]);
  Graph g(next, edges);
  std::string why;
  if (!emb.validate(g, &why))
    throw std::logic_error("make_pyramid: construction invalid: " + why);
  return {g, emb};
}

std::pair<Graph, ConfigEmbedding> make_config(const std::string& kind, int l1,
                                              int l2, int l3) {
  if (kind == "theta") {
    auto [g, e] = make_theta(l1, l2, l3);
    return {g, ConfigEmbedding(e)};
  }
  if (kind == "prism") {
    auto [g, e] = make_prism(l1, l2, l3);
    return {g, ConfigEmbedding(e)};
  }
  if (kind == "pyramid") {
    auto [g, e] = make_pyramid(l1, l2, l3);
    return {g, ConfigEmbedding(e)};
  }
  throw std::invalid_argument("make_config: unknown kind '" + kind +
                              "' (want theta|prism|pyramid)");
}

Graph make_wall(int t) {
  if (t < 2) throw std::invalid_argument("make_wall: need t >= 2");
  // Columns present in each row (see header comment for the layout).
  auto row_cols = [&](int r) {
    std::vector<int> cols;
    int par = r == 1 ? 0 : r == t ? t % 2 : -1;
    for (int c = 0; c < 2 * t; c++)
      if (par < 0 || c % 2 == par) cols.push_back(c);
    return cols;
  };
  std::map<std::pair<int, int>, int> id;  // (row, col) -> vertex
  int n = 0;
  for (int r = 1; r <= t; r++)
    for (int c : row_cols(r)) id[{r, c}] = n++;

  std::vector<Edge> edges;
  for (int r = 1; r <= t; r++) {
    auto cols = row_cols(r);
    for (size_t i = 0; i + 1 < cols.size(); i++)
      edges.push_back({id[{r, cols[i]}], id[{r, cols[i + 1]}]});
  }
  for (int r = 1; r < t; r++)
    for (int c = 0; c < 2 * t; c++)
      if (c % 2 == (r + 1) % 2 && id.count({r, c}) && id.count({r + 1, c}))
        edges.push_back({id[{r, c}], id[{r + 1, c}]});
  return Graph(n, edges);
}

Graph line_graph(const Graph& f) {
  if (f.m() == 0) throw std::invalid_argument("line_graph: graph has no edges");
  std::vector<Edge> edges;
  for (int i = 0; i < f.m(); i++)
    for (int j = i + 1; j < f.m(); j++) {
      auto [a, b] = f.edge_list[i];
      auto [c, d] = f.edge_list[j];
      if (a == c || a == d || b == c || b == d) edges.push_back({i, j});
    }
  return Graph(f.m(), edges);
}

Graph subdivide_each_edge(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("subdivide_each_edge: negative k");
  if (k == 0) return g;
  std::vector<Edge> edges;
  int next = g.n;
  for (auto [u, v] : g.edge_list) {
    int prev = u;
    for (int i = 0; i < k; i++) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, v});
  }
  return Graph(next, edges);
}

std::pair<Graph, int> make_T_d_r(int d, int r) {
  if (d < 1 || r < 1) throw std::invalid_argument("make_T_d_r: need d,r >= 1");
  std::vector<Edge> edges;
  std::vector<int> frontier{0};
  int next = 1;
  for (int depth = 0; depth < r; depth++) {
    std::vector<int> nxt;
    // d children everywhere: the root then has degree d, other internal
    // vertices d+1 (parent plus d children).
    for (int v : frontier)
      for (int i = 0; i < d; i++) {
        edges.push_back({v, next});
        nxt.push_back(next++);
      }
    frontier = nxt;
  }
  return {Graph(next, edges), 0};
}

CaterpillarSpec CaterpillarSpec::parse(const std::string& text) {
  CaterpillarSpec s;
  for (size_t i = 0; i < text.size(); i++) {
    if (text[i] == 'L')
      s.legs.push_back(true);
    else if (text[i] == '.')
      s.legs.push_back(false);
    else
      throw std::invalid_argument(
          "caterpillar spec: expected 'L' or '.' at position " +
          std::to_string(i));
  }
  if (s.legs.empty())
    throw std::invalid_argument("caterpillar spec: empty spine");
  return s;
}

std::string CaterpillarSpec::str() const {
  std::string s;
  for (bool l : legs) s.push_back(l ? 'L' : '.');
  return s;
}

Graph CaterpillarSpec::caterpillar() const {
  int m = (int)legs.size();
  int leaves = 2;
  for (bool l : legs) leaves += l ? 1 : 0;
  if (leaves < 3)
    throw std::invalid_argument(
        "caterpillar spec: needs at least 3 leaves (add a leg)");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; i++) edges.push_back({i, i + 1});
  edges.push_back({m, 0});      // pendant extending the left end
  edges.push_back({m - 1, m + 1});  // pendant extending the right end
  int next = m + 2;
  for (int i = 0; i < m; i++)
    if (legs[i]) edges.push_back({i, next++});
  return Graph(next, edges);
}

ASeed make_a_seed(const CaterpillarSpec& spec) {
  ASeed r;
  r.caterpillar = spec.caterpillar();
  Graph h = line_graph(subdivide_each_edge(r.caterpillar, 1));
  VertexSet z = simplicial_set(h);
  std::vector<Edge> edges = h.edge_list;
  int apex = h.n;
  for (int v : z) edges.push_back({v, apex});
  r.g = Graph(h.n + 1, edges);
  r.apex = apex;
  r.seed = vs_full(h.n);
  return r;
}

Graph random_class_graph(int n, int t, uint64_t seed, int cap, int budget) {
  if (n < 1) throw std::invalid_argument("random_class_graph: need n >= 1");
  if (n > cap)
    throw CapExceeded("random_class_graph: n=" + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  SplitMix64 rng(derive_seed(seed, 0x67656e)); // stream tag for the sampler
  DetectOptions opt;
  opt.force = true;  // n can exceed the detector caps; sparse inputs stay fast
  std::string last;
  for (int attempt = 0; attempt < budget; attempt++) {
    // Thin the density gradually so hard (n, t) combinations still land.
    uint64_t num = attempt < budget / 2 ? 2 : 1;
    std::vector<Edge> edges;
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++)
        if (rng.chance(num, (uint64_t)n)) edges.push_back({i, j});
    Graph g(n, edges);
    if (auto c = find_clique(g, t)) {
      last = "clique of size " + std::to_string(t);
      continue;
    }
    if (auto th = find_theta(g, opt)) {
      last = "theta";
      continue;
    }
    if (auto pr = find_prism(g, opt)) {
      last = "prism";
      continue;
    }
    return g;
  }
  throw std::runtime_error(
      "random_class_graph: rejection budget exhausted; last candidate "
      "contained a " +
      last);
}

}  // namespace tpf
