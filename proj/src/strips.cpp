#include "tpf/strips.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tpf/io.hpp"
#include "tpf/obstructions.hpp"

namespace tpf {

namespace {

std::string estr(const Edge& e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

Edge mk_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

int other_end(const Edge& e, int v) { return e.first == v ? e.second : e.first; }

std::vector<Edge> edges_at(const Graph& t, int v) {
  std::vector<Edge> r;
  for (int u : t.adj[v]) r.push_back(mk_edge(u, v));
  std::sort(r.begin(), r.end());
  return r;
}

// Unique tree path between a and b, as a vertex sequence.
std::vector<int> tree_path(const Graph& t, int a, int b) {
  std::vector<int> parent(t.n, -2);
  std::deque<int> q{a};
  parent[a] = -1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == b) break;
    for (int y : t.adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        q.push_back(y);
      }
  }
  std::vector<int> path;
  for (int x = b; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// Vertices reachable from x without crossing the edge e.
VertexSet side_of(const Graph& t, const Edge& e, int x) {
  std::vector<uint8_t> seen(t.n, 0);
  std::deque<int> q{x};
  seen[x] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : t.adj[u]) {
      if (mk_edge(u, w) == e) continue;
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
    }
  }
  VertexSet r;
  for (int v = 0; v < t.n; ++v)
    if (seen[v]) r.push_back(v);
  return r;
}

Path cat(std::initializer_list<Path> parts) {
  Path out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Path rev(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

int pos_in(const Path& p, int x) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] == x) return (int)i;
  return -1;
}

// Initial segment of p up to and including x.
Path prefix_to(const Path& p, int x) {
  return Path(p.begin(), p.begin() + pos_in(p, x) + 1);
}

// Final segment of p from x (inclusive) to the end.
Path suffix_from(const Path& p, int x) {
  return Path(p.begin() + pos_in(p, x), p.end());
}

Path drop_front(const Path& p) { return Path(p.begin() + 1, p.end()); }

VertexSet nbrs_in(const Graph& g, const VertexSet& xs, const VertexSet& within) {
  return vs_intersect(set_neighborhood(g, xs), within);
}

}  // namespace

// ---------------------------------------------------------------------------
// SmoothTree
// ---------------------------------------------------------------------------

VertexSet SmoothTree::leaves() const {
  VertexSet r;
  for (int v = 0; v < tree.n; ++v)
    if (tree.degree(v) == 1) r.push_back(v);
  return r;
}

VertexSet SmoothTree::branch_vertices() const {
  VertexSet r;
  for (int v = 0; v < tree.n; ++v)
    if (tree.degree(v) >= 3) r.push_back(v);
  return r;
}

std::optional<std::string> SmoothTree::violation() const {
  if (tree.n < 3) return "fewer than three vertices";
  if (tree.m() != tree.n - 1 || !is_connected(tree)) return "not a tree";
  for (int v = 0; v < tree.n; ++v)
    if (tree.degree(v) == 2)
      return "vertex " + std::to_string(v) + " has degree two";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// StripStructure accessors
// ---------------------------------------------------------------------------

VertexSet StripStructure::eta_v(int v) const {
  auto it = vmap.find(v);
  return it == vmap.end() ? VertexSet{} : vs_sorted(it->second);
}

VertexSet StripStructure::eta_e(const Edge& e) const {
  auto it = emap.find(e);
  return it == emap.end() ? VertexSet{} : vs_sorted(it->second);
}

VertexSet StripStructure::eta_ev(const Edge& e, int v) const {
  auto it = evmap.find({e, v});
  return it == evmap.end() ? VertexSet{} : vs_sorted(it->second);
}

VertexSet StripStructure::big_b(int v) const {
  VertexSet r;
  for (const Edge& e : edges_at(tree.tree, v)) r = vs_union(r, eta_ev(e, v));
  return r;
}

VertexSet StripStructure::eta_circ(const Edge& e) const {
  return vs_minus(eta_e(e),
                  vs_union(eta_ev(e, e.first), eta_ev(e, e.second)));
}

VertexSet StripStructure::eta_t() const {
  VertexSet r;
  for (int v = 0; v < tree.tree.n; ++v) r = vs_union(r, eta_v(v));
  for (const Edge& e : tree.tree.edge_list) r = vs_union(r, eta_e(e));
  return r;
}

VertexSet StripStructure::eta_plus() const {
  return vs_union(eta_t(), VertexSet{apex});
}

VertexSet StripStructure::eta_sub(const VertexSet& s) const {
  VertexSet r;
  for (int v : s) r = vs_union(r, eta_v(v));
  for (const Edge& e : tree.tree.edge_list)
    if (vs_contains(s, e.first) && vs_contains(s, e.second))
      r = vs_union(r, eta_e(e));
  return r;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string to_strip_json(const StripStructure& s) {
  nlohmann::ordered_json j;
  j["tree"]["n"] = s.tree.tree.n;
  j["tree"]["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : s.tree.tree.edge_list)
    j["tree"]["edges"].push_back({e.first, e.second});
  j["apex"] = s.apex;
  j["vmap"] = nlohmann::ordered_json::object();
  for (int v = 0; v < s.tree.tree.n; ++v) j["vmap"][std::to_string(v)] = s.eta_v(v);
  j["emap"] = nlohmann::ordered_json::object();
  j["evmap"] = nlohmann::ordered_json::object();
  for (const Edge& e : s.tree.tree.edge_list) {
    j["emap"][estr(e)] = s.eta_e(e);
    j["evmap"][estr(e) + "@" + std::to_string(e.first)] = s.eta_ev(e, e.first);
    j["evmap"][estr(e) + "@" + std::to_string(e.second)] = s.eta_ev(e, e.second);
  }
  return j.dump();
}

namespace {

int parse_int_str(const std::string& s, const char* what) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("strip json: bad ") + what + " '" + s + "'", 0);
  }
  if (used != s.size())
    throw ParseError(std::string("strip json: bad ") + what + " '" + s + "'", 0);
  return v;
}

VertexSet parse_vertex_array(const nlohmann::json& a, const char* what) {
  if (!a.is_array())
    throw ParseError(std::string("strip json: ") + what + " must be an array", 0);
  VertexSet r;
  for (const auto& x : a) {
    if (!x.is_number_integer())
      throw ParseError(std::string("strip json: ") + what + " must hold integers", 0);
    r.push_back(x.get<int>());
  }
  return vs_sorted(r);
}

}  // namespace

StripStructure strip_from_json(const Graph& host, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("strip json: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("tree") || !j.contains("apex") ||
      !j.contains("vmap") || !j.contains("emap") || !j.contains("evmap"))
    throw ParseError(
        "strip json: expected object with tree, apex, vmap, emap, evmap", 0);
  const auto& jt = j["tree"];
  if (!jt.is_object() || !jt.contains("n") || !jt["n"].is_number_integer() ||
      !jt.contains("edges") || !jt["edges"].is_array())
    throw ParseError("strip json: tree needs integer n and an edges array", 0);
  std::vector<Edge> edges;
  for (const auto& e : jt["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("strip json: each tree edge must be a pair of integers", 0);
    edges.push_back(mk_edge(e[0].get<int>(), e[1].get<int>()));
  }
  StripStructure s;
  s.host = host;
  try {
    s.tree.tree = Graph(jt["n"].get<int>(), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("strip json: bad tree: ") + e.what(), 0);
  }
  if (!j["apex"].is_number_integer())
    throw ParseError("strip json: apex must be an integer", 0);
  s.apex = j["apex"].get<int>();
  if (!j["vmap"].is_object() || !j["emap"].is_object() || !j["evmap"].is_object())
    throw ParseError("strip json: vmap, emap and evmap must be objects", 0);
  for (const auto& [k, val] : j["vmap"].items())
    s.vmap[parse_int_str(k, "vmap key")] = parse_vertex_array(val, "vmap entry");
  auto parse_edge_key = [](const std::string& k) {
    size_t dash = k.find('-');
    if (dash == std::string::npos)
      throw ParseError("strip json: edge key '" + k + "' must look like u-v", 0);
    int u = parse_int_str(k.substr(0, dash), "edge key");
    int v = parse_int_str(k.substr(dash + 1), "edge key");
    if (u >= v)
      throw ParseError("strip json: edge key '" + k + "' must have u < v", 0);
    return Edge{u, v};
  };
  for (const auto& [k, val] : j["emap"].items())
    s.emap[parse_edge_key(k)] = parse_vertex_array(val, "emap entry");
  for (const auto& [k, val] : j["evmap"].items()) {
    size_t at = k.find('@');
    if (at == std::string::npos)
      throw ParseError("strip json: evmap key '" + k + "' must look like u-v@w", 0);
    Edge e = parse_edge_key(k.substr(0, at));
    int v = parse_int_str(k.substr(at + 1), "evmap key");
    if (v != e.first && v != e.second)
      throw ParseError("strip json: evmap key '" + k +
                           "' names a vertex not incident with the edge",
                       0);
    s.evmap[{e, v}] = parse_vertex_array(val, "evmap entry");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Rungs (internal, light preconditions)
// ---------------------------------------------------------------------------

namespace {

RungReport rungs_impl(const StripStructure& s, const Edge& e) {
  const Graph& g = s.host;
  VertexSet A = s.eta_ev(e, e.first), B = s.eta_ev(e, e.second);
  VertexSet all = s.eta_e(e), circ = s.eta_circ(e);
  RungReport out;
  for (int x : vs_intersect(A, B)) out.rungs.push_back({e, {x}});
  VertexSet aonly = vs_minus(A, B), bonly = vs_minus(B, A);
  std::vector<uint8_t> in_circ(g.n, 0), in_b(g.n, 0), on_path(g.n, 0);
  for (int x : circ) in_circ[x] = 1;
  for (int x : bonly) in_b[x] = 1;
  long steps = 0;
  Path path;
  std::function<void()> dfs = [&]() {
    int last = path.back();
    for (int w : g.adj[last]) {
      if (++steps > 2000000)
        throw CapExceeded("rung enumeration budget exceeded for edge " + estr(e));
      if (!in_circ[w] && !in_b[w]) continue;
      if (on_path[w]) continue;
      bool chord = false;
      for (size_t i = 0; i + 1 < path.size() && !chord; ++i)
        if (g.adjacent(w, path[i])) chord = true;
      if (chord) continue;
      path.push_back(w);
      if (in_b[w]) {
        out.rungs.push_back({e, path});
      } else {
        on_path[w] = 1;
        dfs();
        on_path[w] = 0;
      }
      path.pop_back();
    }
  };
  for (int x : aonly) {
    path = {x};
    on_path[x] = 1;
    dfs();
    on_path[x] = 0;
  }
  VertexSet covered;
  for (const Rung& r : out.rungs) covered = vs_union(covered, vs_sorted(r.path));
  out.tilde = vs_minus(all, covered);
  return out;
}

}  // namespace

RungReport strip_rungs(const StripStructure& s, const Edge& e) {
  const auto& el = s.tree.tree.edge_list;
  if (std::find(el.begin(), el.end(), e) == el.end())
    throw std::invalid_argument("strip_rungs: " + estr(e) + " is not a tree edge");
  return rungs_impl(s, e);
}

// ---------------------------------------------------------------------------
// is_trapped
// ---------------------------------------------------------------------------

bool is_trapped(const Graph& g, const VertexSet& h, int a) {
  if (a < 0 || a >= g.n || !vs_contains(h, a))
    throw std::invalid_argument("is_trapped: vertex not in the candidate set");
  if (!vs_subset(neighborhood(g, a, 2, true), h)) return false;
  for (int w : g.adj[a]) {
    int deg = 0;
    for (int z : g.adj[w])
      if (vs_contains(h, z)) ++deg;
    if (deg != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pyramid-side classification helpers
// ---------------------------------------------------------------------------

std::optional<std::string> pyramid_local_location(const PyramidEmbedding& sigma,
                                                  const VertexSet& x) {
  for (int i = 0; i < 3; ++i)
    if (vs_subset(x, vs_sorted(sigma.paths[i]))) return "P" + std::to_string(i + 1);
  if (vs_subset(x, vs_sorted({sigma.base[0], sigma.base[1], sigma.base[2]})))
    return "base";
  return std::nullopt;
}

bool is_wide(const Graph& g, const PyramidEmbedding& sigma, int p) {
  if (vs_contains(sigma.vertices(), p))
    throw std::invalid_argument("is_wide: vertex lies in the pyramid");
  VertexSet x = nbrs_in(g, {p}, sigma.vertices());
  return !pyramid_local_location(sigma, x).has_value();
}

namespace {

bool is_corner_path_at(const Graph& g, const PyramidEmbedding& sigma,
                       const Path& p, int i) {
  int bi = sigma.base[i];
  VertexSet pi = vs_sorted(sigma.paths[i]);
  int q1 = p.front(), q2 = p.back();
  bool side = false;
  for (int x : sigma.paths[i])
    if (x != bi && g.adjacent(q1, x)) side = true;
  if (!side) return false;
  int bj = sigma.base[(i + 1) % 3], bk = sigma.base[(i + 2) % 3];
  if (!g.adjacent(q2, bj) || !g.adjacent(q2, bk)) return false;
  for (int w : p)
    for (int sv : sigma.vertices()) {
      if (sv == bi || !g.adjacent(w, sv)) continue;
      bool ok = (w == q1 && vs_contains(pi, sv) && sv != bi) ||
                (w == q2 && (sv == bj || sv == bk));
      if (!ok) return false;
    }
  return true;
}

}  // namespace

std::optional<CornerWitness> find_corner_subpath(const Graph& g,
                                                 const PyramidEmbedding& sigma,
                                                 const Path& p) {
  int L = (int)p.size();
  for (int len = 1; len <= L; ++len)
    for (int start = 0; start + len <= L; ++start) {
      Path sub(p.begin() + start, p.begin() + start + len);
      for (int orient = 0; orient < (len == 1 ? 1 : 2); ++orient) {
        Path cand = orient == 0 ? sub : rev(sub);
        for (int i = 0; i < 3; ++i)
          if (is_corner_path_at(g, sigma, cand, i)) return CornerWitness{i, cand};
      }
    }
  return std::nullopt;
}

bool is_jewel_at(const Graph& g, const PyramidEmbedding& sigma, int q, int i) {
  if (vs_contains(sigma.vertices(), q)) return false;
  for (int x : sigma.paths[i])
    if (g.adjacent(q, x)) return false;
  for (int j = 0; j < 3; ++j) {
    if (j == i) continue;
    const Path& pj = sigma.paths[j];
    VertexSet nq, nb{sigma.base[j]};
    for (int x : pj) {
      if (g.adjacent(q, x)) nq.push_back(x);
      if (x != sigma.base[j] && g.adjacent(x, sigma.base[j])) nb.push_back(x);
    }
    if (vs_sorted(nq) != vs_sorted(nb)) return false;
  }
  return true;
}

std::optional<int> jewel_corner(const Graph& g, const PyramidEmbedding& sigma,
                                int q) {
  for (int i = 0; i < 3; ++i)
    if (is_jewel_at(g, sigma, q, i)) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Obstruction extraction for the trichotomy
// ---------------------------------------------------------------------------

namespace {

std::optional<PyramidClassification> wrap_theta(const Graph& g, ThetaEmbedding th) {
  std::string why;
  if (!th.validate(g, &why)) return std::nullopt;
  PyramidClassification out;
  out.kind = PyramidClassification::Kind::obstruction;
  out.theta = std::move(th);
  return out;
}

std::optional<PyramidClassification> wrap_prism(const Graph& g, PrismEmbedding pr) {
  std::string why;
  if (!pr.validate(g, &why)) return std::nullopt;
  PyramidClassification out;
  out.kind = PyramidClassification::Kind::obstruction;
  out.prism = std::move(pr);
  return out;
}

// Neighbours of q on sigma.paths[i], in order from the apex.
std::vector<int> path_nbrs(const Graph& g, const PyramidEmbedding& sigma, int q,
                           int i) {
  std::vector<int> r;
  for (int x : sigma.paths[i])
    if (g.adjacent(q, x)) r.push_back(x);
  return r;
}

// A single vertex whose attachment is non-local, with no corner and no jewel:
// assemble a theta or prism per the case analysis.
std::optional<PyramidClassification> extract_single(const Graph& g,
                                                    const PyramidEmbedding& sigma,
                                                    int q) {
  const auto& ps = sigma.paths;
  std::array<std::vector<int>, 3> nb;
  std::vector<int> anti;
  for (int i = 0; i < 3; ++i) {
    nb[i] = path_nbrs(g, sigma, q, i);
    if (nb[i].empty()) anti.push_back(i);
  }
  if (anti.size() >= 2) return std::nullopt;
  if (anti.empty()) {
    ThetaEmbedding th;
    th.a = sigma.apex;
    th.b = q;
    for (int i = 0; i < 3; ++i)
      th.paths[i] = cat({prefix_to(ps[i], nb[i].front()), {q}});
    return wrap_theta(g, th);
  }
  int i3 = anti[0];
  int j1 = i3 == 0 ? 1 : 0, j2 = i3 == 2 ? 1 : 2;
  auto base_only = [&](int j) {
    return nb[j].size() == 1 && nb[j][0] == sigma.base[j];
  };
  if (base_only(j1) && base_only(j2)) return std::nullopt;
  if (base_only(j1) || base_only(j2)) {
    int ja = base_only(j1) ? j1 : j2, jb = ja == j1 ? j2 : j1;
    ThetaEmbedding th;
    th.a = sigma.apex;
    th.b = sigma.base[ja];
    th.paths[0] = cat({prefix_to(ps[jb], nb[jb].front()), {q, sigma.base[ja]}});
    th.paths[1] = ps[ja];
    th.paths[2] = cat({ps[i3], {sigma.base[ja]}});
    return wrap_theta(g, th);
  }
  auto two_clique = [&](int j) {
    return nb[j].size() == 2 && g.adjacent(nb[j][0], nb[j][1]);
  };
  if (!two_clique(j1) || !two_clique(j2)) {
    int ja = !two_clique(j1) ? j1 : j2, jb = ja == j1 ? j2 : j1;
    int x = nb[ja].front(), y = nb[ja].back();
    ThetaEmbedding th;
    th.a = sigma.apex;
    if (x == y) {
      th.b = x;
      th.paths[0] = prefix_to(ps[ja], x);
      th.paths[1] = cat({prefix_to(ps[jb], nb[jb].front()), {q, x}});
      th.paths[2] = cat({ps[i3], rev(suffix_from(ps[ja], x))});
    } else {
      th.b = q;
      th.paths[0] = cat({prefix_to(ps[ja], x), {q}});
      th.paths[1] = cat({prefix_to(ps[jb], nb[jb].front()), {q}});
      th.paths[2] = cat({ps[i3], rev(suffix_from(ps[ja], y)), {q}});
    }
    return wrap_theta(g, th);
  }
  int ja = nb[j1].back() != sigma.base[j1]   ? j1
           : nb[j2].back() != sigma.base[j2] ? j2
                                             : -1;
  if (ja < 0) return std::nullopt;  // would be a jewel, handled earlier
  int jb = ja == j1 ? j2 : j1;
  PrismEmbedding pr;
  pr.a = {nb[ja].front(), nb[ja].back(), q};
  pr.b = {sigma.base[i3], sigma.base[ja], sigma.base[jb]};
  pr.paths[0] = cat({rev(prefix_to(ps[ja], nb[ja].front())), drop_front(ps[i3])});
  pr.paths[1] = suffix_from(ps[ja], nb[ja].back());
  pr.paths[2] = cat({{q}, suffix_from(ps[jb], nb[jb].back())});
  return wrap_prism(g, pr);
}

// A minimal non-local path with at least two vertices.
std::optional<PyramidClassification> extract_path(const Graph& g,
                                                  const PyramidEmbedding& sigma,
                                                  const Path& q) {
  VertexSet sig = sigma.vertices();
  VertexSet na = nbrs_in(g, vs_sorted(Path(q.begin(), q.end() - 1)), sig);
  VertexSet nd = nbrs_in(g, vs_sorted(Path(q.begin() + 1, q.end())), sig);
  const auto& ps = sigma.paths;
  for (int orient = 0; orient < 2; ++orient) {
    Path qo = orient == 0 ? q : rev(q);
    const VertexSet& side1 = orient == 0 ? na : nd;  // covers N(p1)
    const VertexSet& side2 = orient == 0 ? nd : na;  // covers N(p2)
    int p1 = qo.front(), p2 = qo.back();
    for (int i1 = 0; i1 < 3; ++i1) {
      if (!vs_subset(side1, vs_sorted(ps[i1]))) continue;
      std::vector<int> nb1 = path_nbrs(g, sigma, p1, i1);
      if (nb1.empty()) continue;
      int x1 = nb1.front(), y1 = nb1.back();
      // p2 attaches to the base: always yields a theta ending at a base vertex.
      if (vs_subset(side2, vs_sorted({sigma.base[0], sigma.base[1], sigma.base[2]}))) {
        if (x1 == sigma.base[i1]) continue;
        for (int i2 = 0; i2 < 3; ++i2) {
          if (i2 == i1 || !g.adjacent(p2, sigma.base[i2])) continue;
          int i3 = 3 - i1 - i2;
          ThetaEmbedding th;
          th.a = sigma.apex;
          th.b = sigma.base[i2];
          th.paths[0] = cat({prefix_to(ps[i1], x1), qo, {sigma.base[i2]}});
          th.paths[1] = ps[i2];
          th.paths[2] = cat({ps[i3], {sigma.base[i2]}});
          if (auto r = wrap_theta(g, th)) return r;
        }
        continue;
      }
      for (int i2 = 0; i2 < 3; ++i2) {
        if (i2 == i1 || !vs_subset(side2, vs_sorted(ps[i2]))) continue;
        std::vector<int> nb2 = path_nbrs(g, sigma, p2, i2);
        if (nb2.empty()) continue;
        int i3 = 3 - i1 - i2;
        int x2 = nb2.front(), y2 = nb2.back();
        if (nb2.size() == 1 && x2 == sigma.base[i2]) {
          if (x1 == sigma.base[i1]) continue;
          ThetaEmbedding th;
          th.a = sigma.apex;
          th.b = sigma.base[i2];
          th.paths[0] = cat({prefix_to(ps[i1], x1), qo, {sigma.base[i2]}});
          th.paths[1] = ps[i2];
          th.paths[2] = cat({ps[i3], {sigma.base[i2]}});
          if (auto r = wrap_theta(g, th)) return r;
          continue;
        }
        if (nb1.size() == 1 && x1 == sigma.base[i1]) continue;  // mirrored orientation
        bool cl1 = nb1.size() == 2 && g.adjacent(x1, y1);
        bool cl2 = nb2.size() == 2 && g.adjacent(x2, y2);
        if (!cl1 && nb1.size() == 1) {
          ThetaEmbedding th;
          th.a = sigma.apex;
          th.b = x1;
          th.paths[0] = prefix_to(ps[i1], x1);
          th.paths[1] = cat({prefix_to(ps[i2], x2), rev(qo), {x1}});
          th.paths[2] = cat({ps[i3], rev(suffix_from(ps[i1], x1))});
          if (auto r = wrap_theta(g, th)) return r;
          continue;
        }
        if (!cl1) {  // x1, y1 distinct and non-adjacent
          ThetaEmbedding th;
          th.a = sigma.apex;
          th.b = p1;
          th.paths[0] = cat({prefix_to(ps[i1], x1), {p1}});
          th.paths[1] = cat({prefix_to(ps[i2], x2), rev(qo)});
          th.paths[2] = cat({ps[i3], rev(suffix_from(ps[i1], y1)), {p1}});
          if (auto r = wrap_theta(g, th)) return r;
          continue;
        }
        if (!cl2) continue;  // mirrored orientation handles it
        PrismEmbedding pr;
        pr.a = {p1, x1, y1};
        pr.b = {p2, x2, y2};
        pr.paths[0] = qo;
        pr.paths[1] = cat({rev(prefix_to(ps[i1], x1)), drop_front(prefix_to(ps[i2], x2))});
        pr.paths[2] = cat({suffix_from(ps[i1], y1), rev(suffix_from(ps[i2], y2))});
        if (auto r = wrap_prism(g, pr)) return r;
      }
    }
  }
  return std::nullopt;
}

PyramidClassification extract_obstruction(const Graph& g,
                                          const PyramidEmbedding& sigma,
                                          const Path& p) {
  VertexSet sig = sigma.vertices();
  // Minimal connected subpath with a non-local attachment: every shorter
  // subpath attaches locally, which the case analysis relies on.
  int L = (int)p.size();
  for (int len = 1; len <= L; ++len)
    for (int start = 0; start + len <= L; ++start) {
      Path sub(p.begin() + start, p.begin() + start + len);
      if (pyramid_local_location(sigma, nbrs_in(g, vs_sorted(sub), sig)))
        continue;
      auto got = len == 1 ? extract_single(g, sigma, sub[0])
                          : extract_path(g, sigma, sub);
      if (got) return *got;
      // Fall back to an exhaustive search, first near the pyramid.
      DetectOptions opt;
      opt.force = true;
      VertexSet cand = vs_union(sig, vs_sorted(sub));
      Graph small = induced_subgraph(g, cand);
      if (auto th = find_theta(small, opt)) {
        ThetaEmbedding t2 = *th;
        t2.a = cand[t2.a];
        t2.b = cand[t2.b];
        for (auto& pp : t2.paths)
          for (int& x : pp) x = cand[x];
        if (auto r = wrap_theta(g, t2)) return *r;
      }
      if (auto pr = find_prism(small, opt)) {
        PrismEmbedding p2 = *pr;
        for (int& x : p2.a) x = cand[x];
        for (int& x : p2.b) x = cand[x];
        for (auto& pp : p2.paths)
          for (int& x : pp) x = cand[x];
        if (auto r = wrap_prism(g, p2)) return *r;
      }
      if (auto th = find_theta(g, opt)) {
        if (auto r = wrap_theta(g, *th)) return *r;
      }
      if (auto pr = find_prism(g, opt)) {
        if (auto r = wrap_prism(g, *pr)) return *r;
      }
      throw std::logic_error(
          "classify_wrt_pyramid: attachment is non-local with no corner path "
          "and no jewel, yet the host has no theta and no prism");
    }
  throw std::logic_error("extract_obstruction called with a local path");
}

}  // namespace

PyramidClassification classify_wrt_pyramid(const Graph& g, const VertexSet& h,
                                           int a, const PyramidEmbedding& sigma,
                                           const Path& p) {
  if (sigma.apex != a)
    throw std::invalid_argument("classify_wrt_pyramid: apex mismatch");
  std::string why;
  if (!sigma.validate(g, &why))
    throw std::invalid_argument("classify_wrt_pyramid: invalid pyramid: " + why);
  if (!vs_subset(sigma.vertices(), h))
    throw std::invalid_argument("classify_wrt_pyramid: pyramid not inside H");
  if (!is_trapped(g, h, a))
    throw std::invalid_argument("classify_wrt_pyramid: apex not trapped in H");
  if (p.empty() || !is_path(g, p, &why))
    throw std::invalid_argument("classify_wrt_pyramid: not an induced path: " + why);
  if (!vs_intersect(vs_sorted(p), h).empty())
    throw std::invalid_argument("classify_wrt_pyramid: path meets H");

  PyramidClassification out;
  VertexSet x = nbrs_in(g, vs_sorted(p), sigma.vertices());
  if (auto loc = pyramid_local_location(sigma, x)) {
    out.kind = PyramidClassification::Kind::local;
    out.location = *loc;
    return out;
  }
  if (auto cw = find_corner_subpath(g, sigma, p)) {
    out.kind = PyramidClassification::Kind::corner_path;
    out.corner = cw->corner;
    out.witness = cw->witness;
    return out;
  }
  for (int q : p)
    if (auto i = jewel_corner(g, sigma, q)) {
      out.kind = PyramidClassification::Kind::jewel;
      out.corner = *i;
      out.witness = {q};
      return out;
    }
  return extract_obstruction(g, sigma, p);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

StripReport validate_strip(const StripStructure& s) {
  StripReport rep;
  auto fail = [&](const std::string& ax, const std::string& w) {
    rep.ok = false;
    rep.axiom = ax;
    rep.witness = w;
    return rep;
  };
  const Graph& g = s.host;
  const Graph& t = s.tree.tree;
  if (s.apex < 0 || s.apex >= g.n) return fail("domain", "apex out of range");
  std::set<Edge> tedges(t.edge_list.begin(), t.edge_list.end());
  auto check_elems = [&](const VertexSet& xs, const std::string& name)
      -> std::optional<std::string> {
    for (int x : xs) {
      if (x < 0 || x >= g.n)
        return name + " contains out-of-range vertex " + std::to_string(x);
      if (x == s.apex) return name + " contains the apex";
    }
    return std::nullopt;
  };
  for (const auto& [v, xs] : s.vmap) {
    if (v < 0 || v >= t.n)
      return fail("domain", "vmap key " + std::to_string(v) + " is not a tree vertex");
    if (auto w = check_elems(xs, "eta(" + std::to_string(v) + ")"))
      return fail("domain", *w);
  }
  for (const auto& [e, xs] : s.emap) {
    if (!tedges.count(e))
      return fail("domain", "emap key " + estr(e) + " is not a tree edge");
    if (auto w = check_elems(xs, "eta(" + estr(e) + ")")) return fail("domain", *w);
  }
  for (const auto& [key, xs] : s.evmap) {
    const auto& [e, v] = key;
    if (!tedges.count(e) || (v != e.first && v != e.second))
      return fail("domain", "evmap key " + estr(e) + "@" + std::to_string(v) +
                                " is not an incident pair");
    if (auto w = check_elems(xs, "eta(" + estr(e) + "," + std::to_string(v) + ")"))
      return fail("domain", *w);
  }
  if (auto w = s.tree.violation()) return fail("tree", *w);

  // S1: all eta(v) and eta(e) pairwise disjoint.
  {
    std::vector<std::string> owner(g.n);
    auto claim = [&](const VertexSet& xs, const std::string& name)
        -> std::optional<std::string> {
      for (int x : xs) {
        if (!owner[x].empty())
          return "vertex " + std::to_string(x) + " lies in both " + owner[x] +
                 " and " + name;
        owner[x] = name;
      }
      return std::nullopt;
    };
    for (int v = 0; v < t.n; ++v)
      if (auto w = claim(s.eta_v(v), "eta(" + std::to_string(v) + ")"))
        return fail("S1", *w);
    for (const Edge& e : t.edge_list)
      if (auto w = claim(s.eta_e(e), "eta(" + estr(e) + ")")) return fail("S1", *w);
  }
  // S2: leaves carry no vertex set.
  for (int l : s.tree.leaves())
    if (!s.eta_v(l).empty())
      return fail("S2", "eta(" + std::to_string(l) + ") nonempty at a leaf");
  // S3: interfaces nonempty and inside eta(e).
  for (const Edge& e : t.edge_list)
    for (int v : {e.first, e.second}) {
      VertexSet iv = s.eta_ev(e, v);
      std::string name = "eta(" + estr(e) + "," + std::to_string(v) + ")";
      if (iv.empty()) return fail("S3", name + " is empty");
      if (!vs_subset(iv, s.eta_e(e)))
        return fail("S3", name + " is not contained in eta(" + estr(e) + ")");
    }
  // S4: between two edge strips, exactly the interface completions at shared
  // tree vertices.
  for (size_t a1 = 0; a1 < t.edge_list.size(); ++a1)
    for (size_t a2 = a1 + 1; a2 < t.edge_list.size(); ++a2) {
      Edge e = t.edge_list[a1], f = t.edge_list[a2];
      int shared = -1;
      for (int v : {e.first, e.second})
        if (v == f.first || v == f.second) shared = v;
      VertexSet ie, iff;
      if (shared >= 0) {
        ie = s.eta_ev(e, shared);
        iff = s.eta_ev(f, shared);
      }
      for (int x : s.eta_e(e))
        for (int y : s.eta_e(f)) {
          bool expect = shared >= 0 && vs_contains(ie, x) && vs_contains(iff, y);
          bool adj = g.adjacent(x, y);
          if (adj && !expect)
            return fail("S4", "unexpected edge " + std::to_string(x) + "-" +
                                  std::to_string(y) + " between eta(" + estr(e) +
                                  ") and eta(" + estr(f) + ")");
          if (!adj && expect)
            return fail("S4", "missing edge " + std::to_string(x) + "-" +
                                  std::to_string(y) + " between eta(" + estr(e) +
                                  "," + std::to_string(shared) + ") and eta(" +
                                  estr(f) + "," + std::to_string(shared) + ")");
        }
    }
  // S5: every vertex of eta(e) reaches both interfaces through the interior.
  for (const Edge& e : t.edge_list) {
    VertexSet all = s.eta_e(e), circ = s.eta_circ(e);
    for (int v : {e.first, e.second}) {
      VertexSet target = s.eta_ev(e, v);
      for (int x : all) {
        if (vs_contains(target, x)) continue;
        std::vector<uint8_t> seen(g.n, 0);
        std::deque<int> q{x};
        seen[x] = 1;
        bool reached = false;
        while (!q.empty() && !reached) {
          int u = q.front();
          q.pop_front();
          for (int w : g.adj[u]) {
            if (seen[w] || !vs_contains(all, w)) continue;
            if (vs_contains(target, w)) {
              reached = true;
              break;
            }
            if (vs_contains(circ, w)) {
              seen[w] = 1;
              q.push_back(w);
            }
          }
        }
        if (!reached)
          return fail("S5", "vertex " + std::to_string(x) +
                                " cannot reach eta(" + estr(e) + "," +
                                std::to_string(v) + ") through the interior");
      }
    }
  }
  // S6: eta(v) attaches inside B(v) only (within eta(T)).
  for (int v = 0; v < t.n; ++v) {
    VertexSet ev = s.eta_v(v);
    if (ev.empty()) continue;
    VertexSet allowed = vs_union(s.big_b(v), ev);
    for (const Edge& e : t.edge_list)
      for (int y : s.eta_e(e))
        if (!vs_contains(allowed, y))
          for (int x : ev)
            if (g.adjacent(x, y))
              return fail("S6", "eta(" + std::to_string(v) + ") vertex " +
                                    std::to_string(x) + " adjacent to " +
                                    std::to_string(y) + " outside B(" +
                                    std::to_string(v) + ")");
  }
  // S7: every component of eta(v) attaches to B(v).
  for (int v = 0; v < t.n; ++v) {
    VertexSet ev = s.eta_v(v);
    if (ev.empty()) continue;
    VertexSet bv = s.big_b(v);
    for (const VertexSet& d : components(g, ev))
      if (vs_intersect(set_neighborhood(g, d), bv).empty())
        return fail("S7", "component of eta(" + std::to_string(v) +
                              ") containing " + std::to_string(d.front()) +
                              " has no attachment to B(" + std::to_string(v) + ")");
  }
  // S8: the apex is complete to the leaf interfaces and has no other
  // neighbour inside eta(T).
  {
    VertexSet leaf_union;
    for (int l : s.tree.leaves()) {
      Edge el = edges_at(t, l)[0];
      VertexSet il = s.eta_ev(el, l);
      for (int x : il)
        if (!g.adjacent(s.apex, x))
          return fail("S8", "apex not adjacent to " + std::to_string(x) +
                                " in eta(" + estr(el) + "," + std::to_string(l) + ")");
      leaf_union = vs_union(leaf_union, il);
    }
    for (int y : vs_intersect(vs_sorted(g.adj[s.apex]), s.eta_t()))
      if (!vs_contains(leaf_union, y))
        return fail("S8", "apex adjacent to " + std::to_string(y) +
                              " outside the leaf interfaces");
  }
  rep.ok = true;

  rep.tame = true;
  rep.substantial = true;
  for (int v = 0; v < t.n && rep.tame; ++v)
    if (!s.eta_v(v).empty()) rep.tame = false;
  for (const Edge& e : t.edge_list) {
    RungReport rr = rungs_impl(s, e);
    if (!rr.tilde.empty()) rep.tame = false;
    bool has_long = false;
    for (const Rung& r : rr.rungs)
      if (r.is_long()) has_long = true;
    if (!has_long) rep.substantial = false;
  }
  rep.rich = is_trapped(g, s.eta_plus(), s.apex);
  if (rep.rich)
    for (int l : s.tree.leaves())
      if (s.eta_ev(edges_at(t, l)[0], l).size() != 1) rep.rich = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Locality
// ---------------------------------------------------------------------------

namespace {

bool set_local(const StripStructure& s, const VertexSet& x, LocalityResult* out) {
  for (const Edge& e : s.tree.tree.edge_list)
    if (vs_subset(x, s.eta_e(e))) {
      if (out) {
        out->local = true;
        out->at_edge = e;
      }
      return true;
    }
  for (int v = 0; v < s.tree.tree.n; ++v)
    if (vs_subset(x, vs_union(s.big_b(v), s.eta_v(v)))) {
      if (out) {
        out->local = true;
        out->at_vertex = v;
      }
      return true;
    }
  return false;
}

}  // namespace

LocalityResult locality(const StripStructure& s, const VertexSet& x) {
  if (!vs_subset(x, s.eta_t()))
    throw std::invalid_argument("locality: set not contained in eta(T)");
  LocalityResult out;
  if (set_local(s, x, &out)) return out;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (!set_local(s, {x[i], x[j]}, nullptr)) {
        out.local = false;
        out.nonlocal_pair = {x[i], x[j]};
        return out;
      }
  throw std::logic_error("locality: non-local set with all pairs local");
}

// ---------------------------------------------------------------------------
// Eta-pyramids
// ---------------------------------------------------------------------------

namespace {

struct RungCache {
  const StripStructure& s;
  std::map<Edge, std::vector<Rung>> cache;
  const std::vector<Rung>& get(const Edge& e) {
    auto it = cache.find(e);
    if (it == cache.end())
      it = cache.emplace(e, rungs_impl(s, e).rungs).first;
    return it->second;
  }
};

// All rung-concatenation paths from eta(e, v) towards a leaf beyond e; the
// rung inside e itself must be long.
std::vector<Path> enumerate_gammas(const StripStructure& s, int v, const Edge& e,
                                   RungCache& rc, long& budget) {
  const Graph& t = s.tree.tree;
  std::vector<Path> out;
  int u = other_end(e, v);
  for (int l : side_of(t, e, u)) {
    if (t.degree(l) != 1) continue;
    std::vector<int> vpath = tree_path(t, v, l);
    std::vector<std::vector<Path>> opts;
    bool dead = false;
    for (size_t j = 1; j < vpath.size() && !dead; ++j) {
      Edge f = mk_edge(vpath[j - 1], vpath[j]);
      std::vector<Path> level;
      for (const Rung& r : rc.get(f)) {
        if (j == 1 && !r.is_long()) continue;
        Path p = r.path;
        if (vpath[j - 1] != f.first) std::reverse(p.begin(), p.end());
        level.push_back(p);
      }
      if (level.empty()) dead = true;
      opts.push_back(level);
    }
    if (dead) continue;
    Path gamma;
    std::function<void(size_t)> build = [&](size_t j) {
      if (j == opts.size()) {
        if (--budget < 0) throw CapExceeded("eta-pyramid enumeration budget exceeded");
        out.push_back(gamma);
        return;
      }
      for (const Path& piece : opts[j]) {
        size_t keep = gamma.size();
        gamma.insert(gamma.end(), piece.begin(), piece.end());
        build(j + 1);
        gamma.resize(keep);
      }
    };
    build(0);
  }
  return out;
}

std::vector<PyramidEmbedding> eta_pyramids_impl(const StripStructure& s,
                                                const SeagullClaw& claw,
                                                long budget) {
  RungCache rc{s, {}};
  std::array<std::vector<Path>, 3> opts;
  for (int i = 0; i < 3; ++i)
    opts[i] = enumerate_gammas(s, claw.center, claw.edges[i], rc, budget);
  std::vector<PyramidEmbedding> out;
  for (const Path& g0 : opts[0])
    for (const Path& g1 : opts[1])
      for (const Path& g2 : opts[2]) {
        PyramidEmbedding pe;
        pe.apex = s.apex;
        const std::array<const Path*, 3> gs{&g0, &g1, &g2};
        for (int i = 0; i < 3; ++i) {
          pe.base[i] = gs[i]->front();
          pe.paths[i] = cat({{s.apex}, rev(*gs[i])});
        }
        std::string why;
        if (!pe.validate(s.host, &why))
          throw std::logic_error("eta_pyramids: enumerated pyramid invalid: " + why);
        out.push_back(pe);
        if (--budget < 0)
          throw CapExceeded("eta-pyramid enumeration budget exceeded");
      }
  return out;
}

void check_claw(const StripStructure& s, const SeagullClaw& claw, size_t want) {
  const Graph& t = s.tree.tree;
  if (claw.center < 0 || claw.center >= t.n)
    throw std::invalid_argument("claw centre is not a tree vertex");
  if (claw.edges.size() != want)
    throw std::invalid_argument("claw needs " + std::to_string(want) + " edges");
  std::set<Edge> seen;
  std::set<Edge> tedges(t.edge_list.begin(), t.edge_list.end());
  for (const Edge& e : claw.edges) {
    if (!tedges.count(e))
      throw std::invalid_argument("claw edge " + estr(e) + " is not a tree edge");
    if (e.first != claw.center && e.second != claw.center)
      throw std::invalid_argument("claw edge " + estr(e) +
                                  " is not incident with the centre");
    if (!seen.insert(e).second)
      throw std::invalid_argument("claw edges must be distinct");
  }
}

}  // namespace

std::vector<PyramidEmbedding> eta_pyramids(const StripStructure& s,
                                           const SeagullClaw& claw) {
  StripReport rep = validate_strip(s);
  if (!rep.ok)
    throw std::invalid_argument("eta_pyramids: invalid strip (" + rep.axiom +
                                ": " + rep.witness + ")");
  if (!rep.substantial)
    throw std::invalid_argument("eta_pyramids: strip is not substantial");
  check_claw(s, claw, 3);
  return eta_pyramids_impl(s, claw, 200000);
}

// ---------------------------------------------------------------------------
// Jewels
// ---------------------------------------------------------------------------

VertexSet JewelIndex::at_vertex(int v) const {
  VertexSet r;
  for (const auto& [key, xs] : at_seagull)
    if (std::get<0>(key) == v) r = vs_union(r, xs);
  return r;
}

VertexSet JewelIndex::all() const {
  VertexSet r;
  for (const auto& [key, xs] : at_seagull) r = vs_union(r, xs);
  return r;
}

namespace {

JewelIndex jewels_impl(const StripStructure& s) {
  JewelIndex out;
  const Graph& t = s.tree.tree;
  VertexSet external = vs_minus(vs_full(s.host.n), s.eta_plus());
  for (int v = 0; v < t.n; ++v) {
    if (t.degree(v) < 2) continue;
    std::vector<Edge> ev = edges_at(t, v);
    for (size_t i = 0; i < ev.size(); ++i)
      for (size_t j = i + 1; j < ev.size(); ++j) {
        VertexSet found;
        for (const Edge& e3 : ev) {
          if (e3 == ev[i] || e3 == ev[j]) continue;
          SeagullClaw claw{v, {ev[i], ev[j], e3}};
          long budget = 200000;
          for (const PyramidEmbedding& pe : eta_pyramids_impl(s, claw, budget))
            for (int p : external)
              if (is_jewel_at(s.host, pe, p, 2)) found = vs_union(found, {p});
        }
        out.at_seagull[{v, ev[i], ev[j]}] = found;
      }
  }
  return out;
}

}  // namespace

JewelIndex find_strip_jewels(const StripStructure& s) {
  StripReport rep = validate_strip(s);
  if (!rep.ok)
    throw std::invalid_argument("find_strip_jewels: invalid strip (" + rep.axiom +
                                ": " + rep.witness + ")");
  if (!rep.substantial)
    throw std::invalid_argument("find_strip_jewels: strip is not substantial");
  if (!rep.rich)
    throw std::invalid_argument("find_strip_jewels: strip is not rich");
  return jewels_impl(s);
}

// ---------------------------------------------------------------------------
// Saturation
// ---------------------------------------------------------------------------

namespace {

// Locality membership tables for fast pair tests: the edge strip owning each
// host vertex, and the tree vertices v with x in B(v) or eta(v).
struct LocTables {
  std::vector<int> edge_id;           // index into edge_list, or -1
  std::vector<VertexSet> at_vertices;
};

LocTables build_loc_tables(const StripStructure& s) {
  LocTables lt;
  lt.edge_id.assign(s.host.n, -1);
  lt.at_vertices.assign(s.host.n, {});
  const auto& el = s.tree.tree.edge_list;
  for (size_t i = 0; i < el.size(); ++i) {
    for (int x : s.eta_e(el[i])) lt.edge_id[x] = (int)i;
    for (int v : {el[i].first, el[i].second})
      for (int x : s.eta_ev(el[i], v)) lt.at_vertices[x] = vs_union(lt.at_vertices[x], {v});
  }
  for (int v = 0; v < s.tree.tree.n; ++v)
    for (int x : s.eta_v(v)) lt.at_vertices[x] = vs_union(lt.at_vertices[x], {v});
  return lt;
}

bool pair_local(const LocTables& lt, int x, int y) {
  if (lt.edge_id[x] >= 0 && lt.edge_id[x] == lt.edge_id[y]) return true;
  return !vs_intersect(lt.at_vertices[x], lt.at_vertices[y]).empty();
}

struct Violating {
  Path path;       // in M, ends p1 = front, p2 = back
  int x1, x2;      // non-local attachment pair, x1 at p1 and x2 at p2
};

std::optional<Violating> find_min_violating(const StripStructure& s,
                                            const VertexSet& m) {
  const Graph& g = s.host;
  VertexSet eta = s.eta_t();
  LocTables lt = build_loc_tables(s);
  std::vector<VertexSet> attach(g.n);
  VertexSet cands;
  for (int x : m) {
    attach[x] = vs_intersect(vs_sorted(g.adj[x]), eta);
    if (!attach[x].empty()) cands.push_back(x);
  }
  // Single vertices first.
  for (int x : cands) {
    const VertexSet& at = attach[x];
    for (size_t i = 0; i < at.size(); ++i)
      for (size_t j = i + 1; j < at.size(); ++j)
        if (!pair_local(lt, at[i], at[j]))
          return Violating{{x}, at[i], at[j]};
  }
  // Shortest path between two attached vertices carrying a non-local pair.
  std::vector<uint8_t> in_m(g.n, 0);
  for (int x : m) in_m[x] = 1;
  auto bfs = [&](int src) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.adj[u])
        if (in_m[w] && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    return dist;
  };
  int best_len = -1, bp1 = -1, bp2 = -1, bx1 = -1, bx2 = -1;
  for (int p1 : cands) {
    std::vector<int> dist = bfs(p1);
    for (int p2 : cands) {
      if (p2 <= p1 || dist[p2] < 0) continue;
      int len = dist[p2] + 1;
      if (best_len >= 0 && len > best_len) continue;
      if (best_len == len && std::make_pair(p1, p2) >= std::make_pair(bp1, bp2))
        continue;
      int fx1 = -1, fx2 = -1;
      for (int x1 : attach[p1]) {
        for (int x2 : attach[p2])
          if (!pair_local(lt, x1, x2)) {
            fx1 = x1;
            fx2 = x2;
            break;
          }
        if (fx1 >= 0) break;
      }
      if (fx1 < 0) continue;
      best_len = len;
      bp1 = p1;
      bp2 = p2;
      bx1 = fx1;
      bx2 = fx2;
    }
  }
  if (best_len < 0) return std::nullopt;
  // Lexicographically least shortest path from p1 to p2 inside M.
  std::vector<int> dist2 = bfs(bp2);
  Path path{bp1};
  int cur = bp1;
  while (cur != bp2) {
    for (int w : g.adj[cur])
      if (in_m[w] && dist2[w] == dist2[cur] - 1) {
        path.push_back(w);
        cur = w;
        break;
      }
  }
  return Violating{path, bx1, bx2};
}

[[noreturn]] void throw_obstruction(const Graph& g, const VertexSet& cand,
                                    const std::string& stage) {
  DetectOptions opt;
  opt.force = true;
  Graph small = induced_subgraph(g, cand);
  std::string why;
  if (auto th = find_theta(small, opt)) {
    ThetaEmbedding t2 = *th;
    t2.a = cand[t2.a];
    t2.b = cand[t2.b];
    for (auto& pp : t2.paths)
      for (int& x : pp) x = cand[x];
    if (t2.validate(g, &why)) {
      ObstructionFound ex("saturate_strip: host contains a theta (" + stage + ")");
      ex.theta = t2;
      throw ex;
    }
  }
  if (auto pr = find_prism(small, opt)) {
    PrismEmbedding p2 = *pr;
    for (int& x : p2.a) x = cand[x];
    for (int& x : p2.b) x = cand[x];
    for (auto& pp : p2.paths)
      for (int& x : pp) x = cand[x];
    if (p2.validate(g, &why)) {
      ObstructionFound ex("saturate_strip: host contains a prism (" + stage + ")");
      ex.prism = p2;
      throw ex;
    }
  }
  if (auto th = find_theta(g, opt)) {
    ObstructionFound ex("saturate_strip: host contains a theta (" + stage + ")");
    ex.theta = *th;
    throw ex;
  }
  if (auto pr = find_prism(g, opt)) {
    ObstructionFound ex("saturate_strip: host contains a prism (" + stage + ")");
    ex.prism = *pr;
    throw ex;
  }
  throw std::logic_error("saturate_strip: " + stage +
                         ", yet the host has no theta and no prism");
}

// Claim analysis for a minimal violating path: locate the edge f and side
// assignment, check the completion conditions, and grow the structure.  On a
// pattern impossible in a theta- and prism-free host, extract an obstruction.
void absorb_path(StripStructure& s, const Violating& viol) {
  const Graph& g = s.host;
  const Graph& t = s.tree.tree;
  const Path& p = viol.path;
  VertexSet pset = vs_sorted(p);
  VertexSet grown_cand = vs_union(s.eta_plus(), pset);

  Edge best_f{-1, -1};
  int best_j1 = 0, best_v1 = -1;
  for (const Edge& f : t.edge_list) {
    VertexSet ef = s.eta_e(f);
    for (int j1 : {1, 2}) {
      int xj1 = j1 == 1 ? viol.x1 : viol.x2;
      int xj2 = j1 == 1 ? viol.x2 : viol.x1;
      for (int vj1 : {f.first, f.second}) {
        int vj2 = other_end(f, vj1);
        VertexSet b1 = s.big_b(vj1);
        if (!vs_contains(b1, xj1) || vs_contains(ef, xj1)) continue;
        if (vs_contains(b1, xj2)) continue;
        if (!vs_contains(s.big_b(vj2), xj2) && !vs_contains(ef, xj2)) continue;
        best_f = f;
        best_j1 = j1;
        best_v1 = vj1;
        goto found;
      }
    }
  }
found:
  if (best_f.first < 0) {
    // No edge satisfies the claim: the host must contain an obstruction.
    // Rebuild the proof's pyramid and classify the path against it.
    auto owner = [&](int x) -> Edge {
      for (const Edge& e : t.edge_list)
        if (vs_contains(s.eta_e(e), x)) return e;
      return {-1, -1};
    };
    Edge e1 = owner(viol.x1), e2 = owner(viol.x2);
    if (e1.first < 0 || e2.first < 0 || e1 == e2)
      throw_obstruction(g, grown_cand, "no claim edge and no seagull frame");
    std::vector<int> lam0;
    for (int s1 : {e1.first, e1.second}) {
      for (int s2 : {e2.first, e2.second}) {
        std::vector<int> cand = tree_path(t, s1, s2);
        bool usable = true;
        for (size_t i = 1; i < cand.size(); ++i) {
          Edge used = mk_edge(cand[i - 1], cand[i]);
          if (used == e1 || used == e2) usable = false;
        }
        if (usable) {
          lam0 = cand;
          break;
        }
      }
      if (!lam0.empty()) break;
    }
    int v = -1;
    for (int w : lam0) {
      VertexSet bw = s.big_b(w);
      if (!vs_contains(bw, viol.x1) && !vs_contains(bw, viol.x2)) {
        v = w;
        break;
      }
    }
    if (v < 0) throw_obstruction(g, grown_cand, "no centre for the seagull frame");
    std::vector<int> lam;
    lam.push_back(other_end(e1, lam0.front()));
    lam.insert(lam.end(), lam0.begin(), lam0.end());
    lam.push_back(other_end(e2, lam0.back()));
    int pos = (int)(std::find(lam.begin(), lam.end(), v) - lam.begin());
    Edge e1p = mk_edge(v, lam[pos - 1]), e2p = mk_edge(v, lam[pos + 1]);
    int u3 = -1;
    for (int w : t.adj[v])
      if (std::find(lam.begin(), lam.end(), w) == lam.end()) {
        u3 = w;
        break;
      }
    if (u3 < 0) throw_obstruction(g, grown_cand, "no third edge at the centre");
    SeagullClaw claw{v, {e1p, e2p, mk_edge(v, u3)}};
    long budget = 200000;
    std::optional<PyramidEmbedding> sigma;
    for (const PyramidEmbedding& pe : eta_pyramids_impl(s, claw, budget)) {
      Path i0 = path_interior(pe.paths[0]), i1 = path_interior(pe.paths[1]);
      if (vs_contains(vs_sorted(i0), viol.x1) && vs_contains(vs_sorted(i1), viol.x2)) {
        sigma = pe;
        break;
      }
    }
    if (!sigma) throw_obstruction(g, grown_cand, "no pyramid through the attachment pair");
    PyramidClassification cls =
        classify_wrt_pyramid(g, s.eta_plus(), s.apex, *sigma, p);
    if (cls.kind == PyramidClassification::Kind::obstruction) {
      ObstructionFound ex("saturate_strip: host contains a " +
                          std::string(cls.theta ? "theta" : "prism") +
                          " (violating path survives every claim edge)");
      ex.theta = cls.theta;
      ex.prism = cls.prism;
      throw ex;
    }
    throw_obstruction(g, grown_cand, "classification against the frame pyramid");
  }
  {
    const Edge f = best_f;
    int vj1 = best_v1, vj2 = other_end(f, vj1);
    int pj1 = best_j1 == 1 ? p.front() : p.back();
    int pj2 = best_j1 == 1 ? p.back() : p.front();
    VertexSet ef = s.eta_e(f);
    VertexSet side1 = vs_minus(s.big_b(vj1), ef);
    if (relation(g, {pj1}, side1) != Relation::complete)
      throw_obstruction(g, grown_cand,
                        "path end not complete to B(" + std::to_string(vj1) +
                            ") minus eta(" + estr(f) + ")");
    VertexSet side2 = vs_minus(s.big_b(vj2), ef);
    Relation r2 = relation(g, {pj2}, side2);
    if (r2 == Relation::mixed)
      throw_obstruction(g, grown_cand,
                        "path end neither complete nor anticomplete to B(" +
                            std::to_string(vj2) + ") minus eta(" + estr(f) + ")");
    s.emap[f] = vs_union(ef, pset);
    s.evmap[{f, vj1}] = vs_union(s.eta_ev(f, vj1), {pj1});
    if (r2 == Relation::complete && !side2.empty())
      s.evmap[{f, vj2}] = vs_union(s.eta_ev(f, vj2), {pj2});
    StripReport rep = validate_strip(s);
    if (!rep.ok || !rep.tame || !rep.substantial || !rep.rich)
      throw_obstruction(g, grown_cand,
                        "augmented structure fails " +
                            (rep.ok ? std::string("a flag") : rep.axiom));
  }
}

}  // namespace

StripStructure saturate_strip(const StripStructure& s0) {
  StripReport rep = validate_strip(s0);
  if (!rep.ok)
    throw std::invalid_argument("saturate_strip: invalid strip (" + rep.axiom +
                                ": " + rep.witness + ")");
  if (!rep.tame) throw std::invalid_argument("saturate_strip: strip is not tame");
  if (!rep.substantial)
    throw std::invalid_argument("saturate_strip: strip is not substantial");
  if (!rep.rich) throw std::invalid_argument("saturate_strip: strip is not rich");

  StripStructure s = s0;
  const Graph& g = s.host;
  for (int round = 0;; ++round) {
    if (round > g.n + 1)
      throw std::logic_error("saturate_strip: did not converge");
    JewelIndex jw = jewels_impl(s);
    VertexSet m = vs_minus(vs_minus(vs_full(g.n), s.eta_plus()), jw.all());
    auto viol = find_min_violating(s, m);
    if (!viol) break;
    absorb_path(s, *viol);
  }

  // Absorb the attached residue into vertex and edge zones.
  JewelIndex jw = jewels_impl(s);
  VertexSet m = vs_minus(vs_minus(vs_full(g.n), s.eta_plus()), jw.all());
  VertexSet eta = s.eta_t();
  StripStructure z = s;
  for (const VertexSet& d : components(g, m)) {
    VertexSet nd = vs_intersect(set_neighborhood(g, d), eta);
    if (nd.empty()) continue;  // part of X
    int at_v = -1;
    for (int v = 0; v < s.tree.tree.n && at_v < 0; ++v)
      if (vs_subset(nd, s.big_b(v))) at_v = v;
    if (at_v >= 0) {
      z.vmap[at_v] = vs_union(z.eta_v(at_v), d);
      continue;
    }
    bool placed = false;
    for (const Edge& e : s.tree.tree.edge_list) {
      if (!vs_subset(nd, s.eta_e(e))) continue;
      VertexSet iu = s.eta_ev(e, e.first), iv = s.eta_ev(e, e.second);
      bool circ_hit = !vs_intersect(nd, s.eta_circ(e)).empty();
      bool both = !vs_intersect(nd, vs_minus(iu, iv)).empty() &&
                  !vs_intersect(nd, vs_minus(iv, iu)).empty();
      if (!circ_hit && !both) continue;
      z.emap[e] = vs_union(z.eta_e(e), d);
      placed = true;
      break;
    }
    if (!placed)
      throw std::logic_error(
          "saturate_strip: attached component fits no vertex or edge zone");
  }

  StripReport final_rep = validate_strip(z);
  if (!final_rep.ok)
    throw std::logic_error("saturate_strip: result fails " + final_rep.axiom +
                           " (" + final_rep.witness + ")");
  if (!final_rep.substantial || !final_rep.rich)
    throw std::logic_error("saturate_strip: result lost a required flag");
  JewelIndex jz = jewels_impl(z);
  VertexSet outside = vs_minus(vs_minus(vs_full(g.n), z.eta_plus()), jz.all());
  if (relation(g, outside, z.eta_plus()) != Relation::anticomplete &&
      !outside.empty())
    throw std::logic_error("saturate_strip: residue not anticomplete to the result");
  return z;
}

// ---------------------------------------------------------------------------
// Canonical strip of a long pyramid
// ---------------------------------------------------------------------------

StripStructure canonical_pyramid_strip(const Graph& g,
                                       const PyramidEmbedding& sigma) {
  std::string why;
  if (!sigma.validate(g, &why))
    throw std::invalid_argument("canonical_pyramid_strip: invalid pyramid: " + why);
  if (!sigma.is_long())
    throw std::invalid_argument("canonical_pyramid_strip: pyramid must be long");
  StripStructure s;
  s.host = g;
  s.apex = sigma.apex;
  s.tree.tree = Graph(4, {{0, 1}, {0, 2}, {0, 3}});
  for (int v = 0; v < 4; ++v) s.vmap[v] = {};
  for (int i = 0; i < 3; ++i) {
    Edge e{0, i + 1};
    const Path& pi = sigma.paths[i];
    s.emap[e] = vs_sorted(Path(pi.begin() + 1, pi.end()));
    s.evmap[{e, 0}] = {sigma.base[i]};
    s.evmap[{e, i + 1}] = {pi[1]};
  }
  return s;
}

}  // namespace tpf
