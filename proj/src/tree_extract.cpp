#include "tpf/tree_extract.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "json.hpp"
#include "tpf/generators.hpp"
#include "tpf/io.hpp"
#include "tpf/obstructions.hpp"
#include "tpf/treewidth.hpp"

namespace tpf {

namespace {

std::string vstr(const VertexSet& vs) {
  std::string r = "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) r += " ";
    r += std::to_string(vs[i]);
  }
  return r + "}";
}

// Largest stable set among k <= 64 items with bitmask adjacency.  Items are
// branched in ascending order, include before exclude, and only a strictly
// larger set replaces the incumbent, so the result is deterministic and
// prefers small indices.
struct MisSearch {
  const std::vector<uint64_t>& adj;
  uint64_t best = 0;
  int best_cnt = 0;

  void run(uint64_t chosen, int cnt, uint64_t cand) {
    if (cnt + __builtin_popcountll(cand) <= best_cnt) return;
    if (!cand) {
      best = chosen;
      best_cnt = cnt;
      return;
    }
    int v = __builtin_ctzll(cand);
    uint64_t bit = 1ull << v;
    run(chosen | bit, cnt + 1, cand & ~(adj[v] | bit));
    run(chosen, cnt, cand & ~bit);
  }
};

std::vector<int> max_stable(const std::vector<uint64_t>& adj, int k) {
  MisSearch mis{adj};
  mis.run(0, 0, k == 64 ? ~0ull : ((1ull << k) - 1));
  std::vector<int> out;
  for (int i = 0; i < k; ++i)
    if (mis.best >> i & 1) out.push_back(i);
  return out;
}

// Lexicographically least transitive sequence of length p, with a node
// budget so adversarial digraphs die with CapExceeded instead of hanging.
struct TtSearch {
  const Tournament& d;
  int p;
  long long budget;
  std::vector<int> seq;

  bool dfs(const std::vector<int>& cand) {
    if ((int)seq.size() == p) return true;
    for (int v : cand) {
      if (--budget <= 0)
        throw CapExceeded("transitive subtournament: search budget exhausted");
      std::vector<int> nxt;
      for (int w : cand)
        if (w != v && d.has_arc(v, w)) nxt.push_back(w);
      if ((int)nxt.size() >= p - (int)seq.size() - 1) {
        seq.push_back(v);
        if (dfs(nxt)) return true;
        seq.pop_back();
      }
    }
    return false;
  }
};

std::optional<std::vector<int>> tt_core(const Tournament& d, int p,
                                        long long budget) {
  TtSearch s{d, p, budget, {}};
  std::vector<int> all(d.n);
  for (int i = 0; i < d.n; ++i) all[i] = i;
  if (s.dfs(all)) return s.seq;
  return std::nullopt;
}

std::vector<int> bfs_dists(const Graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (int u : g.adj[w])
      if (dist[u] < 0) {
        dist[u] = dist[w] + 1;
        q.push_back(u);
      }
  }
  return dist;
}

// All branch vertices (degree >= 3) of the tree lie on one path.
bool branch_on_common_path(const Graph& t) {
  VertexSet branch;
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) >= 3) branch.push_back(v);
  if (branch.size() < 2) return true;
  int b1 = -1, b2 = -1, far = -1;
  for (int p : branch) {
    std::vector<int> dist = bfs_dists(t, p);
    for (int r : branch)
      if (dist[r] > far) {
        far = dist[r];
        b1 = p;
        b2 = r;
      }
  }
  VertexSet on_path = vs_sorted(*shortest_path(t, b1, b2, vs_full(t.n)));
  for (int v : branch)
    if (!vs_contains(on_path, v)) return false;
  return true;
}

bool is_caterpillar(const Graph& t) {
  if (t.m() != t.n - 1 || (int)components(t).size() != 1) return false;
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) > 3) return false;
  return branch_on_common_path(t);
}

// Krausz reconstruction: the tree T with L(T) = H, or nullopt when H is not
// the line graph of a tree.  For K_3 the root K_{1,3} is returned.
std::optional<Graph> line_graph_root_tree(const Graph& h) {
  int nh = h.n;
  std::vector<VertexSet> cands;
  auto add_cand = [&cands](VertexSet q) {
    for (const VertexSet& c : cands)
      if (c == q) return;
    cands.push_back(std::move(q));
  };
  for (int v = 0; v < nh; ++v) {
    VertexSet nb(h.adj[v].begin(), h.adj[v].end());
    std::vector<VertexSet> sides = components(h, nb);
    if (sides.size() > 2) return std::nullopt;
    for (const VertexSet& side : sides) {
      if (!is_clique(h, side)) return std::nullopt;
      add_cand(vs_union(side, {v}));
    }
  }
  std::vector<std::vector<int>> at(nh);
  for (int ci = 0; ci < (int)cands.size(); ++ci)
    for (int v : cands[ci]) at[v].push_back(ci);
  for (int v = 0; v < nh; ++v)
    if (at[v].size() > 2) return std::nullopt;
  for (const Edge& e : h.edge_list) {
    int cnt = 0;
    for (int ci : at[e.first])
      if (vs_contains(cands[ci], e.second)) ++cnt;
    if (cnt != 1) return std::nullopt;
  }
  int tn = (int)cands.size();
  std::vector<Edge> tedges(nh);
  for (int v = 0; v < nh; ++v) {
    std::vector<int> ends = at[v];
    while (ends.size() < 2) ends.push_back(tn++);
    tedges[v] = {std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
  }
  Graph t(tn, tedges);
  if (t.m() != nh) return std::nullopt;
  if (t.m() != t.n - 1 || (int)components(t).size() != 1) return std::nullopt;
  for (int u = 0; u < nh; ++u)
    for (int v = u + 1; v < nh; ++v) {
      bool share = tedges[u].first == tedges[v].first ||
                   tedges[u].first == tedges[v].second ||
                   tedges[u].second == tedges[v].first ||
                   tedges[u].second == tedges[v].second;
      if (share != h.adjacent(u, v)) return std::nullopt;
    }
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tournament
// ---------------------------------------------------------------------------

void Tournament::add_arc(int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("Tournament::add_arc: vertex out of range");
  if (u == v) throw std::invalid_argument("Tournament::add_arc: self-arc");
  arc[u][v] = 1;
}

bool Tournament::is_tournament() const {
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((arc[u][v] != 0) == (arc[v][u] != 0)) return false;
  return true;
}

Graph Tournament::underlying() const {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (arc[u][v] || arc[v][u]) es.push_back({u, v});
  return Graph(n, es);
}

std::optional<std::vector<int>> transitive_subtournament(const Tournament& d,
                                                         int p) {
  if (p < 1)
    throw std::invalid_argument("transitive_subtournament: p must be >= 1");
  if (p > 8) throw CapExceeded("transitive_subtournament: cap p <= 8");
  if (p > d.n) return std::nullopt;
  return tt_core(d, p, 20'000'000);
}

// ---------------------------------------------------------------------------
// Connectifier classifier
// ---------------------------------------------------------------------------

ConnectifyResult connectify(const Graph& g, const VertexSet& s, int h) {
  if (g.n > 20) throw CapExceeded("connectify: cap n <= 20");
  if (h < 1 || h > 4) throw CapExceeded("connectify: cap 1 <= h <= 4");
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.n)
      throw std::invalid_argument("connectify: S vertex out of range");
    if (i && s[i] <= s[i - 1])
      throw std::invalid_argument("connectify: S must be sorted and unique");
  }
  if (g.n == 0 || (int)components(g).size() != 1)
    throw std::invalid_argument("connectify: G must be connected");

  uint32_t sbits = 0;
  for (int v : s) sbits |= 1u << v;
  std::vector<uint32_t> amask(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) amask[v] |= 1u << u;

  auto verts = [&](uint32_t mask) {
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) out.push_back(v);
    return out;
  };
  auto connected_mask = [&](uint32_t mask) {
    uint32_t seen = mask & (~mask + 1);
    for (;;) {
      uint32_t grow = seen, rest = seen;
      while (rest) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        grow |= amask[v] & mask;
      }
      if (grow == seen) break;
      seen = grow;
    }
    return seen == mask;
  };

  uint32_t full = g.n == 32 ? ~0u : ((1u << g.n) - 1);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    int scount = __builtin_popcount(mask & sbits);
    if (scount < h) continue;
    if (!connected_mask(mask)) continue;
    int count = __builtin_popcount(mask);
    int edges2 = 0, maxdeg = 0;
    for (uint32_t rest = mask; rest;) {
      int v = __builtin_ctz(rest);
      rest &= rest - 1;
      int dg = __builtin_popcount(amask[v] & mask);
      edges2 += dg;
      maxdeg = std::max(maxdeg, dg);
    }
    int m = edges2 / 2;
    bool tree = m == count - 1;
    if (tree && maxdeg <= 2)  // induced path
      return {"path", verts(mask), verts(mask & sbits), -1};
    if (scount != h) continue;
    VertexSet hv = verts(mask);
    VertexSet hs = verts(mask & sbits);
    if (tree) {
      VertexSet leaves, branch;
      for (int v : hv) {
        int dg = __builtin_popcount(amask[v] & mask);
        if (dg <= 1) leaves.push_back(v);
        if (dg >= 3) branch.push_back(v);
      }
      if (branch.size() == 1 && vs_subset(leaves, hs) &&
          vs_subset(hs, vs_union(leaves, branch)))
        return {"subdivided_star", hv, hs, branch[0]};
      if (maxdeg <= 3 && hs == leaves) {
        Graph hg = induced_subgraph(g, hv);
        if (branch_on_common_path(hg)) return {"caterpillar", hv, hs, -1};
      }
    } else {
      Graph hg = induced_subgraph(g, hv);
      VertexSet z;
      for (int i : simplicial_set(hg)) z.push_back(hv[i]);
      if (hs == z) {
        std::optional<Graph> t = line_graph_root_tree(hg);
        if (t && is_caterpillar(*t))
          return {"line_graph_of_caterpillar", hv, hs, -1};
      }
    }
  }
  return {"insufficient", {}, {}, -1};
}

// ---------------------------------------------------------------------------
// Banana selection
// ---------------------------------------------------------------------------

BananaResult banana(const Graph& g, int a, int b, const PathSystem& ps,
                    int nu) {
  if (nu < 1) throw std::invalid_argument("banana: nu must be >= 1");
  if (ps.a != a || ps.b != b)
    throw std::invalid_argument("banana: path system ends differ from a, b");
  std::string why;
  if (!ps.validate(g, &why))
    throw std::invalid_argument("banana: invalid path system: " + why);
  if (g.adjacent(a, b))
    throw std::invalid_argument("banana: a and b must be non-adjacent");
  int k = (int)ps.paths.size();
  if (k > 64) throw CapExceeded("banana: more than 64 paths");
  if (nu + 1 > 24) throw CapExceeded("banana: cap nu <= 23");

  std::vector<int> ap(k);
  for (int i = 0; i < k; ++i) ap[i] = ps.paths[i][1];

  // stage 1: maximum stable subset of {a_P} u {b}; a_P adjacent to b can
  // never join it, the rest fight out pairwise adjacency
  std::vector<int> cand;
  for (int i = 0; i < k; ++i)
    if (!g.adjacent(ap[i], b)) cand.push_back(i);
  std::vector<uint64_t> conflict(cand.size(), 0);
  for (size_t i = 0; i < cand.size(); ++i)
    for (size_t j = i + 1; j < cand.size(); ++j)
      if (g.adjacent(ap[cand[i]], ap[cand[j]])) {
        conflict[i] |= 1ull << j;
        conflict[j] |= 1ull << i;
      }
  std::vector<int> sel1 = max_stable(conflict, (int)cand.size());
  std::vector<int> nset;  // path indices, ascending
  for (int pos : sel1) nset.push_back(cand[pos]);

  BananaResult res;
  if ((int)nset.size() < nu + 1) {
    res.stage = 1;
    res.why = "largest stable first-neighbour set has " +
              std::to_string(nset.size()) + " paths with b, need " +
              std::to_string(nu + 1);
    VertexSet w{b};
    for (int i : nset) w.push_back(ap[i]);
    res.witness = vs_sorted(w);
    return res;
  }

  // stage 2: the digraph D; an arc i -> j records a neighbour of a_i in the
  // interior of P_j beyond a_j (both directions may hold)
  int dn = (int)nset.size();
  Tournament dd(dn);
  for (int i = 0; i < dn; ++i)
    for (int j = 0; j < dn; ++j) {
      if (i == j) continue;
      const Path& pj = ps.paths[nset[j]];
      for (size_t idx = 2; idx + 1 < pj.size(); ++idx)
        if (g.adjacent(ap[nset[i]], pj[idx])) {
          dd.add_arc(i, j);
          break;
        }
    }

  // stage 3: transitive subtournament of order nu+1
  std::optional<std::vector<int>> seq = tt_core(dd, nu + 1, 20'000'000);
  if (!seq) {
    res.stage = 3;
    Graph under = dd.underlying();
    std::vector<uint64_t> uadj(dn, 0);
    for (const Edge& e : under.edge_list) {
      uadj[e.first] |= 1ull << e.second;
      uadj[e.second] |= 1ull << e.first;
    }
    std::vector<int> st = max_stable(uadj, dn);
    VertexSet w;
    for (int i : st) w.push_back(ap[nset[i]]);
    res.witness = vs_sorted(w);
    res.why = "no transitive subtournament of order " + std::to_string(nu + 1) +
              "; the underlying graph of D has a stable set of size " +
              std::to_string(st.size()) + " (a seed configuration lurks)";
    return res;
  }

  // stage 4: drop the head, keep the tail nu paths, re-verify both bullets
  for (int i = 1; i <= nu; ++i) res.selected.push_back(nset[(*seq)[i]]);
  VertexSet stable{b};
  for (int i : res.selected) stable.push_back(ap[i]);
  res.stable = vs_sorted(stable);
  for (size_t i = 0; i < res.stable.size(); ++i)
    for (size_t j = i + 1; j < res.stable.size(); ++j)
      if (g.adjacent(res.stable[i], res.stable[j]))
        throw std::logic_error("banana: selected first-neighbour set is not stable");
  for (int i = 0; i < nu; ++i)
    for (int j = i + 1; j < nu; ++j) {
      const Path& pj = ps.paths[res.selected[j]];
      bool hit = false;
      for (size_t idx = 2; idx + 1 < pj.size() && !hit; ++idx)
        hit = g.adjacent(ap[res.selected[i]], pj[idx]);
      if (!hit)
        throw std::logic_error("banana: forward interior adjacency missing");
    }
  res.ok = true;
  return res;
}

// ---------------------------------------------------------------------------
// TreeWitness
// ---------------------------------------------------------------------------

VertexSet TreeWitness::vertices() const {
  VertexSet out;
  for (const auto& [v, dep] : depth) out.push_back(v);
  return out;
}

bool TreeWitness::validate(const Graph& g, int d, int r, int b,
                           const VertexSet& allowed, std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (d < 1 || r < 1) return fail("d and r must be positive");
  if (root < 0 || root >= g.n) return fail("root out of range");
  auto rit = depth.find(root);
  if (rit == depth.end() || rit->second != 0)
    return fail("the root must have depth 0");
  if (parent.count(root)) return fail("the root has a parent");
  if (depth.size() != parent.size() + 1)
    return fail("depth and parent keys disagree");
  std::map<int, int> kids;
  for (const auto& [v, p] : parent) {
    if (v < 0 || v >= g.n || p < 0 || p >= g.n)
      return fail("vertex out of range");
    if (!depth.count(v) || !depth.count(p))
      return fail("depth and parent keys disagree");
    if (!g.adjacent(v, p))
      return fail("tree edge " + std::to_string(v) + "-" + std::to_string(p) +
                  " is missing in G");
    if (depth.at(v) != depth.at(p) + 1)
      return fail("depth of " + std::to_string(v) +
                  " is not one more than its parent's");
    kids[p]++;
  }
  for (const auto& [v, dep] : depth) {
    if (dep < 0 || dep > r) return fail("depth out of range");
    if (dep == 0 && v != root) return fail("a non-root vertex has depth 0");
    if (v == b) return fail("b occurs in the tree");
    if (!vs_contains(allowed, v))
      return fail("vertex " + std::to_string(v) + " lies outside the allowed set");
    int c = kids.count(v) ? kids.at(v) : 0;
    int want = dep == r ? 0 : d;
    if (c != want)
      return fail("vertex " + std::to_string(v) + " at depth " +
                  std::to_string(dep) + " has " + std::to_string(c) +
                  " children, want " + std::to_string(want));
  }
  return true;
}

std::string tree_witness_to_json(const TreeWitness& w) {
  nlohmann::ordered_json j;
  j["root"] = w.root;
  j["parent"] = nlohmann::ordered_json::object();
  for (const auto& [v, p] : w.parent) j["parent"][std::to_string(v)] = p;
  j["depth"] = nlohmann::ordered_json::object();
  for (const auto& [v, dep] : w.depth) j["depth"][std::to_string(v)] = dep;
  return j.dump();
}

TreeWitness tree_witness_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tree witness: ") + e.what(), 0);
  }
  TreeWitness w;
  try {
    if (!j.is_object() || !j.contains("root") || !j.contains("parent") ||
        !j.contains("depth") || !j.at("parent").is_object() ||
        !j.at("depth").is_object())
      throw ParseError("tree witness: an object with root, parent and depth "
                       "is required", 0);
    w.root = j.at("root").get<int>();
    for (const auto& [key, val] : j.at("parent").items())
      w.parent[std::stoi(key)] = val.get<int>();
    for (const auto& [key, val] : j.at("depth").items())
      w.depth[std::stoi(key)] = val.get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree witness: ") + e.what(), 0);
  } catch (const std::invalid_argument&) {
    throw ParseError("tree witness: keys must be integers", 0);
  } catch (const std::out_of_range&) {
    throw ParseError("tree witness: keys must be integers", 0);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Recursive extraction
// ---------------------------------------------------------------------------

namespace {

struct RecExtract {
  const Graph& g;
  int b;
  int d;

  ExtractResult run(int a_cur, const std::vector<Path>& paths, int r_cur,
                    int depth0) {
    ExtractResult res;
    res.tree.root = a_cur;
    res.tree.depth[a_cur] = 0;
    if (r_cur == 1) {
      if ((int)paths.size() < d) {
        res.fail_depth = depth0;
        res.why = "depth " + std::to_string(depth0) + ": the star needs " +
                  std::to_string(d) + " paths, only " +
                  std::to_string(paths.size()) + " available";
        return res;
      }
      for (int i = 0; i < d; ++i) {
        int c = paths[i][1];
        res.tree.parent[c] = a_cur;
        res.tree.depth[c] = 1;
      }
      res.ok = true;
      return res;
    }
    if ((int)paths.size() < 2 * d + 1) {
      res.fail_depth = depth0;
      res.why = "depth " + std::to_string(depth0) + ": recursion starves, " +
                std::to_string(paths.size()) + " paths leave no room for " +
                std::to_string(d) + " blocks (need " + std::to_string(2 * d + 1) +
                ")";
      return res;
    }
    int mp = ((int)paths.size() - 1) / d - 1;
    int nu = (mp + 1) * d;
    BananaResult br = banana(g, a_cur, b, PathSystem{a_cur, b, paths}, nu);
    if (!br.ok) {
      res.fail_depth = depth0;
      res.why = "depth " + std::to_string(depth0) + ": banana died at stage " +
                std::to_string(br.stage) + " (" + br.why + ")";
      return res;
    }
    auto attach = [&res](int v, int dep, int par) {
      if (res.tree.depth.count(v))
        throw std::logic_error("extract_tree: child subtrees overlap");
      res.tree.depth[v] = dep;
      res.tree.parent[v] = par;
    };
    for (int i = 0; i < d; ++i) {
      int pos = i * (mp + 1);
      int ai = paths[br.selected[pos]][1];
      std::vector<Path> sub;
      for (int t = 1; t <= mp; ++t) {
        const Path& p = paths[br.selected[pos + t]];
        int wpos = -1;
        for (int idx = 2; idx + 1 < (int)p.size(); ++idx)
          if (g.adjacent(ai, p[idx])) wpos = idx;
        if (wpos < 0)
          throw std::logic_error(
              "extract_tree: banana's forward adjacency is missing");
        Path q{ai};
        q.insert(q.end(), p.begin() + wpos, p.end());
        sub.push_back(std::move(q));
      }
      ExtractResult child = run(ai, sub, r_cur - 1, depth0 + 1);
      attach(ai, 1, a_cur);
      for (const auto& [v, dep] : child.tree.depth)
        if (v != ai) attach(v, dep + 1, child.tree.parent.at(v));
      if (!child.ok) {
        res.fail_depth = child.fail_depth;
        res.why = child.why;
        return res;
      }
    }
    res.ok = true;
    return res;
  }
};

}  // namespace

ExtractResult extract_tree(const Graph& g, int a, int b, const PathSystem& ps,
                           int d, int r) {
  if (d < 1 || r < 1)
    throw std::invalid_argument("extract_tree: d and r must be positive");
  if (ps.a != a || ps.b != b)
    throw std::invalid_argument(
        "extract_tree: path system ends differ from a, b");
  std::string why;
  if (!ps.validate(g, &why))
    throw std::invalid_argument("extract_tree: invalid path system: " + why);
  if (g.adjacent(a, b))
    throw std::invalid_argument("extract_tree: a and b must be non-adjacent");
  RecExtract rec{g, b, d};
  ExtractResult res = rec.run(a, ps.paths, r, 0);
  if (res.ok) {
    VertexSet allowed{a};
    for (const Path& p : ps.paths) allowed = vs_union(allowed, vs_sorted(p));
    std::string vwhy;
    if (!res.tree.validate(g, d, r, b, allowed, &vwhy))
      throw std::logic_error("extract_tree: built an invalid witness: " + vwhy);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Trichotomy
// ---------------------------------------------------------------------------

TrichotomyResult kp_trichotomy(const Graph& g, int d, int r, int s, int t) {
  if (d < 1 || r < 1 || s < 1 || t < 1)
    throw std::invalid_argument("kp_trichotomy: parameters must be positive");
  if (g.n > 20) throw CapExceeded("kp_trichotomy: cap n <= 20");
  std::vector<Edge> bes;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) bes.push_back({i, s + j});
  Graph kss(2 * s, bes);
  if (std::optional<std::vector<int>> m = contains_induced(g, kss))
    return {"K_ss", vs_sorted(*m)};
  if (std::optional<VertexSet> q = find_clique(g, t)) return {"K_t", *q};
  Graph tdr = make_T_d_r(d, r).first;
  if (std::optional<std::vector<int>> m = contains_induced(g, tdr))
    return {"T_d_r", vs_sorted(*m)};
  return {"none", {}};
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

PipelineReport theorem_1_7_pipeline(const Graph& g, const Graph& f, int t) {
  if (f.n < 1) throw std::invalid_argument("theorem_1_7_pipeline: empty F");
  if (f.m() != f.n - (int)components(f).size())
    throw std::invalid_argument("theorem_1_7_pipeline: F must be a forest");
  PipelineReport rep;
  auto stage = [&rep](const std::string& name, const std::string& outcome) {
    rep.stages.push_back({name, outcome});
  };

  ClassReport cls = class_membership(g, t, &f);
  rep.member = cls.in_ct_f;
  if (!rep.member) {
    std::string what = cls.theta      ? "a theta"
                       : cls.prism    ? "a prism"
                       : cls.clique   ? "a K_" + std::to_string(t)
                                      : "an induced copy of F";
    stage("membership", "fails: G contains " + what);
    rep.margin = "membership";
    return rep;
  }
  stage("membership", "G lies in the class");

  int d = 1, r = 0;
  for (int v = 0; v < f.n; ++v) d = std::max(d, f.degree(v));
  for (const VertexSet& comp : components(f)) {
    int best = INT_MAX;
    for (int v : comp) {
      std::vector<int> dist = bfs_dists(f, v);
      int ecc = 0;
      for (int u : comp) ecc = std::max(ecc, dist[u]);
      best = std::min(best, ecc);
    }
    r = std::max(r, best);
  }
  r = std::max(r, 1);
  stage("parameters", "d=" + std::to_string(d) + " r=" + std::to_string(r));

  TreewidthResult tw = treewidth(g);
  stage("treewidth", std::to_string(tw.width) +
                         (tw.exact ? " (exact)" : " (upper bound)"));

  int kmax = std::min(t + 1, 4);
  BlockSearchResult blk;
  int kfound = -1;
  bool saw_inconclusive = false;
  for (int k = kmax; k >= 2 && kfound < 0; --k) {
    blk = find_strong_block(g, k);
    if (blk.status == BlockSearchResult::found) kfound = k;
    if (blk.status == BlockSearchResult::inconclusive) saw_inconclusive = true;
  }
  if (kfound < 0) {
    stage("strong-block",
          saw_inconclusive ? "inconclusive for some k <= " + std::to_string(kmax)
                           : "none for k <= " + std::to_string(kmax));
    rep.margin = "no strong k-block at desk scale (the paper wants "
                 "k = max{m, t+1} with Ramsey-sized m)";
    return rep;
  }
  stage("strong-block", "found k=" + std::to_string(kfound) + " block " +
                            vstr(blk.witness.block));

  const VertexSet& block = blk.witness.block;
  int sysidx = -1, scan = 0, pa = -1;
  for (size_t i = 0; i < block.size() && pa < 0; ++i)
    for (size_t j = i + 1; j < block.size(); ++j, ++scan)
      if (!g.adjacent(block[i], block[j])) {
        pa = block[i];
        sysidx = scan;
        break;
      }
  if (pa < 0) {
    stage("pair", "every pair of the block is adjacent");
    rep.margin = "the strong block is a clique; no non-adjacent pair seeds "
                 "the extraction";
    return rep;
  }
  const PathSystem& ps = blk.witness.systems[sysidx];
  stage("pair", "a=" + std::to_string(ps.a) + " b=" + std::to_string(ps.b) +
                    " with " + std::to_string(ps.paths.size()) + " paths");

  ExtractResult er = extract_tree(g, ps.a, ps.b, ps, d, r);
  rep.tree_found = er.ok;
  rep.tree = er.tree;
  if (er.ok) {
    stage("extract-tree", "T_" + std::to_string(d) + "^" + std::to_string(r) +
                              " on " + std::to_string(er.tree.depth.size()) +
                              " vertices");
  } else {
    stage("extract-tree", "failed at depth " + std::to_string(er.fail_depth) +
                              ": " + er.why);
    rep.margin = "extract_tree: " + er.why;
  }

  std::optional<std::vector<int>> fc = contains_induced(g, f);
  rep.f_found = fc.has_value();
  stage("f-copy", fc ? "induced copy of F at " + vstr(vs_sorted(*fc))
                     : "no induced copy of F");
  return rep;
}

}  // namespace tpf
