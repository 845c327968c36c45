#include "tpf/obstructions.hpp"

#include <algorithm>
#include <functional>

#include "tpf/generators.hpp"
#include "tpf/menger.hpp"

namespace tpf {

namespace {

// ---------------------------------------------------------------------------
// Induced-path enumeration: all induced a-b paths whose vertices lie in `ok`,
// in lexicographic order of the vertex sequence. The visitor returns true to
// stop the enumeration; the function returns whether it was stopped.
// ---------------------------------------------------------------------------
bool enumerate_induced_paths(const Graph& g, int a, int b,
                             const std::vector<char>& ok,
                             const std::function<bool(const Path&)>& visit) {
  if (!ok[a] || !ok[b]) return false;
  std::vector<char> onpath(g.n, 0);
  Path p{a};
  onpath[a] = 1;

  // b must stay reachable from the tip through unused allowed vertices.
  auto reachable = [&](int from) {
    if (from == b) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adj[v]) {
        if (w == b) return true;
        if (ok[w] && !seen[w] && !onpath[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  std::function<bool()> extend = [&]() -> bool {
    int u = p.back();
    if (u == b) return visit(p);
    for (int w : g.adj[u]) {
      if (!ok[w] || onpath[w]) continue;
      bool induced = true;
      for (size_t i = 0; i + 1 < p.size(); i++)
        if (g.adjacent(w, p[i])) {
          induced = false;
          break;
        }
      if (!induced) continue;
      p.push_back(w);
      onpath[w] = 1;
      bool stop = reachable(w) ? extend() : false;
      onpath[w] = 0;
      p.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return extend();
}

std::vector<char> all_ok(int n) { return std::vector<char>(n, 1); }

// ok minus the closed neighbourhood of xs, with `keep` carved back in.
std::vector<char> shrink(const Graph& g, std::vector<char> ok,
                         const VertexSet& xs, const VertexSet& keep) {
  for (int x : xs) {
    ok[x] = 0;
    for (int w : g.adj[x]) ok[w] = 0;
  }
  for (int v : keep) ok[v] = 1;
  return ok;
}

bool is_forest(const Graph& g) {
  return g.m() == g.n - (int)components(g).size();
}

// Per-edge subdivision (counts aligned with g.edge_list).
Graph subdivide_edges(const Graph& g, const std::vector<int>& counts) {
  std::vector<Edge> edges;
  int next = g.n;
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edge_list[e];
    int prev = u;
    for (int i = 0; i < counts[e]; i++) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, v});
  }
  return Graph(next, edges);
}

// Budgeted induced-subgraph embedding used by the wall searches; returns
// found / not found, and sets `exhausted` when the node budget ran out.
bool embeds_induced(const Graph& g, const Graph& h, long long& budget,
                    bool& exhausted) {
  if (h.n > g.n) return false;
  std::vector<int> img(h.n, -1);
  std::vector<char> used(g.n, 0);
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == h.n) return true;
    if (--budget < 0) {
      exhausted = true;
      return false;
    }
    for (int c = 0; c < g.n; c++) {
      if (used[c] || g.degree(c) < h.degree(v)) continue;
      bool okc = true;
      for (int w = 0; w < v; w++)
        if (g.adjacent(c, img[w]) != h.adjacent(v, w)) {
          okc = false;
          break;
        }
      if (!okc) continue;
      img[v] = c;
      used[c] = 1;
      if (place(v + 1)) return true;
      used[c] = 0;
      img[v] = -1;
      if (exhausted) return false;
    }
    return false;
  };
  return place(0);
}

}  // namespace

// ---------------------------------------------------------------------------
// Theta
// ---------------------------------------------------------------------------
std::optional<ThetaEmbedding> find_theta(const Graph& g,
                                         const DetectOptions& opt) {
  if (g.n > opt.theta_cap && !opt.force)
    throw CapExceeded("find_theta: n=" + std::to_string(g.n) +
                      " exceeds cap " + std::to_string(opt.theta_cap) +
                      " (use force to search anyway)");
  std::optional<ThetaEmbedding> found;
  for (int a = 0; a < g.n && !found; a++)
    for (int b = a + 1; b < g.n && !found; b++) {
      if (g.adjacent(a, b)) continue;
      if (!menger(g, a, b, 3).connected) continue;  // necessary condition
      auto base = all_ok(g.n);
      enumerate_induced_paths(g, a, b, base, [&](const Path& p1) {
        auto ok2 = shrink(g, base, vs_sorted(path_interior(p1)), {a, b});
        return enumerate_induced_paths(g, a, b, ok2, [&](const Path& p2) {
          if (!(p1 < p2)) return false;  // unordered pair: enumerate once
          auto ok3 = shrink(g, ok2, vs_sorted(path_interior(p2)), {a, b});
          VertexSet allowed;
          for (int v = 0; v < g.n; v++)
            if (ok3[v] && !vs_contains(vs_sorted(path_interior(p1)), v) &&
                !vs_contains(vs_sorted(path_interior(p2)), v))
              allowed.push_back(v);
          auto p3 = shortest_path(g, a, b, allowed);
          if (!p3) return false;
          ThetaEmbedding emb;
          emb.a = a;
          emb.b = b;
          emb.paths = {p1, p2, *p3};
          std::string why;
          if (!emb.validate(g, &why))
            throw std::logic_error("find_theta: invalid witness: " + why);
          found = emb;
          return true;
        });
      });
    }
  return found;
}

// ---------------------------------------------------------------------------
// Pyramid
// ---------------------------------------------------------------------------
std::optional<PyramidEmbedding> find_pyramid(const Graph& g,
                                             const DetectOptions& opt) {
  if (g.n > opt.pyramid_cap && !opt.force)
    throw CapExceeded("find_pyramid: n=" + std::to_string(g.n) +
                      " exceeds cap " + std::to_string(opt.pyramid_cap) +
                      " (use force to search anyway)");
  std::optional<PyramidEmbedding> found;
  for (int b1 = 0; b1 < g.n && !found; b1++)
    for (int b2 = b1 + 1; b2 < g.n && !found; b2++) {
      if (!g.adjacent(b1, b2)) continue;
      for (int b3 = b2 + 1; b3 < g.n && !found; b3++) {
        if (!g.adjacent(b1, b3) || !g.adjacent(b2, b3)) continue;
        for (int a = 0; a < g.n && !found; a++) {
          if (a == b1 || a == b2 || a == b3) continue;
          int units = (int)g.adjacent(a, b1) + g.adjacent(a, b2) +
                      g.adjacent(a, b3);
          if (units > 1) continue;  // two unit paths would be forced
          int bs[3] = {b1, b2, b3};
          // Grow the three paths in role order; the apex is shared, the
          // bases pairwise adjacent, and interiors must avoid the closed
          // neighbourhoods of the previously fixed paths minus the apex.
          auto base0 = all_ok(g.n);
          base0[b2] = base0[b3] = 0;
          enumerate_induced_paths(g, a, bs[0], base0, [&](const Path& q1) {
            VertexSet s1 = vs_minus(vs_sorted(q1), {a});
            // The other two bases may touch this path only through b1.
            for (int bb : {b2, b3}) {
              int cnt = 0;
              bool only_b1 = true;
              for (int v : s1)
                if (g.adjacent(bb, v)) {
                  cnt++;
                  if (v != b1) only_b1 = false;
                }
              if (cnt != 1 || !only_b1) return false;
            }
            auto ok2 = shrink(g, base0, s1, {a, b2});
            ok2[b3] = 0;
            return enumerate_induced_paths(g, a, bs[1], ok2, [&](const Path&
                                                                     q2) {
              VertexSet s2 = vs_minus(vs_sorted(q2), {a});
              {
                int cnt = 0;
                bool only_b2 = true;
                for (int v : s2)
                  if (g.adjacent(b3, v)) {
                    cnt++;
                    if (v != b2) only_b2 = false;
                  }
                if (cnt != 1 || !only_b2) return false;
              }
              if (g.adjacent(a, b3) &&
                  (path_length(q1) == 1 || path_length(q2) == 1))
                return false;  // third path would be a second unit path
              auto ok3 = shrink(g, ok2, s2, {a, b3});
              VertexSet allowed;
              for (int v = 0; v < g.n; v++)
                if (ok3[v] && !vs_contains(s1, v) && !vs_contains(s2, v))
                  allowed.push_back(v);
              auto q3 = shortest_path(g, a, bs[2], allowed);
              if (!q3) return false;
              PyramidEmbedding emb;
              emb.apex = a;
              emb.base = {b1, b2, b3};
              emb.paths = {q1, q2, *q3};
              std::string why;
              if (!emb.validate(g, &why)) return false;
              found = emb;
              return true;
            });
          });
        }
      }
    }
  return found;
}

// ---------------------------------------------------------------------------
// Prism
// ---------------------------------------------------------------------------
std::optional<PrismEmbedding> find_prism(const Graph& g,
                                         const DetectOptions& opt) {
  if (g.n > opt.prism_cap && !opt.force)
    throw CapExceeded("find_prism: n=" + std::to_string(g.n) +
                      " exceeds cap " + std::to_string(opt.prism_cap) +
                      " (use force to search anyway)");
  // Collect triangles in ascending order.
  std::vector<std::array<int, 3>> tris;
  for (int x = 0; x < g.n; x++)
    for (int y = x + 1; y < g.n; y++) {
      if (!g.adjacent(x, y)) continue;
      for (int z = y + 1; z < g.n; z++)
        if (g.adjacent(x, z) && g.adjacent(y, z)) tris.push_back({x, y, z});
    }
  std::optional<PrismEmbedding> found;
  for (size_t ta = 0; ta < tris.size() && !found; ta++)
    for (size_t tb = ta + 1; tb < tris.size() && !found; tb++) {
      VertexSet A(tris[ta].begin(), tris[ta].end());
      VertexSet B(tris[tb].begin(), tris[tb].end());
      if (!vs_intersect(A, B).empty()) continue;
      // Try every assignment of B-corners to A-corners.
      std::array<int, 3> perm{0, 1, 2};
      std::sort(perm.begin(), perm.end());
      do {
        int a[3] = {tris[ta][0], tris[ta][1], tris[ta][2]};
        int b[3] = {tris[tb][perm[0]], tris[tb][perm[1]], tris[tb][perm[2]]};
        bool okpair = true;
        for (int i = 0; i < 3 && okpair; i++)
          for (int j = 0; j < 3 && okpair; j++)
            if (i != j && g.adjacent(a[i], b[j])) okpair = false;
        if (!okpair) continue;
        auto base0 = all_ok(g.n);
        // Interiors must avoid the closed neighbourhoods of the four other
        // corners; ends get carved back in.
        for (int v : {a[1], a[2], b[1], b[2]}) {
          base0[v] = 0;
          for (int w : g.adj[v]) base0[w] = 0;
        }
        base0[a[0]] = base0[b[0]] = 1;
        enumerate_induced_paths(g, a[0], b[0], base0, [&](const Path& q1) {
          auto ok2 = all_ok(g.n);
          for (int v : {a[2], b[2]}) {
            ok2[v] = 0;
            for (int w : g.adj[v]) ok2[w] = 0;
          }
          for (int v : q1) {
            ok2[v] = 0;
            for (int w : g.adj[v]) ok2[w] = 0;
          }
          ok2[a[1]] = ok2[b[1]] = 1;
          return enumerate_induced_paths(g, a[1], b[1], ok2, [&](const Path&
                                                                     q2) {
            std::vector<char> ok3 = all_ok(g.n);
            for (const Path* q : {&q1, &q2})
              for (int v : *q) {
                ok3[v] = 0;
                for (int w : g.adj[v]) ok3[w] = 0;
              }
            ok3[a[2]] = ok3[b[2]] = 1;
            VertexSet allowed;
            for (int v = 0; v < g.n; v++)
              if (ok3[v]) allowed.push_back(v);
            auto q3 = shortest_path(g, a[2], b[2], allowed);
            if (!q3) return false;
            PrismEmbedding emb;
            emb.a = {a[0], a[1], a[2]};
            emb.b = {b[0], b[1], b[2]};
            emb.paths = {q1, q2, *q3};
            std::string why;
            if (!emb.validate(g, &why)) return false;
            found = emb;
            return true;
          });
        });
        if (found) break;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return found;
}

// ---------------------------------------------------------------------------
// Cliques and bicliques
// ---------------------------------------------------------------------------
std::optional<VertexSet> find_clique(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("find_clique: k must be positive");
  VertexSet cur;
  std::function<bool(int)> grow = [&](int from) -> bool {
    if ((int)cur.size() == k) return true;
    for (int v = from; v < g.n; v++) {
      if (g.n - v < k - (int)cur.size()) break;
      bool okv = true;
      for (int u : cur)
        if (!g.adjacent(u, v)) {
          okv = false;
          break;
        }
      if (!okv) continue;
      cur.push_back(v);
      if (grow(v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (grow(0)) return cur;
  return std::nullopt;
}

std::optional<BicliqueWitness> find_biclique(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("find_biclique: k must be positive");
  VertexSet left;
  std::optional<BicliqueWitness> found;
  // Stable left side, ascending; then a stable k-subset of the common
  // neighbourhood on the right.
  std::function<bool(int)> growl = [&](int from) -> bool {
    if ((int)left.size() == k) {
      VertexSet common;
      for (int v = 0; v < g.n; v++) {
        if (vs_contains(left, v)) continue;
        bool all = true;
        for (int u : left)
          if (!g.adjacent(u, v)) {
            all = false;
            break;
          }
        if (all) common.push_back(v);
      }
      if ((int)common.size() < k) return false;
      VertexSet right;
      std::function<bool(size_t)> growr = [&](size_t from_i) -> bool {
        if ((int)right.size() == k) return true;
        for (size_t i = from_i; i < common.size(); i++) {
          int v = common[i];
          bool okv = true;
          for (int u : right)
            if (g.adjacent(u, v)) {
              okv = false;
              break;
            }
          if (!okv) continue;
          right.push_back(v);
          if (growr(i + 1)) return true;
          right.pop_back();
        }
        return false;
      };
      if (!growr(0)) return false;
      found = BicliqueWitness{left, right};
      return true;
    }
    for (int v = from; v < g.n; v++) {
      bool okv = true;
      for (int u : left)
        if (g.adjacent(u, v)) {
          okv = false;
          break;
        }
      if (!okv) continue;
      left.push_back(v);
      if (growl(v + 1)) return true;
      left.pop_back();
    }
    return false;
  };
  growl(0);
  return found;
}

// ---------------------------------------------------------------------------
// Induced subgraph containment
// ---------------------------------------------------------------------------
std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                 const Graph& h) {
  if (h.n > 10 && !is_forest(h))
    throw CapExceeded("contains_induced: |H|=" + std::to_string(h.n) +
                      " exceeds cap 10 for non-forests");
  if (h.n > 30)
    throw CapExceeded("contains_induced: |H|=" + std::to_string(h.n) +
                      " exceeds cap 30");
  if (h.n > g.n) return std::nullopt;
  std::vector<int> img(h.n, -1);
  std::vector<char> used(g.n, 0);
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == h.n) return true;
    for (int c = 0; c < g.n; c++) {
      if (used[c] || g.degree(c) < h.degree(v)) continue;
      bool okc = true;
      for (int w = 0; w < v; w++)
        if (g.adjacent(c, img[w]) != h.adjacent(v, w)) {
          okc = false;
          break;
        }
      if (!okc) continue;
      img[v] = c;
      used[c] = 1;
      if (place(v + 1)) return true;
      used[c] = 0;
      img[v] = -1;
    }
    return false;
  };
  if (place(0)) return img;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Class membership and cleanliness
// ---------------------------------------------------------------------------
ClassReport class_membership(const Graph& g, int t, const Graph* forest,
                             const DetectOptions& opt) {
  ClassReport r;
  r.theta = find_theta(g, opt);
  r.prism = find_prism(g, opt);
  r.in_c = !r.theta && !r.prism;
  r.clique = find_clique(g, t);
  r.in_ct = r.in_c && !r.clique;
  if (forest) {
    r.forest_copy = contains_induced(g, *forest);
    r.in_ct_f = r.in_ct && !r.forest_copy;
  }
  return r;
}

CleanResult is_t_clean(const Graph& g, int t, const DetectOptions& opt) {
  if (t < 1) throw std::invalid_argument("is_t_clean: t must be positive");
  if (auto c = find_clique(g, t)) {
    std::string w = "K_" + std::to_string(t) + " on {";
    for (size_t i = 0; i < c->size(); i++)
      w += (i ? "," : "") + std::to_string((*c)[i]);
    return {CleanResult::not_clean, w + "}"};
  }
  // Inside the theta/prism-free class, cleanliness is exactly K_t-freeness:
  // for t >= 3 the other three obstruction kinds contain a theta or a prism,
  // and for t <= 2, K_t-freeness already forces (near-)edgelessness.
  try {
    if (!find_theta(g, opt) && !find_prism(g, opt))
      return {CleanResult::clean,
              "theta- and prism-free with no K_" + std::to_string(t)};
  } catch (const CapExceeded&) {
    // could not certify class membership; fall through to the full search
  }
  if (auto b = find_biclique(g, t))
    return {CleanResult::not_clean, "K_{" + std::to_string(t) + "," +
                                        std::to_string(t) + "} found"};

  // No K_1 means no vertices at all; nothing can be contained.
  if (t == 1) return {CleanResult::clean, "empty graph"};

  // Full search: induced subdivisions of the t-wall and their line graphs,
  // enumerated by total amount of subdivision while they still fit in G.
  Graph wall = make_wall(t);
  long long budget = 4'000'000;
  bool exhausted = false;
  int base_v = wall.n, base_e = wall.m();
  std::vector<int> counts(wall.m(), 0);
  // Enumerate subdivision vectors with total s; test wall subdivisions while
  // base_v + s <= n and their line graphs while base_e + s <= n.
  std::function<bool(int, int, bool)> enum_vec = [&](int e, int left,
                                                     bool as_line) -> bool {
    if (exhausted) return false;
    if (e == wall.m()) {
      if (left != 0) return false;
      Graph s = subdivide_edges(wall, counts);
      Graph h = as_line ? line_graph(s) : s;
      return embeds_induced(g, h, budget, exhausted);
    }
    for (int c = 0; c <= left; c++) {
      counts[e] = c;
      if (enum_vec(e + 1, left - c, as_line)) return true;
      if (exhausted) return false;
    }
    counts[e] = 0;
    return false;
  };
  for (int s = 0; base_v + s <= g.n; s++)
    if (enum_vec(0, s, false))
      return {CleanResult::not_clean,
              "induced subdivision of the " + std::to_string(t) + "-wall"};
  for (int s = 0; base_e + s <= g.n; s++)
    if (enum_vec(0, s, true))
      return {CleanResult::not_clean,
              "line graph of a subdivision of the " + std::to_string(t) +
                  "-wall"};
  if (exhausted)
    return {CleanResult::inconclusive,
            "wall-subdivision search exceeded its node budget"};
  return {CleanResult::clean, "exhaustive basic-obstruction search"};
}

// ---------------------------------------------------------------------------
// Strong blocks
// ---------------------------------------------------------------------------
BlockSearchResult find_strong_block(const Graph& g, int k) {
  BlockSearchResult res;
  if (k < 1) throw std::invalid_argument("find_strong_block: k >= 1 required");
  if (k == 1) {
    if (g.n == 0) {
      res.status = BlockSearchResult::none;
      return res;
    }
    res.status = BlockSearchResult::found;
    res.witness.block = {0};
    return res;
  }
  if (k > 4 || g.n > 20) {
    res.status = BlockSearchResult::inconclusive;
    res.note = "caps: k <= 4 and n <= 20";
    return res;
  }

  long long budget = 5'000'000;
  bool exhausted = false;

  // For a fixed block, pack the pair systems one pair at a time; interiors
  // are globally disjoint and never touch other block vertices, which is
  // exactly the verbatim cross-pair condition.
  std::function<bool(const VertexSet&, size_t, std::vector<char>&,
                     std::vector<PathSystem>&)>
      pack = [&](const VertexSet& block, size_t pair_idx,
                 std::vector<char>& used,
                 std::vector<PathSystem>& systems) -> bool {
    size_t npairs = block.size() * (block.size() - 1) / 2;
    if (pair_idx == npairs) return true;
    if (--budget < 0) {
      exhausted = true;
      return false;
    }
    // Decode pair_idx -> (i, j).
    size_t i = 0, j = 0, idx = pair_idx;
    for (i = 0; i < block.size(); i++) {
      if (idx < block.size() - i - 1) {
        j = i + 1 + idx;
        break;
      }
      idx -= block.size() - i - 1;
    }
    int x = block[(int)i], y = block[(int)j];

    std::vector<char> ok(g.n, 0);
    for (int v = 0; v < g.n; v++) ok[v] = !used[v];
    for (int v : block) ok[v] = 0;
    ok[x] = ok[y] = 1;

    // Feasibility: k internally disjoint paths must exist in the remaining
    // graph before we try to pick induced ones.
    {
      VertexSet avail;
      for (int v = 0; v < g.n; v++)
        if (ok[v]) avail.push_back(v);
      Graph sub = induced_subgraph(g, avail);
      int xi = (int)(std::lower_bound(avail.begin(), avail.end(), x) -
                     avail.begin());
      int yi = (int)(std::lower_bound(avail.begin(), avail.end(), y) -
                     avail.begin());
      if (!menger(sub, xi, yi, k).connected) return false;
    }

    PathSystem ps;
    ps.a = x;
    ps.b = y;
    std::function<bool()> try_paths = [&]() -> bool {
      if ((int)ps.paths.size() == k) {
        systems.push_back(ps);
        for (const auto& p : ps.paths)
          for (size_t q = 1; q + 1 < p.size(); q++) used[p[q]] = 1;
        if (pack(block, pair_idx + 1, used, systems)) return true;
        for (const auto& p : ps.paths)
          for (size_t q = 1; q + 1 < p.size(); q++) used[p[q]] = 0;
        systems.pop_back();
        return false;
      }
      std::vector<char> ok2 = ok;
      for (const auto& p : ps.paths)
        for (size_t q = 1; q + 1 < p.size(); q++) ok2[p[q]] = 0;
      return enumerate_induced_paths(g, x, y, ok2, [&](const Path& p) {
        if (--budget < 0) {
          exhausted = true;
          return true;  // unwind
        }
        if (!ps.paths.empty() && !(ps.paths.back() < p))
          return false;  // canonical order of the k paths
        ps.paths.push_back(p);
        bool done = try_paths();
        if (!done) ps.paths.pop_back();
        return done || exhausted;
      });
    };
    bool done = try_paths();
    return done && !exhausted;
  };

  // Blocks in ascending lexicographic order; for k >= 2 a block must be
  // stable (adjacent vertices admit only one induced path between them).
  VertexSet block;
  std::vector<PathSystem> systems;
  std::vector<char> used(g.n, 0);
  std::function<bool(int)> choose = [&](int from) -> bool {
    if ((int)block.size() == k) {
      systems.clear();
      std::fill(used.begin(), used.end(), 0);
      return pack(block, 0, used, systems);
    }
    for (int v = from; v < g.n; v++) {
      if (g.n - v < k - (int)block.size()) break;
      bool okv = true;
      for (int u : block)
        if (g.adjacent(u, v)) {
          okv = false;
          break;
        }
      if (!okv) continue;
      block.push_back(v);
      if (choose(v + 1)) return true;
      block.pop_back();
      if (exhausted) return false;
    }
    return false;
  };
  if (choose(0)) {
    res.status = BlockSearchResult::found;
    res.witness.block = block;
    res.witness.systems = systems;
    std::string why;
    if (!res.witness.validate(g, k, &why))
      throw std::logic_error("find_strong_block: invalid witness: " + why);
    return res;
  }
  if (exhausted) {
    res.status = BlockSearchResult::inconclusive;
    res.note = "packing search exceeded its node budget";
    return res;
  }
  res.status = BlockSearchResult::none;
  return res;
}

}  // namespace tpf
