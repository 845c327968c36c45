#include "tpf/embeddings.hpp"

#include <algorithm>

namespace tpf {

namespace {

bool fail(std::string* why, const std::string& m) {
  if (why) *why = m;
  return false;
}

// Edges of g with one end in xs and the other in ys (xs, ys disjoint).
std::vector<Edge> cross_edges(const Graph& g, const VertexSet& xs,
                              const VertexSet& ys) {
  std::vector<Edge> r;
  for (int x : xs)
    for (int y : ys)
      if (g.adjacent(x, y)) r.push_back({std::min(x, y), std::max(x, y)});
  std::sort(r.begin(), r.end());
  return r;
}

int induced_edge_count(const Graph& g, const VertexSet& vs) {
  int m = 0;
  for (size_t i = 0; i < vs.size(); i++)
    for (size_t j = i + 1; j < vs.size(); j++)
      if (g.adjacent(vs[i], vs[j])) m++;
  return m;
}

}  // namespace

VertexSet ThetaEmbedding::vertices() const {
  std::vector<int> all;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  return vs_sorted(all);
}

bool ThetaEmbedding::validate(const Graph& g, std::string* why) const {
  if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
    return fail(why, "theta: bad ends");
  if (g.adjacent(a, b)) return fail(why, "theta: ends are adjacent");
  for (int i = 0; i < 3; i++) {
    std::string w;
    if (!is_path(g, paths[i], &w)) return fail(why, "theta: " + w);
    if (paths[i].front() != a || paths[i].back() != b)
      return fail(why, "theta: path not from a to b");
    if (path_length(paths[i]) < 2)
      return fail(why, "theta: path shorter than 2");
  }
  for (int i = 0; i < 3; i++)
    for (int j = i + 1; j < 3; j++) {
      if (vs_intersect(vs_sorted(paths[i]), vs_sorted(paths[j])) !=
          vs_sorted({a, b}))
        return fail(why, "theta: paths not internally disjoint");
      if (relation(g, vs_sorted(path_interior(paths[i])),
                   vs_sorted(path_interior(paths[j]))) !=
          Relation::anticomplete)
        return fail(why, "theta: interiors not anticomplete");
    }
  VertexSet vs = vertices();
  if (induced_edge_count(g, vs) != (int)vs.size() + 1)
    return fail(why, "theta: induced subgraph has stray edges");
  return true;
}

VertexSet PrismEmbedding::vertices() const {
  std::vector<int> all;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  return vs_sorted(all);
}

bool PrismEmbedding::validate(const Graph& g, std::string* why) const {
  VertexSet ta = vs_sorted({a[0], a[1], a[2]});
  VertexSet tb = vs_sorted({b[0], b[1], b[2]});
  if (ta.size() != 3 || tb.size() != 3 || !vs_intersect(ta, tb).empty())
    return fail(why, "prism: triangles not disjoint triples");
  for (int v : ta)
    if (v < 0 || v >= g.n) return fail(why, "prism: vertex out of range");
  for (int v : tb)
    if (v < 0 || v >= g.n) return fail(why, "prism: vertex out of range");
  if (!is_clique(g, ta) || !is_clique(g, tb))
    return fail(why, "prism: triple is not a triangle");
  for (int i = 0; i < 3; i++) {
    std::string w;
    if (!is_path(g, paths[i], &w)) return fail(why, "prism: " + w);
    if (paths[i].front() != a[i] || paths[i].back() != b[i])
      return fail(why, "prism: path i does not join a_i to b_i");
  }
  for (int i = 0; i < 3; i++)
    for (int j = i + 1; j < 3; j++) {
      VertexSet pi = vs_sorted(paths[i]), pj = vs_sorted(paths[j]);
      if (!vs_intersect(pi, pj).empty())
        return fail(why, "prism: paths not disjoint");
      std::vector<Edge> want{{std::min(a[i], a[j]), std::max(a[i], a[j])},
                             {std::min(b[i], b[j]), std::max(b[i], b[j])}};
      std::sort(want.begin(), want.end());
      if (cross_edges(g, pi, pj) != want)
        return fail(why, "prism: extra or missing edges between paths");
    }
  VertexSet vs = vertices();
  if (induced_edge_count(g, vs) != (int)vs.size() + 3)
    return fail(why, "prism: induced subgraph has stray edges");
  return true;
}

bool PyramidEmbedding::is_long() const {
  for (const auto& p : paths)
    if (path_length(p) < 2) return false;
  return true;
}

VertexSet PyramidEmbedding::vertices() const {
  std::vector<int> all;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  return vs_sorted(all);
}

bool PyramidEmbedding::validate(const Graph& g, std::string* why) const {
  VertexSet bs = vs_sorted({base[0], base[1], base[2]});
  if (bs.size() != 3 || vs_contains(bs, apex))
    return fail(why, "pyramid: apex and base not four distinct vertices");
  if (apex < 0 || apex >= g.n) return fail(why, "pyramid: vertex out of range");
  for (int v : bs)
    if (v < 0 || v >= g.n) return fail(why, "pyramid: vertex out of range");
  if (!is_clique(g, bs)) return fail(why, "pyramid: base is not a triangle");
  int unit = 0;
  for (int i = 0; i < 3; i++) {
    std::string w;
    if (!is_path(g, paths[i], &w)) return fail(why, "pyramid: " + w);
    if (paths[i].front() != apex || paths[i].back() != base[i])
      return fail(why, "pyramid: path i not from apex to b_i");
    if (path_length(paths[i]) == 1) unit++;
  }
  if (unit > 1) return fail(why, "pyramid: two paths of length one");
  for (int i = 0; i < 3; i++)
    for (int j = i + 1; j < 3; j++) {
      VertexSet pi = vs_sorted(paths[i]), pj = vs_sorted(paths[j]);
      if (vs_intersect(pi, pj) != VertexSet{apex})
        return fail(why, "pyramid: paths share more than the apex");
      Edge bb{std::min(base[i], base[j]), std::max(base[i], base[j])};
      if (cross_edges(g, vs_minus(pi, {apex}), vs_minus(pj, {apex})) !=
          std::vector<Edge>{bb})
        return fail(why, "pyramid: extra or missing edges between paths");
    }
  VertexSet vs = vertices();
  if (induced_edge_count(g, vs) != (int)vs.size() + 2)
    return fail(why, "pyramid: induced subgraph has stray edges");
  return true;
}

bool StrongBlockWitness::validate(const Graph& g, int k,
                                  std::string* why) const {
  if ((int)block.size() < k) return fail(why, "block smaller than k");
  if (block != vs_sorted(block)) return fail(why, "block not sorted");
  for (int v : block)
    if (v < 0 || v >= g.n) return fail(why, "block vertex out of range");
  size_t npairs = block.size() * (block.size() - 1) / 2;
  if (systems.size() != npairs)
    return fail(why, "one path system per 2-subset required");
  size_t idx = 0;
  for (size_t i = 0; i < block.size(); i++)
    for (size_t j = i + 1; j < block.size(); j++, idx++) {
      const PathSystem& ps = systems[idx];
      if (ps.a != block[i] || ps.b != block[j])
        return fail(why, "system endpoints out of order");
      if ((int)ps.paths.size() < k)
        return fail(why, "fewer than k paths for a pair");
      std::string w;
      // PathSystem::validate gives induced-ness, shared-ends-only and the
      // internal disjointness; distinctness needs an explicit check because
      // two copies of a one-edge path share exactly their ends.
      if (!ps.validate(g, &w)) return fail(why, "pair system: " + w);
      for (size_t p = 0; p < ps.paths.size(); p++)
        for (size_t q = p + 1; q < ps.paths.size(); q++)
          if (ps.paths[p] == ps.paths[q] ||
              (ps.paths[p].size() == ps.paths[q].size() &&
               std::equal(ps.paths[p].begin(), ps.paths[p].end(),
                          ps.paths[q].rbegin())))
            return fail(why, "duplicate path in a pair system");
    }
  // Cross-pair condition, verbatim: P in system of {x,y}, P' in system of
  // {x',y'} distinct 2-subsets, then P cap P' = {x,y} cap {x',y'}.
  for (size_t s = 0; s < systems.size(); s++)
    for (size_t t = s + 1; t < systems.size(); t++) {
      VertexSet shared = vs_intersect(vs_sorted({systems[s].a, systems[s].b}),
                                      vs_sorted({systems[t].a, systems[t].b}));
      for (const auto& p : systems[s].paths)
        for (const auto& q : systems[t].paths)
          if (vs_intersect(vs_sorted(p), vs_sorted(q)) != shared)
            return fail(why,
                        "cross-pair intersection differs from shared ends");
    }
  return true;
}

}  // namespace tpf
