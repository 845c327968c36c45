#include "tpf/separators.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tpf/menger.hpp"

namespace tpf {

namespace {

bool is_tree_edge(const SmoothTree& t, const Edge& e) {
  return e.first >= 0 && e.first < e.second && e.second < t.tree.n &&
         t.tree.adjacent(e.first, e.second);
}

int other_end(const Edge& e, int v) {
  return e.first == v ? e.second : e.first;
}

std::vector<Edge> incident_edges(const Graph& tree, int v) {
  std::vector<Edge> out;
  for (int w : tree.adj[v]) out.push_back({std::min(v, w), std::max(v, w)});
  std::sort(out.begin(), out.end());
  return out;
}

int max_tree_degree(const Graph& tree) {
  int d = 0;
  for (int v = 0; v < tree.n; ++v) d = std::max(d, tree.degree(v));
  return d;
}

void clique_grow(const Graph& g, std::vector<int>& cand, int size, int& best) {
  if (size > best) best = size;
  while (!cand.empty()) {
    if (size + (int)cand.size() <= best) return;
    int v = cand.back();
    cand.pop_back();
    std::vector<int> next;
    for (int u : cand)
      if (g.adjacent(u, v)) next.push_back(u);
    clique_grow(g, next, size + 1, best);
  }
}

int clique_number(const Graph& g) {
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  int best = 0;
  clique_grow(g, all, 0, best);
  return best;
}

// The class parameter t and the tree degree bound delta are not part of a
// strip structure; derive the tightest applicable pair: the smallest t with
// the host K_t-free, and the maximum tree degree.
struct DerivedBounds {
  int t = 0, delta = 0;
  ConstantsRecord rec;
};

DerivedBounds derive_bounds(const StripStructure& s) {
  DerivedBounds d;
  d.t = std::max(2, clique_number(s.host) + 1);
  d.delta = max_tree_degree(s.tree.tree);
  d.rec = constants(d.t, d.delta, 1, 1, 1);
  return d;
}

// First vertex outside eta_plus() and the jewel sets with a neighbour inside
// eta_plus(), as (outside, inside).
std::optional<std::pair<int, int>> residual_contact(const StripStructure& s,
                                                    const VertexSet& jall) {
  VertexSet ep = s.eta_plus();
  VertexSet blocked = vs_union(ep, jall);
  for (int w = 0; w < s.host.n; ++w) {
    if (vs_contains(blocked, w)) continue;
    for (int u : s.host.adj[w])
      if (vs_contains(ep, u)) return std::make_pair(w, u);
  }
  return std::nullopt;
}

StripReport require_strip(const StripStructure& s, bool need_rich,
                          bool need_substantial, const char* who) {
  StripReport rep = validate_strip(s);
  if (!rep.ok)
    throw std::invalid_argument(std::string(who) + ": invalid strip structure (" +
                                rep.axiom + ": " + rep.witness + ")");
  if (need_substantial && !rep.substantial)
    throw std::invalid_argument(std::string(who) +
                                ": strip structure is not substantial");
  if (need_rich && !rep.rich)
    throw std::invalid_argument(std::string(who) +
                                ": strip structure is not rich");
  return rep;
}

// |J_v| < j for every tree vertex; a breach certifies the host outside the
// class, so extract an obstruction.
void enforce_jewel_bound(const StripStructure& s, const JewelIndex& jewels,
                         const Value& j) {
  if (!j.numeric()) return;
  for (int v = 0; v < s.tree.tree.n; ++v) {
    if (BigInt((long)jewels.at_vertex(v).size()) < j.number) continue;
    DetectOptions opt;
    opt.force = true;
    ObstructionFound err("jewel set at tree vertex " + std::to_string(v) +
                         " breaches the count bound");
    err.theta = find_theta(s.host, opt);
    if (!err.theta) err.prism = find_prism(s.host, opt);
    if (!err.theta && !err.prism)
      throw std::logic_error(
          "jewel count bound breached but the host has no theta or prism");
    throw err;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Attachment regions
// ---------------------------------------------------------------------------

VertexSet zeta_edge_components(const StripStructure& s, const Edge& e, int u) {
  if (!is_tree_edge(s.tree, e) || (e.first != u && e.second != u))
    throw std::invalid_argument(
        "zeta_edge_components: e must be a tree edge incident with u");
  const Graph& g = s.host;
  VertexSet interface = s.eta_ev(e, u);
  VertexSet bu = s.big_b(u);
  VertexSet out;
  for (const VertexSet& comp : components(g, s.eta_v(u)))
    if (vs_subset(vs_intersect(set_neighborhood(g, comp), bu), interface))
      out = vs_union(out, comp);
  return out;
}

AttachmentRegion attachment_region(const StripStructure& s, int v,
                                   const Edge& e1, const Edge& e2) {
  StripReport rep = validate_strip(s);
  if (!rep.ok)
    throw std::invalid_argument("attachment_region: invalid strip structure (" +
                                rep.axiom + ": " + rep.witness + ")");
  if (v < 0 || v >= s.tree.tree.n)
    throw std::invalid_argument("attachment_region: v is not a tree vertex");
  if (e1 == e2 || !is_tree_edge(s.tree, e1) || !is_tree_edge(s.tree, e2) ||
      (e1.first != v && e1.second != v) || (e2.first != v && e2.second != v))
    throw std::invalid_argument(
        "attachment_region: (v, e1, e2) is not a seagull");
  AttachmentRegion r;
  r.v = v;
  r.e1 = e1;
  r.e2 = e2;
  r.region = vs_union(s.eta_e(e1), s.eta_e(e2));
  r.region = vs_union(r.region, zeta_edge_components(s, e1, other_end(e1, v)));
  r.region = vs_union(r.region, zeta_edge_components(s, e2, other_end(e2, v)));
  r.region = vs_union(r.region, s.eta_v(v));
  return r;
}

// ---------------------------------------------------------------------------
// Jewel locality
// ---------------------------------------------------------------------------

std::optional<LocalityViolation> verify_jewel_locality(const StripStructure& s,
                                                       const JewelIndex& jewels) {
  StripReport rep = validate_strip(s);
  if (!rep.ok || !rep.rich)
    throw std::invalid_argument(
        "verify_jewel_locality: needs a valid, rich strip structure");
  const Graph& g = s.host;
  VertexSet ep = s.eta_plus();
  auto extract_theta = [&]() {
    DetectOptions opt;
    opt.force = true;
    return find_theta(g, opt);
  };

  // jewel sets at distinct tree vertices are disjoint
  for (int v = 0; v < s.tree.tree.n; ++v) {
    VertexSet jv = jewels.at_vertex(v);
    if (jv.empty()) continue;
    for (int w = v + 1; w < s.tree.tree.n; ++w) {
      VertexSet both = vs_intersect(jv, jewels.at_vertex(w));
      if (both.empty()) continue;
      LocalityViolation viol;
      viol.jewel = both.front();
      viol.other = both.front();
      viol.what = "jewel " + std::to_string(both.front()) +
                  " lies in the jewel sets of tree vertices " +
                  std::to_string(v) + " and " + std::to_string(w);
      viol.theta = extract_theta();
      return viol;
    }
  }

  for (const auto& [key, xs] : jewels.at_seagull) {
    if (xs.empty()) continue;
    auto [v, e1, e2] = key;
    // attachment confined to the region of the seagull
    AttachmentRegion region = attachment_region(s, v, e1, e2);
    for (int x : xs)
      if (!vs_subset(vs_intersect(vs_sorted(g.adj[x]), ep), region.region)) {
        LocalityViolation viol;
        viol.jewel = x;
        viol.what = "jewel " + std::to_string(x) +
                    " touches the strips outside its attachment region at (" +
                    std::to_string(v) + ")";
        viol.theta = extract_theta();
        return viol;
      }
    // contact with every long rung of e1, e2 is empty or the corner pair
    for (const Edge& e : {e1, e2}) {
      RungReport rr = strip_rungs(s, e);
      for (const Rung& rung : rr.rungs) {
        if (!rung.is_long()) continue;
        const Path& p = rung.path;
        int r = e.first == v ? p.front() : p.back();
        int rp = e.first == v ? p[1] : p[p.size() - 2];
        VertexSet corner = vs_sorted({r, rp});
        for (int x : xs) {
          VertexSet on;
          for (int w : p)
            if (g.adjacent(x, w)) on.push_back(w);
          std::sort(on.begin(), on.end());
          if (on.empty() || on == corner) continue;
          LocalityViolation viol;
          viol.jewel = x;
          viol.what = "jewel " + std::to_string(x) +
                      " meets a rung of edge " + std::to_string(e.first) + "-" +
                      std::to_string(e.second) +
                      " but not in the corner pattern";
          viol.theta = extract_theta();
          return viol;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bag clique defect
// ---------------------------------------------------------------------------

BagCliqueReport bag_clique_defect(const StripStructure& s, int v) {
  StripReport rep = validate_strip(s);
  if (!rep.ok || !rep.rich)
    throw std::invalid_argument(
        "bag_clique_defect: needs a valid, rich strip structure");
  if (v < 0 || v >= s.tree.tree.n)
    throw std::invalid_argument("bag_clique_defect: v is not a tree vertex");
  const Graph& g = s.host;
  BagCliqueReport out;
  for (const Edge& f : incident_edges(s.tree.tree, v))
    if (!is_clique(g, s.eta_ev(f, v))) out.defect.push_back(f);
  if (out.defect.size() < 2) return out;

  // Two non-clique interfaces at one bag force a theta: non-adjacent pairs
  // (x1,y1) and (x2,y2) in the two interfaces span a C4 (interfaces at a
  // common tree vertex are complete to each other), and the first defective
  // strip carries a third x1-y1 path around it.
  auto bad_pair = [&](const VertexSet& iface) {
    for (size_t i = 0; i < iface.size(); ++i)
      for (size_t k = i + 1; k < iface.size(); ++k)
        if (!g.adjacent(iface[i], iface[k]))
          return std::make_pair(iface[i], iface[k]);
    return std::make_pair(-1, -1);
  };
  const Edge& f1 = out.defect[0];
  const Edge& f2 = out.defect[1];
  auto [x1, y1] = bad_pair(s.eta_ev(f1, v));
  auto [x2, y2] = bad_pair(s.eta_ev(f2, v));
  int u1 = other_end(f1, v);
  VertexSet allowed =
      vs_minus(vs_union(s.eta_e(f1), s.big_b(u1)), s.big_b(v));
  allowed = vs_union(allowed, vs_sorted({x1, y1}));
  if (auto q = shortest_path(g, x1, y1, allowed)) {
    ThetaEmbedding th;
    th.a = x1;
    th.b = y1;
    th.paths = {Path{x1, x2, y1}, Path{x1, y2, y1}, *q};
    if (th.validate(g)) {
      out.theta = th;
      return out;
    }
  }
  DetectOptions opt;
  opt.force = true;
  out.theta = find_theta(g, opt);
  return out;
}

// ---------------------------------------------------------------------------
// Jewel pair scan
// ---------------------------------------------------------------------------

std::optional<JewelPairLead> scan_jewel_pairs(const StripStructure& s,
                                              const JewelIndex& jewels) {
  const Graph& g = s.host;
  VertexSet ep = s.eta_plus();
  VertexSet jall = jewels.all();
  VertexSet interior;
  for (int w = 0; w < g.n; ++w) {
    if (vs_contains(ep, w) || vs_contains(jall, w)) continue;
    bool touches = false;
    for (int u : g.adj[w])
      if (vs_contains(ep, u)) {
        touches = true;
        break;
      }
    if (!touches) interior.push_back(w);
  }
  const Graph& tree = s.tree.tree;
  for (int v1 = 0; v1 < tree.n; ++v1) {
    VertexSet j1 = jewels.at_vertex(v1);
    if (j1.empty()) continue;
    for (int v2 = v1 + 1; v2 < tree.n; ++v2) {
      if (tree.adjacent(v1, v2)) continue;
      VertexSet j2 = jewels.at_vertex(v2);
      if (j2.empty()) continue;
      // BFS from the jewels at v1, through the quiet exterior, to one at v2
      std::vector<int> par(g.n, -2);
      std::deque<int> q;
      for (int a1 : j1) {
        par[a1] = -1;
        q.push_back(a1);
      }
      int hit_from = -1, hit_to = -1;
      while (!q.empty() && hit_from < 0) {
        int w = q.front();
        q.pop_front();
        for (int u : g.adj[w]) {
          if (vs_contains(j2, u)) {
            hit_from = w;
            hit_to = u;
            break;
          }
          if (par[u] == -2 && vs_contains(interior, u)) {
            par[u] = w;
            q.push_back(u);
          }
        }
      }
      if (hit_from < 0) continue;
      Path p;
      for (int w = hit_from; w != -1; w = par[w]) p.push_back(w);
      std::reverse(p.begin(), p.end());
      p.push_back(hit_to);
      JewelPairLead lead;
      lead.v1 = v1;
      lead.v2 = v2;
      lead.path = p;
      return lead;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// External separator via contraction + Menger
// ---------------------------------------------------------------------------

SeparatorCertificate jewel_separator(const StripStructure& s, int x) {
  require_strip(s, true, true, "jewel_separator");
  const Graph& g = s.host;
  const Graph& tree = s.tree.tree;
  JewelIndex jewels = find_strip_jewels(s);
  VertexSet jall = jewels.all();
  if (auto bad = residual_contact(s, jall))
    throw std::invalid_argument(
        "jewel_separator: vertex " + std::to_string(bad->first) +
        " outside the structure is adjacent to strip vertex " +
        std::to_string(bad->second));
  VertexSet ep = s.eta_plus();
  if (x < 0 || x >= g.n || vs_contains(ep, x) || vs_contains(jall, x))
    throw std::invalid_argument(
        "jewel_separator: x must lie outside the strips and the jewel sets");

  DerivedBounds db = derive_bounds(s);
  enforce_jewel_bound(s, jewels, db.rec.j);

  // contract each nonempty jewel set to z_v; a root z joins all z_v
  VertexSet rest = vs_minus(vs_minus(vs_full(g.n), ep), jall);
  std::vector<int> znodes;  // tree vertex of each contracted id, in order
  for (int v = 0; v < tree.n; ++v)
    if (!jewels.at_vertex(v).empty()) znodes.push_back(v);
  int nrest = (int)rest.size();
  int zroot = nrest + (int)znodes.size();
  std::vector<Edge> edges;
  for (int i = 0; i < nrest; ++i)
    for (int k = i + 1; k < nrest; ++k)
      if (g.adjacent(rest[i], rest[k])) edges.push_back({i, k});
  auto meets = [&](const VertexSet& a, const VertexSet& b) {
    for (int p : a)
      for (int q : b)
        if (g.adjacent(p, q)) return true;
    return false;
  };
  for (int zi = 0; zi < (int)znodes.size(); ++zi) {
    VertexSet jv = jewels.at_vertex(znodes[zi]);
    for (int i = 0; i < nrest; ++i)
      if (meets({rest[i]}, jv)) edges.push_back({i, nrest + zi});
    for (int zk = zi + 1; zk < (int)znodes.size(); ++zk)
      if (meets(jv, jewels.at_vertex(znodes[zk])))
        edges.push_back({nrest + zi, nrest + zk});
    edges.push_back({nrest + zi, zroot});
  }
  Graph gp(zroot + 1, edges);
  int xid = (int)(std::lower_bound(rest.begin(), rest.end(), x) - rest.begin());

  SeparatorCertificate cert;
  cert.x = x;
  cert.case_name = "external";
  cert.bound_name = "2*j(t,delta)";
  cert.bound.tag = db.rec.j.tag;
  cert.bound.number = db.rec.j.number * 2;

  MengerResult mr = menger(gp, xid, zroot, 3);
  if (mr.connected) {
    // Three disjoint routes reach three distinct jewel sets; their tree
    // vertices cannot be pairwise adjacent (a tree has no triangle), so a
    // non-adjacent pair with a connecting path outside the strips exists.
    std::array<int, 3> tv{-1, -1, -1};
    std::array<std::vector<int>, 3> prefix;
    for (int i = 0; i < 3; ++i)
      for (int w : mr.paths.paths[i]) {
        if (w < nrest) {
          prefix[i].push_back(rest[w]);
          continue;
        }
        tv[i] = znodes[w - nrest];
        break;
      }
    int i1 = -1, i2 = -1;
    for (int i = 0; i < 3 && i1 < 0; ++i)
      for (int k = i + 1; k < 3; ++k)
        if (!tree.adjacent(tv[i], tv[k])) {
          i1 = i;
          i2 = k;
          break;
        }
    if (i1 < 0)
      throw std::logic_error(
          "jewel_separator: three pairwise adjacent tree vertices");
    if (tv[i1] > tv[i2]) std::swap(i1, i2);
    auto pick_jewel = [&](int i) {
      int w = prefix[i].back();
      for (int y : jewels.at_vertex(tv[i]))
        if (g.adjacent(w, y)) return y;
      return -1;
    };
    int y1 = pick_jewel(i1), y2 = pick_jewel(i2);
    VertexSet allowed = vs_sorted({y1, y2});
    for (int w : prefix[i1]) allowed = vs_union(allowed, {w});
    for (int w : prefix[i2]) allowed = vs_union(allowed, {w});
    std::optional<Path> p = shortest_path(g, y1, y2, allowed);
    if (!p)
      throw std::logic_error("jewel_separator: lead path did not materialize");
    JewelPairLead lead;
    lead.v1 = tv[i1];
    lead.v2 = tv[i2];
    lead.path = *p;
    throw JewelPairViolation(lead);
  }

  VertexSet S;
  for (int y : mr.cutset) {
    if (y < nrest)
      S = vs_union(S, {rest[y]});
    else
      S = vs_union(S, jewels.at_vertex(znodes[y - nrest]));
  }
  cert.S = S;
  cert.other_side = vs_union(ep, vs_minus(jall, S));
  VertexSet alive = vs_minus(vs_full(g.n), S);
  VertexSet compx;
  for (const VertexSet& c : components(g, alive))
    if (vs_contains(c, x)) {
      compx = c;
      break;
    }
  cert.sep.L = compx;
  cert.sep.M = S;
  cert.sep.R = vs_minus(alive, compx);
  bool ok_sep = cert.sep.validate(g);
  bool ok_side = vs_intersect(compx, cert.other_side).empty();
  bool ok_size =
      !cert.bound.numeric() || BigInt((long)S.size()) < cert.bound.number;
  cert.verified = ok_sep && ok_side && ok_size;
  if (!cert.verified)
    for (int t : cert.other_side) {
      if (!vs_contains(alive, t)) continue;
      if (auto p = shortest_path(g, x, t, alive)) {
        cert.crossing = *p;
        break;
      }
    }
  return cert;
}

// ---------------------------------------------------------------------------
// Apex separator
// ---------------------------------------------------------------------------

SeparatorCertificate apex_separator(const StripStructure& s, int x) {
  require_strip(s, true, true, "apex_separator");
  const Graph& g = s.host;
  const Graph& tree = s.tree.tree;
  int a = s.apex;
  JewelIndex jewels = find_strip_jewels(s);
  VertexSet jall = jewels.all();
  if (auto bad = residual_contact(s, jall))
    throw std::invalid_argument(
        "apex_separator: vertex " + std::to_string(bad->first) +
        " outside the structure is adjacent to strip vertex " +
        std::to_string(bad->second));
  if (x < 0 || x >= g.n || x == a || g.adjacent(x, a))
    throw std::invalid_argument(
        "apex_separator: x must avoid the closed neighbourhood of the apex");

  DerivedBounds db = derive_bounds(s);
  enforce_jewel_bound(s, jewels, db.rec.j);

  auto tree_nbrs = [&](const VertexSet& vs) {
    return vs_minus(set_neighborhood(tree, vs), vs);
  };
  auto big_m = [&](const VertexSet& vs) {
    VertexSet out;
    for (int w : tree_nbrs(vs)) out = vs_union(out, jewels.at_vertex(w));
    return out;
  };
  auto lex_clique = [&](int w) {
    // lexicographically first maximal clique in B(w)
    VertexSet out;
    for (int u : s.big_b(w)) {
      bool fits = true;
      for (int c : out)
        if (!g.adjacent(u, c)) {
          fits = false;
          break;
        }
      if (fits) out.push_back(u);
    }
    return out;
  };
  auto big_n = [&](const VertexSet& vs) {
    VertexSet out;
    for (int w : tree_nbrs(vs)) out = vs_union(out, lex_clique(w));
    return out;
  };
  auto c_set = [&](int u) {
    return s.tree.is_leaf(u) ? s.big_b(u) : VertexSet{};
  };

  VertexSet S;
  std::string cname;
  std::optional<Edge> at_edge;
  std::optional<int> at_vertex, at_jewel;
  for (const Edge& e : tree.edge_list)
    if (vs_contains(s.eta_e(e), x)) {
      at_edge = e;
      break;
    }
  if (!at_edge)
    for (int v = 0; v < tree.n; ++v)
      if (vs_contains(s.eta_v(v), x)) {
        at_vertex = v;
        break;
      }
  if (!at_edge && !at_vertex)
    for (int v = 0; v < tree.n; ++v)
      if (vs_contains(jewels.at_vertex(v), x)) {
        at_jewel = v;
        break;
      }

  if (at_edge) {
    int u = at_edge->first, v = at_edge->second;
    S = vs_union(big_m({u}), big_m({v}));
    S = vs_union(S, big_n(vs_sorted({u, v})));
    S = vs_union(S, c_set(u));
    S = vs_union(S, c_set(v));
    cname = "edge";
  } else if (at_vertex) {
    int v = *at_vertex;
    S = vs_union(big_m({v}), jewels.at_vertex(v));
    S = vs_union(S, big_n({v}));
    cname = "vertex";
  } else if (at_jewel) {
    int v = *at_jewel;
    S = vs_union(big_m({v}), big_n({v}));
    cname = "jewel";
  } else {
    SeparatorCertificate inner = jewel_separator(s, x);
    S = inner.S;
    cname = "external";
  }
  if (vs_contains(S, x))
    throw std::logic_error("apex_separator: the separator contains x");
  if (vs_contains(S, a))
    throw std::logic_error("apex_separator: the separator contains the apex");

  SeparatorCertificate cert;
  cert.x = x;
  cert.other_side = {a};
  cert.S = S;
  cert.case_name = cname;
  cert.bound_name = "sigma(t,delta)";
  cert.bound = db.rec.sigma;
  VertexSet alive = vs_minus(vs_full(g.n), S);
  VertexSet compx;
  for (const VertexSet& c : components(g, alive))
    if (vs_contains(c, x)) {
      compx = c;
      break;
    }
  cert.sep.L = compx;
  cert.sep.M = S;
  cert.sep.R = vs_minus(alive, compx);
  bool ok_sep = cert.sep.validate(g);
  bool ok_side = !vs_contains(compx, a);
  bool ok_size =
      !cert.bound.numeric() || BigInt((long)S.size()) < cert.bound.number;
  cert.verified = ok_sep && ok_side && ok_size;
  if (!cert.verified && vs_contains(alive, a))
    if (auto p = shortest_path(g, x, a, alive)) cert.crossing = *p;
  return cert;
}

// ---------------------------------------------------------------------------
// a-seeds
// ---------------------------------------------------------------------------

SeedReport is_a_seed(const Graph& g, int a, const VertexSet& h) {
  if (a < 0 || a >= g.n) throw std::invalid_argument("is_a_seed: apex out of range");
  if (h.empty()) throw std::invalid_argument("is_a_seed: empty seed");
  for (size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0 || h[i] >= g.n)
      throw std::invalid_argument("is_a_seed: seed vertex out of range");
    if (i && h[i] <= h[i - 1])
      throw std::invalid_argument("is_a_seed: seed must be sorted and duplicate-free");
  }
  if (vs_contains(h, a))
    throw std::invalid_argument("is_a_seed: the apex lies inside the seed");

  SeedReport rep;
  auto fail = [&rep](const std::string& why) {
    rep.ok = false;
    rep.why = why;
    return rep;
  };
  Graph H = induced_subgraph(g, h);
  int nh = H.n;
  if ((int)components(H).size() != 1)
    return fail("first bullet: the seed is not connected");

  // Krausz cliques: the neighbourhood of each vertex splits into at most two
  // mutually anticomplete cliques; each side extends to one root-tree vertex.
  std::vector<VertexSet> cands;
  auto add_cand = [&cands](VertexSet q) {
    for (const VertexSet& c : cands)
      if (c == q) return;
    cands.push_back(std::move(q));
  };
  for (int v = 0; v < nh; ++v) {
    VertexSet nb(H.adj[v].begin(), H.adj[v].end());
    std::vector<VertexSet> sides = components(H, nb);
    if (sides.size() > 2)
      return fail("first bullet: the neighbourhood of seed vertex " +
                  std::to_string(h[v]) + " splits into " +
                  std::to_string(sides.size()) + " parts");
    for (const VertexSet& side : sides) {
      if (!is_clique(H, side))
        return fail("first bullet: the neighbourhood of seed vertex " +
                    std::to_string(h[v]) + " has a non-clique part");
      add_cand(vs_union(side, {v}));
    }
  }
  std::vector<std::vector<int>> at(nh);
  for (int ci = 0; ci < (int)cands.size(); ++ci)
    for (int v : cands[ci]) at[v].push_back(ci);
  for (int v = 0; v < nh; ++v)
    if (at[v].size() > 2)
      return fail("first bullet: seed vertex " + std::to_string(h[v]) +
                  " lies in three root cliques");
  for (const Edge& e : H.edge_list) {
    int cnt = 0;
    for (int ci : at[e.first])
      if (vs_contains(cands[ci], e.second)) ++cnt;
    if (cnt != 1)
      return fail("first bullet: an adjacency of the seed is not explained by "
                  "exactly one root clique");
  }
  int tn = (int)cands.size();
  std::vector<Edge> tedges(nh);
  for (int v = 0; v < nh; ++v) {
    std::vector<int> ends = at[v];
    while (ends.size() < 2) ends.push_back(tn++);
    tedges[v] = {std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
  }
  Graph tprime(tn, tedges);
  if (tprime.m() != nh)
    return fail("first bullet: two seed vertices map to the same root edge");
  if (tprime.m() != tprime.n - 1 || (int)components(tprime).size() != 1)
    return fail("first bullet: the root graph is not a tree");
  for (int u = 0; u < nh; ++u)
    for (int v = u + 1; v < nh; ++v) {
      bool share = tedges[u].first == tedges[v].first ||
                   tedges[u].first == tedges[v].second ||
                   tedges[u].second == tedges[v].first ||
                   tedges[u].second == tedges[v].second;
      if (share != H.adjacent(u, v))
        return fail(
            "first bullet: the seed is not the line graph of its root tree");
    }

  // split the root tree into originals and subdivision midpoints: leaves are
  // originals, parity from a leaf forces the rest, midpoints have degree 2
  int leaf0 = -1;
  for (int v = 0; v < tn; ++v)
    if (tprime.degree(v) == 1) {
      leaf0 = v;
      break;
    }
  std::vector<int> dist(tn, -1);
  std::deque<int> q{leaf0};
  dist[leaf0] = 0;
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (int u : tprime.adj[w])
      if (dist[u] < 0) {
        dist[u] = dist[w] + 1;
        q.push_back(u);
      }
  }
  rep.midpoint.assign(tn, false);
  for (int v = 0; v < tn; ++v) rep.midpoint[v] = dist[v] % 2 == 1;
  for (int v = 0; v < tn; ++v) {
    if (tprime.degree(v) == 1 && rep.midpoint[v])
      return fail("first bullet: the root tree is not a 1-subdivision "
                  "(leaves at odd distance)");
    if (rep.midpoint[v] && tprime.degree(v) != 2)
      return fail("first bullet: the root tree is not a 1-subdivision "
                  "(a midpoint of degree " + std::to_string(tprime.degree(v)) +
                  ")");
  }

  // contract the midpoints to recover the caterpillar
  std::vector<int> c_of(tn, -1);
  rep.original_id.clear();
  for (int v = 0; v < tn; ++v)
    if (!rep.midpoint[v]) {
      c_of[v] = (int)rep.original_id.size();
      rep.original_id.push_back(v);
    }
  std::vector<Edge> cedges;
  for (int v = 0; v < tn; ++v)
    if (rep.midpoint[v]) {
      int p = c_of[tprime.adj[v][0]], r = c_of[tprime.adj[v][1]];
      cedges.push_back({std::min(p, r), std::max(p, r)});
    }
  Graph C((int)rep.original_id.size(), cedges);
  for (int v = 0; v < C.n; ++v)
    if (C.degree(v) > 3)
      return fail("first bullet: the contracted tree has a vertex of degree " +
                  std::to_string(C.degree(v)));
  VertexSet branch;
  for (int v = 0; v < C.n; ++v)
    if (C.degree(v) == 3) branch.push_back(v);
  if (branch.size() >= 2) {
    // all branch vertices must lie on the path between the two farthest ones
    auto dists_from = [&C](int src) {
      std::vector<int> d(C.n, -1);
      std::deque<int> bq{src};
      d[src] = 0;
      while (!bq.empty()) {
        int w = bq.front();
        bq.pop_front();
        for (int u : C.adj[w])
          if (d[u] < 0) {
            d[u] = d[w] + 1;
            bq.push_back(u);
          }
      }
      return d;
    };
    int b1 = -1, b2 = -1, far = -1;
    for (int p : branch) {
      std::vector<int> d = dists_from(p);
      for (int r : branch)
        if (d[r] > far) {
          far = d[r];
          b1 = p;
          b2 = r;
        }
    }
    VertexSet on_path = vs_sorted(*shortest_path(C, b1, b2, vs_full(C.n)));
    for (int b : branch)
      if (!vs_contains(on_path, b))
        return fail(
            "first bullet: the branch vertices do not lie on a common path");
  }

  // N(a) must be exactly the simplicial set of the seed
  VertexSet z;
  for (int v : simplicial_set(H)) z.push_back(h[v]);
  if (z != neighborhood(g, a, 1, false))
    return fail("first bullet: N(a) differs from the simplicial set of the seed");

  if (!is_trapped(g, vs_union(h, {a}), a))
    return fail("second bullet: the apex is not trapped in the seed");

  rep.ok = true;
  rep.root_tree = tprime;
  rep.edge_of = tedges;
  rep.caterpillar = C;
  return rep;
}

SeparatorCertificate seed_separator(const Graph& g, int a, const VertexSet& h,
                                    int x) {
  SeedReport rep = is_a_seed(g, a, h);
  if (!rep.ok)
    throw std::invalid_argument("seed_separator: not an a-seed (" + rep.why + ")");
  VertexSet na = neighborhood(g, a, 1, false);
  if (na.size() < 3)
    throw std::invalid_argument(
        "seed_separator: the seed has fewer than three leaves, so no smooth "
        "caterpillar exists");
  if (x < 0 || x >= g.n || x == a || g.adjacent(x, a))
    throw std::invalid_argument(
        "seed_separator: x must avoid the closed neighbourhood of the apex");

  // smooth the caterpillar (suppress its degree-2 vertices) and lay the seed
  // out over the smoothing: each smooth edge is the concatenation of the
  // half-edge pairs along its chain
  const Graph& C = rep.caterpillar;
  std::vector<int> tid(C.n, -1);
  std::vector<int> kept;
  for (int v = 0; v < C.n; ++v)
    if (C.degree(v) != 2) {
      tid[v] = (int)kept.size();
      kept.push_back(v);
    }
  auto half_edge = [&](int original, int mid) {
    Edge key{std::min(original, mid), std::max(original, mid)};
    for (size_t i = 0; i < rep.edge_of.size(); ++i)
      if (rep.edge_of[i] == key) return h[i];
    throw std::logic_error("seed_separator: missing half-edge");
  };
  auto midpoint_of = [&](int p, int r) {
    int op = rep.original_id[p], oq = rep.original_id[r];
    for (int m : rep.root_tree.adj[op])
      if (rep.root_tree.adjacent(m, oq)) return m;
    throw std::logic_error("seed_separator: missing midpoint");
  };

  StripStructure strip;
  strip.host = g;
  strip.apex = a;
  std::vector<Edge> tedges;
  std::set<std::pair<int, int>> seen;
  for (int p : kept) {
    for (int q0 : C.adj[p]) {
      if (seen.count({p, q0})) continue;
      std::vector<int> chain{p};
      int prev = p, cur = q0;
      while (C.degree(cur) == 2) {
        chain.push_back(cur);
        int nxt = C.adj[cur][0] == prev ? C.adj[cur][1] : C.adj[cur][0];
        prev = cur;
        cur = nxt;
      }
      chain.push_back(cur);
      seen.insert({p, q0});
      seen.insert({cur, prev});
      Edge te{std::min(tid[p], tid[cur]), std::max(tid[p], tid[cur])};
      tedges.push_back(te);
      VertexSet strip_set;
      int first_hv = -1, last_hv = -1;
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        int m = midpoint_of(chain[i], chain[i + 1]);
        int hv1 = half_edge(rep.original_id[chain[i]], m);
        int hv2 = half_edge(rep.original_id[chain[i + 1]], m);
        if (i == 0) first_hv = hv1;
        last_hv = hv2;
        strip_set = vs_union(strip_set, vs_sorted({hv1, hv2}));
      }
      strip.emap[te] = strip_set;
      strip.evmap[{te, tid[p]}] = {first_hv};
      strip.evmap[{te, tid[cur]}] = {last_hv};
    }
  }
  strip.tree.tree = Graph((int)kept.size(), tedges);

  StripReport srep = validate_strip(strip);
  if (!srep.ok || !srep.tame || !srep.substantial || !srep.rich)
    throw std::logic_error(
        "seed_separator: the reconstructed strip structure is not valid, "
        "tame, substantial and rich (" + srep.axiom + ": " + srep.witness + ")");
  StripStructure sat = saturate_strip(strip);
  SeparatorCertificate cert = apex_separator(sat, x);
  cert.bound_name = "s(t)";  // the smooth caterpillar has maximum degree 3
  return cert;
}

}  // namespace tpf
