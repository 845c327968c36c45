#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpf/graph.hpp"

namespace tpf {

// ---------------------------------------------------------------------------
// Tournaments (really: digraphs where both arcs of a pair may be present)
// ---------------------------------------------------------------------------

struct Tournament {
  int n = 0;
  // arc[u][v] != 0 means there is an arc u -> v; arc[u][v] and arc[v][u] may
  // both hold.
  std::vector<std::vector<char>> arc;

  Tournament() = default;
  explicit Tournament(int n_)
      : n(n_), arc(n_, std::vector<char>(n_, 0)) {}

  void add_arc(int u, int v);
  bool has_arc(int u, int v) const { return arc[u][v] != 0; }
  // True when exactly one of each pair of opposite arcs is present.
  bool is_tournament() const;
  // Simple underlying graph: edge uv iff at least one of the two arcs exists.
  Graph underlying() const;
};

// Lexicographically least sequence v_1..v_p with an arc v_i -> v_j for every
// i < j, or nullopt if none exists.  Exponential in the worst case; p <= 8
// (CapExceeded beyond), p >= 1 (invalid_argument otherwise).
std::optional<std::vector<int>> transitive_subtournament(const Tournament& d,
                                                         int p);

// ---------------------------------------------------------------------------
// Connectifier outcome classifier
// ---------------------------------------------------------------------------

// Search G for the smallest induced subgraph H realizing one of the four
// connectifier outcomes with respect to S:
//   "path"                      - induced path carrying >= h vertices of S
//   "caterpillar"               - H a caterpillar, H cap S = Z(H), |..| = h
//   "line_graph_of_caterpillar" - H = L(T) for a caterpillar T, same Z clause
//   "subdivided_star"           - H a subdivision of K_{1,delta}, delta >= 3,
//                                 Z(H) subseteq H cap S subseteq Z(H)+{root}
//   "insufficient"              - exhaustive scan found none
// Z(H) is the set of simplicial vertices of H.  Masks are scanned in
// increasing numeric order; per subgraph the outcomes are tried in the order
// path, subdivided_star, caterpillar, line graph.  G must be connected
// (invalid_argument); caps n <= 20, 1 <= h <= 4 (CapExceeded).
struct ConnectifyResult {
  std::string outcome;
  VertexSet h;        // vertices of H; empty when insufficient
  VertexSet h_cap_s;  // H cap S
  int root = -1;      // subdivided-star root, else -1
};
ConnectifyResult connectify(const Graph& g, const VertexSet& s, int h);

// ---------------------------------------------------------------------------
// Banana selection
// ---------------------------------------------------------------------------

// Given nu and a system of internally disjoint induced a-b paths, select nu
// of them whose first interior vertices a_P form, together with b, a stable
// set, and such that earlier selected a_P have a neighbour in each later
// path's interior beyond its own a_P.  Stages: (1) maximum stable subset of
// {a_P} u {b}; (2) digraph D over it with an arc a_i -> a_j iff a_i has a
// neighbour in P_j^* minus {a_j}; (3) transitive subtournament of order
// nu+1; (4) drop its first vertex and re-verify both conclusion bullets on
// the tail.  Success is not guaranteed on small inputs; failure reports the
// stage that died plus a witness (stage 1: the too-small stable set with b;
// stage 3: a maximal stable set of the underlying graph of D, the shape that
// signals a hidden seed).
struct BananaResult {
  bool ok = false;
  std::vector<int> selected;  // indices into ps.paths, in tournament order
  VertexSet stable;           // {a_P : P selected} u {b}
  int stage = 0;              // 1 or 3 when !ok
  std::string why;
  VertexSet witness;
};
BananaResult banana(const Graph& g, int a, int b, const PathSystem& ps,
                    int nu);

// ---------------------------------------------------------------------------
// Recursive T_d^r extraction
// ---------------------------------------------------------------------------

// A copy of T_d^r as a subgraph of G: `root` at depth 0, every non-root
// vertex mapped to its parent, all edges of the map present in G.
struct TreeWitness {
  int root = -1;
  std::map<int, int> parent;  // v -> parent; root omitted
  std::map<int, int> depth;   // v -> distance from root; includes the root

  VertexSet vertices() const;
  // Full T_d^r shape check: parent edges exist in g, depths consistent, the
  // root has d children, every other internal vertex has d children (degree
  // d+1 inside the tree), every leaf sits at depth exactly r, b is not used,
  // and all vertices lie in `allowed`.
  bool validate(const Graph& g, int d, int r, int b, const VertexSet& allowed,
                std::string* why = nullptr) const;
};

std::string tree_witness_to_json(const TreeWitness& w);
TreeWitness tree_witness_from_json(const std::string& text);

// Build T_d^r rooted at a inside {a} u union(ps).  r = 1 takes the star on
// the first d first-neighbours.  r >= 2 runs banana with nu = (m'+1)d for
// the largest m' the path count allows, splits the selection into d blocks
// (one new root a'_i, then m' paths re-routed through a neighbour of a'_i),
// and recurses.  On failure `tree` holds the partial tree assembled so far
// and fail_depth the depth at which the recursion starved.
struct ExtractResult {
  bool ok = false;
  TreeWitness tree;
  int fail_depth = -1;
  std::string why;
};
ExtractResult extract_tree(const Graph& g, int a, int b, const PathSystem& ps,
                           int d, int r);

// ---------------------------------------------------------------------------
// Trichotomy and the end-to-end demo pipeline
// ---------------------------------------------------------------------------

// Search for an induced K_{s,s}, a clique K_t, or an induced T_d^r, in that
// order.  kind is one of "K_ss", "K_t", "T_d_r", "none".  Cap n <= 20.
struct TrichotomyResult {
  std::string kind;
  VertexSet witness;
};
TrichotomyResult kp_trichotomy(const Graph& g, int d, int r, int s, int t);

// Orchestration demo for the tree-extraction route: verify membership (no
// theta, prism, K_t, or induced F), report treewidth, hunt a strong k-block
// for the largest feasible k <= 4, pick a non-adjacent pair of the block,
// run extract_tree with d = max degree of F and r = its radius, then search
// for an induced copy of F directly.  `margin` names the first hypothesis
// that failed at this scale ("" if the tree was extracted).
struct PipelineStage {
  std::string name;
  std::string outcome;
};
struct PipelineReport {
  std::vector<PipelineStage> stages;
  bool member = false;
  bool tree_found = false;
  bool f_found = false;
  std::optional<TreeWitness> tree;  // partial or complete, when reached
  std::string margin;
};
PipelineReport theorem_1_7_pipeline(const Graph& g, const Graph& f, int t);

}  // namespace tpf
