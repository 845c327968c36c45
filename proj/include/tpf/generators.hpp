#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "tpf/embeddings.hpp"
#include "tpf/graph.hpp"

namespace tpf {

// Basic configurations with prescribed path lengths (in edges). Preconditions
// follow the definitions: theta needs all lengths >= 2; prism all >= 1 (its
// triangles are disjoint); pyramid all >= 1 with at most one length-1 path.
std::pair<Graph, ThetaEmbedding> make_theta(int l1, int l2, int l3);
std::pair<Graph, PrismEmbedding> make_prism(int l1, int l2, int l3);
std::pair<Graph, PyramidEmbedding> make_pyramid(int l1, int l2, int l3);

using ConfigEmbedding =
    std::variant<ThetaEmbedding, PrismEmbedding, PyramidEmbedding>;
std::pair<Graph, ConfigEmbedding> make_config(const std::string& kind, int l1,
                                              int l2, int l3);

// Brick wall W_{t x t}, t >= 2: rows 1..t over columns 0..2t-1. The top row
// uses the even columns, rows 2..t-1 all columns, the bottom row the columns
// of parity t mod 2. Each row is a path in column order; verticals join rows
// r, r+1 at columns of parity (r+1) mod 2. Vertices are numbered row by row,
// by column within a row. 2t(t-1) vertices, maximum degree 3.
Graph make_wall(int t);

// Vertex i of the result is f.edge_list[i]; adjacent iff the edges share an
// end. Requires at least one edge.
Graph line_graph(const Graph& f);

// Replace every edge by a path with k new interior vertices (k = 0 is the
// identity). New vertices are appended in edge_list order.
Graph subdivide_each_edge(const Graph& g, int k);

// Rooted tree in which the root has degree d, every other internal vertex
// degree d+1, and every leaf is at distance exactly r from the root.
// Returns the graph and the root (vertex 0); BFS numbering.
std::pair<Graph, int> make_T_d_r(int d, int r);

// Caterpillar description: a spine path with one optional pendant leg per
// spine vertex, plus a pendant path vertex extending each end of the spine
// (so spine ends with a leg still have degree <= 3). Compact string form:
// one character per spine vertex, 'L' = leg, '.' = none, e.g. "L.LL".
struct CaterpillarSpec {
  std::vector<bool> legs;

  static CaterpillarSpec parse(const std::string& text);
  std::string str() const;
  // The tree itself: spine 0..m-1, then the two end pendants, then the leg
  // vertices in spine order. Throws if the result has fewer than 3 leaves.
  Graph caterpillar() const;
};

// Seed graph for the apex framing: H is the line graph of the 1-subdivision
// of the caterpillar, and the apex (last vertex) is adjacent exactly to the
// simplicial vertices of H.
struct ASeed {
  Graph g;
  int apex = -1;
  VertexSet seed;     // vertices of H, i.e. everything except the apex
  Graph caterpillar;  // the caterpillar the seed was built from
};
ASeed make_a_seed(const CaterpillarSpec& spec);

// Rejection-sampled member of the target class: Erdos-Renyi proposals with
// edge probability 2/n, accepted once verified theta-free, prism-free and
// K_t-free. Deterministic in `seed`. Throws if the budget runs out, naming
// the last witness found.
Graph random_class_graph(int n, int t, uint64_t seed, int cap = 30,
                         int budget = 300);

}  // namespace tpf
