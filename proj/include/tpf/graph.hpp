#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tpf {

// Vertex sets are sorted vectors of distinct vertex ids.
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;  // normalised u < v

// ---------------------------------------------------------------------------
// Graph: immutable simple undirected graph on vertices 0..n-1.
// Construction validates the edge list (range, no loops); duplicates are
// collapsed.  Adjacency is kept both as a matrix and as sorted lists.
// ---------------------------------------------------------------------------
struct Graph {
  int n = 0;
  std::vector<Edge> edge_list;         // sorted lexicographically, u < v
  std::vector<std::vector<int>> adj;   // sorted neighbour lists
  std::vector<uint8_t> mat;            // n*n adjacency matrix

  Graph() = default;
  Graph(int n_, const std::vector<Edge>& edges);

  bool adjacent(int u, int v) const { return mat[(size_t)u * n + v] != 0; }
  int degree(int v) const { return (int)adj[v].size(); }
  int m() const { return (int)edge_list.size(); }

  bool operator==(const Graph& o) const {
    return n == o.n && edge_list == o.edge_list;
  }
};

// -- vertex-set helpers (inputs must be sorted; outputs are sorted) ---------
VertexSet vs_sorted(std::vector<int> v);                 // sort + dedup
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_minus(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
bool vs_contains(const VertexSet& a, int x);
bool vs_subset(const VertexSet& a, const VertexSet& b);  // a subseteq b
VertexSet vs_full(int n);                                // {0..n-1}

// ---------------------------------------------------------------------------
// Basic queries
// ---------------------------------------------------------------------------

// Vertices at distance exactly d (closed=false) or at most d (closed=true)
// from x.  d >= 0; closed ball of radius 0 is {x}, open "sphere" at 0 is {x}.
VertexSet neighborhood(const Graph& g, int x, int d, bool closed);

enum class Relation { complete, anticomplete, mixed };
std::string relation_name(Relation r);

// Relation between disjoint vertex sets.  Empty sets are vacuously both
// complete and anticomplete; anticomplete is reported.
Relation relation(const Graph& g, const VertexSet& xs, const VertexSet& ys);

bool is_clique(const Graph& g, const VertexSet& xs);
bool is_stable(const Graph& g, const VertexSet& xs);

// Vertices whose neighbourhood is a clique.
VertexSet simplicial_set(const Graph& g);

// Neighbours of the set xs (excluding xs itself), optionally restricted.
VertexSet set_neighborhood(const Graph& g, const VertexSet& xs);

// Connected components of g restricted to `alive`; each component sorted,
// components ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& alive);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Induced subgraph on `vs` (sorted); vertex i of the result is vs[i].
Graph induced_subgraph(const Graph& g, const VertexSet& vs);

// Disjoint union, complete graph, path, cycle, empty graph.
Graph graph_union(const Graph& a, const Graph& b);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);

// ---------------------------------------------------------------------------
// Paths.  A "path" is always an induced path, represented by its vertex
// sequence.  is_path validates sequence-ness and inducedness.
// ---------------------------------------------------------------------------
using Path = std::vector<int>;

bool is_path(const Graph& g, const Path& p, std::string* why = nullptr);
inline int path_length(const Path& p) { return (int)p.size() - 1; }
inline Path path_interior(const Path& p) {
  if (p.size() <= 2) return {};
  return Path(p.begin() + 1, p.end() - 1);
}

// Shortest path between a and b inside `allowed` (which must contain a, b);
// BFS, deterministic tie-break by vertex id.  Shortest paths are induced.
std::optional<Path> shortest_path(const Graph& g, int a, int b,
                                  const VertexSet& allowed);

// ---------------------------------------------------------------------------
// Separation (L, M, R): L+M+R partitions V, L and R nonempty and mutually
// anticomplete.  validate() reports the first violated condition.
// ---------------------------------------------------------------------------
struct Separation {
  VertexSet L, M, R;
  bool validate(const Graph& g, std::string* why = nullptr) const;
};

// ---------------------------------------------------------------------------
// PathSystem: pairwise internally disjoint induced a-b paths.
// ---------------------------------------------------------------------------
struct PathSystem {
  int a = -1, b = -1;
  std::vector<Path> paths;
  bool validate(const Graph& g, std::string* why = nullptr) const;
  // first interior vertex of path i (requires non-adjacent ends)
  int first_interior(size_t i) const { return paths[i][1]; }
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Search exceeded its configured cap; the result is inconclusive, which is a
// distinct outcome from "definitively absent".
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tpf
