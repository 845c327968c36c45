#pragma once

#include <array>
#include <string>

#include "tpf/graph.hpp"

namespace tpf {

// The three basic configurations. Each embedding names its skeleton and
// carries the full paths; validate() re-checks every clause of the
// definition against the host graph, including that the vertex set induces
// exactly the configuration (no stray edges).

struct ThetaEmbedding {
  int a = -1, b = -1;          // non-adjacent ends
  std::array<Path, 3> paths;   // a-b paths of length >= 2
  VertexSet vertices() const;
  bool validate(const Graph& g, std::string* why = nullptr) const;
};

struct PrismEmbedding {
  std::array<int, 3> a{-1, -1, -1};  // one triangle
  std::array<int, 3> b{-1, -1, -1};  // the other triangle
  std::array<Path, 3> paths;         // paths[i] joins a[i] to b[i]
  VertexSet vertices() const;
  bool validate(const Graph& g, std::string* why = nullptr) const;
};

struct PyramidEmbedding {
  int apex = -1;
  std::array<int, 3> base{-1, -1, -1};  // a triangle
  std::array<Path, 3> paths;            // paths[i] from apex to base[i]
  bool is_long() const;                 // all three paths of length >= 2
  VertexSet vertices() const;
  bool validate(const Graph& g, std::string* why = nullptr) const;
};

// Witness for a strong k-block: the block plus, for each 2-subset (in
// lexicographic order), a system of at least k pairwise internally disjoint
// induced paths; paths of distinct pairs may meet only in shared endpoints.
struct StrongBlockWitness {
  VertexSet block;
  std::vector<PathSystem> systems;  // one per 2-subset {block[i],block[j]}, i<j
  bool validate(const Graph& g, int k, std::string* why = nullptr) const;
};

}  // namespace tpf
