#pragma once

#include <string>
#include <vector>

#include "tpf/graph.hpp"

namespace tpf {

// Tree decomposition (T, bags): bags[i] is the vertex set at tree vertex i.
struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;
  int width() const;  // max bag size - 1 (-1 if no bags)
};

struct DecompositionReport {
  bool ok = false;
  int width = -1;          // valid when ok
  std::string violation;   // first violated condition, with witness
};

// Checks: tree is a tree with one bag per vertex; every host vertex covered;
// every host edge inside some bag; each vertex's bag-support connected.
DecompositionReport validate_decomposition(const Graph& g,
                                           const TreeDecomposition& d);

struct TreewidthResult {
  int width = -1;        // exact value, or best upper bound when !exact
  bool exact = false;
  int lower_bound = -1;  // certified lower bound from the search
  int upper_bound = -1;
  TreeDecomposition decomposition;  // always validates at `upper_bound`
};

// Exact branch-and-bound over elimination orderings (memoised on the set of
// eliminated vertices) for n <= exact_cap; larger graphs get a degeneracy
// lower bound and a min-fill heuristic upper bound, flagged inexact.
TreewidthResult treewidth(const Graph& g, int exact_cap = 30);

// Max over subgraphs of the minimum degree; a treewidth lower bound.
int degeneracy(const Graph& g);

}  // namespace tpf
