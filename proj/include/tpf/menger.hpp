#pragma once

#include <optional>
#include <string>
#include <variant>

#include "tpf/graph.hpp"

namespace tpf {

// Outcome of a Menger query between two non-adjacent vertices a, b:
// either k pairwise internally-disjoint induced a-b paths, or a set of
// fewer than k vertices (excluding a and b) meeting every a-b path.
struct MengerResult {
  bool connected;       // true: `paths` holds k paths; false: `cutset` cuts
  PathSystem paths;     // valid when connected
  VertexSet cutset;     // valid when !connected, |cutset| < k
};

// Requires a != b and a,b non-adjacent (throws std::invalid_argument
// otherwise). Runs unit-vertex-capacity max-flow; if the flow reaches k the
// paths are extracted and each is shortcut to an induced path within its own
// vertex set, which preserves internal disjointness.
MengerResult menger(const Graph& g, int a, int b, int k);

// Maximum number of internally-disjoint a-b paths (flow value, no extraction).
int vertex_connectivity_between(const Graph& g, int a, int b);

}  // namespace tpf
