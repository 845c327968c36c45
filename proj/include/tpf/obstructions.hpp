#pragma once

#include <optional>
#include <string>

#include "tpf/embeddings.hpp"
#include "tpf/graph.hpp"

namespace tpf {

// Exhaustive searches are exponential; the caps keep them at desk scale.
// Above a cap the detectors throw CapExceeded unless force is set.
struct DetectOptions {
  int theta_cap = 14;
  int pyramid_cap = 14;
  int prism_cap = 16;
  bool force = false;
};

// Skeleton enumeration (ends / base triangle / triangle pair, ascending) plus
// backtracking growth of induced paths with anticompleteness pruning. A
// returned embedding always re-validates; nullopt means the exhaustive search
// found no witness.
std::optional<ThetaEmbedding> find_theta(const Graph& g,
                                         const DetectOptions& opt = {});
std::optional<PrismEmbedding> find_prism(const Graph& g,
                                         const DetectOptions& opt = {});
std::optional<PyramidEmbedding> find_pyramid(const Graph& g,
                                             const DetectOptions& opt = {});

// Lexicographically least k-clique, or nullopt.
std::optional<VertexSet> find_clique(const Graph& g, int k);

// Induced K_{k,k}: both sides stable, completely joined.
struct BicliqueWitness {
  VertexSet left, right;
};
std::optional<BicliqueWitness> find_biclique(const Graph& g, int k);

// Injective map m with m preserving both adjacency and non-adjacency;
// result[i] is the image of h's vertex i. Backtracking; |H| <= 10 unless H
// is a forest (then up to 30). Throws CapExceeded beyond that.
std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                 const Graph& h);

// Membership in the nested classes: no theta and no prism; additionally no
// K_t; additionally no induced copy of the forest F.
struct ClassReport {
  bool in_c = false;
  bool in_ct = false;
  bool in_ct_f = false;  // meaningful only when a forest was supplied
  std::optional<ThetaEmbedding> theta;
  std::optional<PrismEmbedding> prism;
  std::optional<VertexSet> clique;
  std::optional<std::vector<int>> forest_copy;
};
ClassReport class_membership(const Graph& g, int t,
                             const Graph* forest = nullptr,
                             const DetectOptions& opt = {});

// Does G contain one of the four t-basic obstructions (K_t, K_{t,t}, an
// induced subdivision of the t-wall, the line graph of such a subdivision)?
// For G verified theta- and prism-free this reduces to K_t-freeness; outside
// that class the subdivision searches are budgeted and may be inconclusive.
struct CleanResult {
  enum Status { clean, not_clean, inconclusive } status = inconclusive;
  std::string witness;  // which obstruction was found / what was left unchecked
};
CleanResult is_t_clean(const Graph& g, int t, const DetectOptions& opt = {});

// Exhaustive strong-k-block search. Caps: k <= 4, n <= 20 (inconclusive
// beyond, or when the packing search exceeds its node budget).
struct BlockSearchResult {
  enum Status { found, none, inconclusive } status = inconclusive;
  StrongBlockWitness witness;  // valid when found
  std::string note;
};
BlockSearchResult find_strong_block(const Graph& g, int k);

}  // namespace tpf
