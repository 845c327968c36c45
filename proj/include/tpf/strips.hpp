#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tpf/embeddings.hpp"
#include "tpf/graph.hpp"

namespace tpf {

// ---------------------------------------------------------------------------
// Smooth trees and strip structures.
// ---------------------------------------------------------------------------

// A smooth tree has at least three vertices and every vertex is either a leaf
// or a branch vertex (degree at least three).
struct SmoothTree {
  Graph tree;

  bool is_leaf(int v) const { return tree.degree(v) == 1; }
  VertexSet leaves() const;
  VertexSet branch_vertices() const;
  // nullopt when smooth; otherwise a description of the first violation.
  std::optional<std::string> violation() const;
};

// An eta-assignment over a smooth tree T inside a host graph with a
// distinguished apex a: tree vertices, tree edges and incident (edge, vertex)
// pairs are mapped to subsets of host \ {a}.  evmap keys exist exactly for
// incident pairs; accessors return the empty set for absent keys.
struct StripStructure {
  Graph host;
  int apex = -1;
  SmoothTree tree;
  std::map<int, VertexSet> vmap;
  std::map<Edge, VertexSet> emap;
  std::map<std::pair<Edge, int>, VertexSet> evmap;

  VertexSet eta_v(int v) const;
  VertexSet eta_e(const Edge& e) const;
  VertexSet eta_ev(const Edge& e, int v) const;
  // B(v): union of eta(e, v) over edges e incident with v.
  VertexSet big_b(int v) const;
  // eta(e) minus both interfaces.
  VertexSet eta_circ(const Edge& e) const;
  // Union of all eta(v) and eta(e).
  VertexSet eta_t() const;
  // eta_t() plus the apex.
  VertexSet eta_plus() const;
  // eta of the subtree induced by the tree vertices in s.
  VertexSet eta_sub(const VertexSet& s) const;

  bool operator==(const StripStructure& o) const {
    return host == o.host && apex == o.apex && tree.tree == o.tree.tree &&
           vmap == o.vmap && emap == o.emap && evmap == o.evmap;
  }
};

// JSON form: {"tree":{"n":..,"edges":[[u,v],..]},"apex":..,"vmap":{"0":[..]},
// "emap":{"0-1":[..]},"evmap":{"0-1@0":[..]}}.  The host travels separately.
// strip_from_json throws ParseError on malformed input (including evmap keys
// for non-incident pairs) but performs no axiom checking beyond shape.
std::string to_strip_json(const StripStructure& s);
StripStructure strip_from_json(const Graph& host, const std::string& text);

// ---------------------------------------------------------------------------
// Validation.
// ---------------------------------------------------------------------------

// Axioms are checked in order "domain", "tree", then "S1".."S8"; the first
// violation is reported with a human-readable witness.  The flags are
// meaningful only when ok.
struct StripReport {
  bool ok = false;
  std::string axiom;
  std::string witness;
  bool tame = false;
  bool substantial = false;
  bool rich = false;
};

StripReport validate_strip(const StripStructure& s);

// ---------------------------------------------------------------------------
// Trapped apices and classification against a pyramid.
// ---------------------------------------------------------------------------

// True iff the closed second neighbourhood of a lies inside h and every
// neighbour of a has degree exactly two in the subgraph induced on h.
// Throws std::invalid_argument when a is not in h.
bool is_trapped(const Graph& g, const VertexSet& h, int a);

// Where a subset of a pyramid attaches: "P1"/"P2"/"P3" when contained in one
// path, "base" when contained in the base triangle, nullopt when neither.
// The empty set reports "P1".
std::optional<std::string> pyramid_local_location(const PyramidEmbedding& sigma,
                                                  const VertexSet& x);

// A single vertex outside the pyramid is wide when its neighbourhood in the
// pyramid is not local.
bool is_wide(const Graph& g, const PyramidEmbedding& sigma, int p);

// First subpath of p (shortest, then earliest, forward before reversed) that
// is a corner path at some base vertex (smallest index first).  The witness
// is oriented so that its first vertex carries the side-path attachment.
struct CornerWitness {
  int corner = -1;  // base index 0..2
  Path witness;
};
std::optional<CornerWitness> find_corner_subpath(const Graph& g,
                                                 const PyramidEmbedding& sigma,
                                                 const Path& p);

// Is q a jewel at base vertex i: anticomplete to path i, and its
// neighbourhood in each other path j equals the closed neighbourhood of
// base[j] within that path.
bool is_jewel_at(const Graph& g, const PyramidEmbedding& sigma, int q, int i);
// Smallest i such that is_jewel_at, or nullopt.
std::optional<int> jewel_corner(const Graph& g, const PyramidEmbedding& sigma,
                                int q);

struct PyramidClassification {
  enum class Kind { local, corner_path, jewel, obstruction };
  Kind kind = Kind::local;
  std::string location;  // local: "P1"/"P2"/"P3"/"base"
  int corner = -1;       // corner_path / jewel: base index
  Path witness;          // corner_path: subpath; jewel: the single vertex
  std::optional<ThetaEmbedding> theta;  // obstruction only
  std::optional<PrismEmbedding> prism;  // obstruction only
};

// Trichotomy for a path p in g \ h against a pyramid sigma inside h whose
// apex is trapped in h: p's attachment is local, or p contains a corner
// subpath, or p contains a jewel vertex.  When none of the three holds the
// host contains a theta or a prism, which is extracted and returned as the
// fourth kind.  Preconditions (trapped apex, sigma inside h, p an induced
// path disjoint from h) are enforced with std::invalid_argument.
PyramidClassification classify_wrt_pyramid(const Graph& g, const VertexSet& h,
                                           int a,
                                           const PyramidEmbedding& sigma,
                                           const Path& p);

// ---------------------------------------------------------------------------
// Rungs and locality.
// ---------------------------------------------------------------------------

// A rung of edge e = uv: either a single vertex lying in both interfaces, or
// an induced path from an eta(e,u)-only vertex to an eta(e,v)-only vertex
// whose interior avoids both interfaces.  Stored oriented from the
// min(e)-side to the max(e)-side.
struct Rung {
  Edge e;
  Path path;
  bool is_long() const { return path.size() > 1; }
};

struct RungReport {
  std::vector<Rung> rungs;  // deterministic order
  VertexSet tilde;          // vertices of eta(e) lying in no rung
};

RungReport strip_rungs(const StripStructure& s, const Edge& e);

// Locality of a subset of eta(T): contained in some eta(e), or in some
// B(v) + eta(v).  Edges are preferred over vertices, both in ascending
// order; when non-local, a lexicographically least witness pair is reported.
struct LocalityResult {
  bool local = false;
  std::optional<Edge> at_edge;
  std::optional<int> at_vertex;
  std::optional<std::pair<int, int>> nonlocal_pair;
};

LocalityResult locality(const StripStructure& s, const VertexSet& x);

// ---------------------------------------------------------------------------
// Eta-pyramids and jewels.
// ---------------------------------------------------------------------------

// Two or three distinct tree edges meeting at a common vertex.
struct SeagullClaw {
  int center = -1;
  std::vector<Edge> edges;
};

// All eta-pyramids at a claw (three edges): base vertex i sits in
// eta(edges[i], center), path i follows a concatenation of rungs along the
// tree towards a leaf, the rung inside edges[i] being long, and the apex
// closes each path at a leaf interface.  Deterministic order; throws
// CapExceeded past an internal budget and std::invalid_argument for
// malformed claws (including a claw at a vertex of degree < 3).
std::vector<PyramidEmbedding> eta_pyramids(const StripStructure& s,
                                           const SeagullClaw& claw);

// Jewels indexed by seagull: key (v, e1, e2) with e1 < e2 both incident with
// v; the value lists every vertex outside eta_plus() that is a jewel at the
// third base vertex of some eta-pyramid at a claw (v, e1, e2, e3).
struct JewelIndex {
  std::map<std::tuple<int, Edge, Edge>, VertexSet> at_seagull;
  VertexSet at_vertex(int v) const;
  VertexSet all() const;
};

JewelIndex find_strip_jewels(const StripStructure& s);

// ---------------------------------------------------------------------------
// Saturation.
// ---------------------------------------------------------------------------

// Thrown when saturation meets an edge pattern that cannot occur in a
// theta-free and prism-free host; carries the extracted witness.
struct ObstructionFound : std::runtime_error {
  std::optional<ThetaEmbedding> theta;
  std::optional<PrismEmbedding> prism;
  explicit ObstructionFound(const std::string& msg) : std::runtime_error(msg) {}
};

// Repeatedly absorbs violating paths (paths outside eta_plus() and the jewel
// set whose attachment to eta(T) is non-local) into edge strips, then absorbs
// the remaining attached components into vertex or edge zones, so that in the
// result everything outside the grown structure and its jewels is
// anticomplete to the grown structure.  Requires a valid, tame, substantial
// and rich input; the result is valid, substantial and rich (tame is not
// preserved) and the postcondition is re-checked literally before returning.
StripStructure saturate_strip(const StripStructure& s);

// The canonical strip of a long pyramid: the tree is the 3-leaf star with
// centre 0 and leaves 1..3, eta(e_i) = P_i minus the apex, the centre
// interface of e_i is {base[i]} and the leaf interface is the neighbour of
// the apex on P_i; all eta(v) are empty.
StripStructure canonical_pyramid_strip(const Graph& g,
                                       const PyramidEmbedding& sigma);

}  // namespace tpf
