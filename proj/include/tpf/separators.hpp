#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpf/constants.hpp"
#include "tpf/graph.hpp"
#include "tpf/obstructions.hpp"
#include "tpf/strips.hpp"

namespace tpf {

// ---------------------------------------------------------------------------
// Attachment regions.
//
// For a strip structure zeta, a tree vertex v and two distinct incident tree
// edges e1 = u1v, e2 = u2v, the attachment region zeta(v, e1, e2) collects
// everything a jewel hung at the seagull (v, e1, e2) is allowed to touch:
//
//   zeta(e1)  u  zeta(e2)  u  zeta_{e1}(u1)  u  zeta_{e2}(u2)  u  zeta(v)
//
// where zeta_e(u) is the union of those connected components D of
// G[zeta(u)] whose attachment in B(u) lies inside the interface zeta(e, u).
// ---------------------------------------------------------------------------

struct AttachmentRegion {
  int v = -1;
  Edge e1, e2;
  VertexSet region;
};

// Union of the components D of G[zeta(u)] with N_{B(u)}(D) contained in
// zeta(e, u).  `e` must be a tree edge incident with `u`.
VertexSet zeta_edge_components(const StripStructure& s, const Edge& e, int u);

// Requires a valid strip structure and a seagull (v, e1, e2): e1 != e2, both
// tree edges incident with v.  Throws std::invalid_argument otherwise.
AttachmentRegion attachment_region(const StripStructure& s, int v,
                                   const Edge& e1, const Edge& e2);

// ---------------------------------------------------------------------------
// Jewel locality.
//
// For a valid, rich strip structure, every jewel x at a seagull (v, e1, e2)
// satisfies:
//   (1) N(x) /\ zeta+(T) lies inside the attachment region zeta(v, e1, e2);
//   (2) the jewel sets J_{zeta,v} are pairwise disjoint over tree vertices;
//   (3) for every long zeta(e_i)-rung R with end r in zeta(e_i, v) and r' the
//       neighbour of r on R, the contact N_R(x) is {} or exactly {r, r'}.
// A violation certifies that the host graph leaves the class; when it stems
// from (1) or (3) a theta can be extracted and is reported when found.
// ---------------------------------------------------------------------------

struct LocalityViolation {
  std::string what;  // human-readable description of the failed condition
  int jewel = -1;    // offending jewel vertex
  int other = -1;    // second jewel for a disjointness failure, else -1
  std::optional<ThetaEmbedding> theta;
};

// Requires validate_strip(s) ok and rich; throws std::invalid_argument
// otherwise.  Returns std::nullopt when all jewels are local.
std::optional<LocalityViolation> verify_jewel_locality(const StripStructure& s,
                                                       const JewelIndex& jewels);

// ---------------------------------------------------------------------------
// Bag clique defect.
//
// At most one tree edge f incident with a vertex v may have a non-clique
// interface zeta(f, v).  `defect` lists the incident edges whose interface is
// not a clique, in ascending edge order.  If two such edges exist, the host
// contains a theta: pick non-adjacent x1, y1 in zeta(f1, v) and non-adjacent
// x2, y2 in zeta(f2, v); then x1-x2-y1, x1-y2-y1 and a path from x1 to y1
// through (zeta(f1) u B(u1)) \ B(v) form one, where u1 is the other end of
// f1.  The embedding is returned when the construction succeeds.
// ---------------------------------------------------------------------------

struct BagCliqueReport {
  std::vector<Edge> defect;
  std::optional<ThetaEmbedding> theta;
};

// Requires validate_strip(s) ok and rich; throws std::invalid_argument
// otherwise.  `v` must be a tree vertex.
BagCliqueReport bag_clique_defect(const StripStructure& s, int v);

// ---------------------------------------------------------------------------
// Separator certificates.
//
// A certificate packages a vertex x, the set it is separated from, the
// separator S itself, the full (L, M, R) separation of the host graph, and
// the size bound S is promised to satisfy.  `verified` records whether the
// re-check (x's component against the far side) succeeded; when it fails,
// `crossing` holds a concrete path witnessing the failure.
// ---------------------------------------------------------------------------

struct SeparatorCertificate {
  int x = -1;
  VertexSet other_side;  // what S separates x from
  VertexSet S;
  Separation sep;         // L: component of x, M: S, R: the rest
  std::string bound_name; // e.g. "2*j(t,delta)", "sigma(t,delta)", "s(t)"
  Value bound;            // numeric or symbolic value of the bound
  std::string case_name;  // which case of the construction fired
  bool verified = false;
  Path crossing;          // nonempty iff verification failed
};

// ---------------------------------------------------------------------------
// External separators (contraction + Menger).
//
// For x outside zeta+(T) and all jewel sets, contract each nonempty J_{zeta,v}
// to a single vertex z_v, add a root z adjacent to every z_v, and run Menger
// between x and z with k = 3.  Since distinct jewel sets with a connecting
// path outside zeta+(T) force their tree vertices adjacent, three disjoint
// paths would give three pairwise adjacent tree vertices -- a triangle in a
// tree.  So a cutset of size at most 2 exists; expanding contracted vertices
// back to their jewel sets gives S_x with |S_x| < 2j.
//
// If Menger does find three paths, the pair of non-adjacent tree vertices
// they lead to, together with the realized connecting path, is thrown as a
// JewelPairViolation: the host graph is outside the class.
// ---------------------------------------------------------------------------

struct JewelPairLead {
  int v1 = -1, v2 = -1;  // non-adjacent tree vertices with joined jewel sets
  Path path;             // jewel-to-jewel path, interior outside zeta+(T)
};

struct JewelPairViolation : std::runtime_error {
  JewelPairLead lead;
  explicit JewelPairViolation(JewelPairLead l)
      : std::runtime_error("jewel sets at non-adjacent tree vertices " +
                           std::to_string(l.v1) + " and " +
                           std::to_string(l.v2) +
                           " are joined outside the strips"),
        lead(std::move(l)) {}
};

// Scan all non-adjacent tree-vertex pairs for a jewel-to-jewel path whose
// interior avoids zeta+(T), all jewels, and all neighbours of zeta+(T).
// Returns the first lead found (ascending pair order), or std::nullopt.
std::optional<JewelPairLead> scan_jewel_pairs(const StripStructure& s,
                                              const JewelIndex& jewels);

// Separator for x outside zeta+(T) and outside every jewel set.
// Requires: validate ok + substantial + rich, G \ (zeta+ u jewels)
// anticomplete to zeta+(T) except through jewels, and x external.
// Throws std::invalid_argument on violated preconditions,
// JewelPairViolation when the host graph is outside the class, and
// ObstructionFound when a jewel-count breach yields a theta or prism.
SeparatorCertificate jewel_separator(const StripStructure& s, int x);

// ---------------------------------------------------------------------------
// Apex separators.
//
// For x not in N[a], builds S_x with |S_x| < sigma(t, delta) separating x
// from the apex a, by cases on where x lives:
//   - x in zeta(e), e = uv:   S_x = M_u u M_v u N_{u,v} u C_u u C_v
//   - x in zeta(v), deg >= 2: S_x = M_v u J_{zeta,v} u N_v
//   - x a jewel at v:         S_x = O_v = M_v u N_v
//   - x external:             S_x from jewel_separator, re-targeted at a
// where M_v joins the jewel sets of tree-neighbours of v, N_v joins one
// maximal clique K_w per tree-neighbour w (lexicographically first), and
// C_u = B(u) for leaves u, else empty.
// ---------------------------------------------------------------------------

// Requires validate ok + substantial + rich, residual anticompleteness as in
// jewel_separator, and x not in N[a].  Throws std::invalid_argument on
// violated preconditions; propagates JewelPairViolation / ObstructionFound.
SeparatorCertificate apex_separator(const StripStructure& s, int x);

// ---------------------------------------------------------------------------
// a-seeds.
//
// (a, H) is an a-seed when H is an induced subgraph of G \ {a} such that
//   (1) H is the line graph of the 1-subdivision of some caterpillar C
//       (tree of max degree 3 whose branch vertices lie on a common path),
//       and N_G(a) equals the simplicial set of H, and
//   (2) a is trapped in H u {a}.
// Recognition reconstructs the root tree T' of H by Krausz cliques, splits
// T' into original and midpoint vertices by leaf parity, contracts the
// midpoints to recover C, and checks the caterpillar shape.
// ---------------------------------------------------------------------------

struct SeedReport {
  bool ok = false;
  std::string why;  // names the failed bullet when !ok
  // Reconstruction data, valid when ok:
  Graph root_tree;               // T', the 1-subdivision of the caterpillar
  std::vector<bool> midpoint;    // per T' vertex: subdivision midpoint?
  std::vector<Edge> edge_of;     // i-th vertex of sorted H -> its T' edge
  Graph caterpillar;             // C, on relabelled original vertices
  std::vector<int> original_id;  // C vertex -> T' vertex
};

// `h` is a sorted vertex subset of g not containing `a`.  Throws
// std::invalid_argument on malformed input (out of range, duplicates,
// a inside h, empty h).
SeedReport is_a_seed(const Graph& g, int a, const VertexSet& h);

// Separator for x from the apex of an a-seed: builds the unique smooth
// caterpillar T with |N_G(a)| leaves, lays H out as a tame, substantial,
// rich strip structure over T, saturates it, and applies apex_separator.
// The bound is s(t) = sigma(t, 3).  Requires is_a_seed ok, |N_G(a)| >= 3
// (a smooth caterpillar needs at least three leaves), and x not in N[a];
// throws std::invalid_argument otherwise.
SeparatorCertificate seed_separator(const Graph& g, int a, const VertexSet& h,
                                    int x);

}  // namespace tpf
