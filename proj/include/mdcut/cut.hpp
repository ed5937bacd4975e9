#pragma once

// Cut verification and the linear-time minimal disconnected cut search for
// 4-connected planar graphs.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdcut/auxiliary.hpp"
#include "mdcut/connectivity.hpp"
#include "mdcut/dcel.hpp"
#include "mdcut/embedding.hpp"
#include "mdcut/graph.hpp"
#include "mdcut/path_ops.hpp"

namespace mdcut {

/// Minimality evidence for one cut vertex: neighbor[i] is a neighbor of
/// `vertex` in side component i, or 0 if there is none.
struct MinimalityWitness {
  VertexId vertex = 0;
  VertexList neighbor;
};

/// Everything verify_cut learns about a vertex set S.
struct CutReport {
  /// S, sorted.
  VertexList cut;
  /// Components of G - S, each sorted, ordered by smallest vertex.
  std::vector<VertexList> side_components;
  /// Components of G[S], same canonical order.
  std::vector<VertexList> cut_components;
  std::vector<MinimalityWitness> witnesses;
  /// G - S has at least two components.
  bool is_cut = false;
  /// is_cut and every vertex of S has a neighbor in every side component.
  bool minimal = false;
  /// G[S] has at least two components.
  bool disconnected = false;
};

/// O(n + m). Throws InputError if S repeats a vertex or leaves 1..n.
CutReport verify_cut(const Graph& g, std::span<const VertexId> cut);

/// N(u), sorted.
VertexList neighborhood_cut(const Graph& g, VertexId u);

/// The first vertex, in Ω order then boundary order, already seen on an
/// earlier face; nullopt if the faces are pairwise disjoint. O(n + Σ|W_i|).
std::optional<VertexId> face_intersection(int n, const std::vector<VertexList>& faces);

/// The unique minimal cut S of G^∇ with S ∩ V(G) = R: R plus the apex of
/// every face meeting R in exactly two non-adjacent vertices. Throws
/// InputError if R is not a minimal cut of g and ContractViolation if the
/// result does not induce a chordless cycle of G^∇. Result sorted.
VertexList extend_min_cut_to_auxiliary(const Graph& g, const AuxiliaryGraph& aux, std::span<const VertexId> cut);

/// Which rule produced the answer.
enum class CutBranch { near_triangulation, shared_vertex, menger };

const char* to_string(CutBranch b);

struct MinDiscCutOptions {
  /// Embedding to use; computed when absent.
  const RotationSystem* rotation = nullptr;
  /// Check planarity, the rotation and 4-connectivity first (not linear).
  bool validate = false;
  /// Run verify_cut on the answer before returning it.
  bool self_verify =
#ifdef NDEBUG
      false;
#else
      true;
#endif
};

struct MinDiscCutResult {
  /// Sorted cut, or nullopt when G has at most one large face.
  std::optional<VertexList> cut;
  CutBranch branch = CutBranch::near_triangulation;
  std::size_t large_faces = 0;
  /// Shared vertex whose neighborhood was returned.
  VertexId meet = 0;
  /// The chordless, truncated W_1-W_2 paths R_1..R_4 in cyclic order on W_1.
  std::vector<Path> paths;
  Skipper first_skipper;
  Skipper third_skipper;
  /// Cycle of G^∇ whose G-vertices form the cut.
  VertexList aux_cycle;
  /// True if the skipper cycle needed explicit crossing removal.
  bool repaired = false;
  std::vector<std::string> log;
};

/// Minimal disconnected cut of a 4-connected planar graph, or nullopt iff
/// it has at most one large face. O(n + m) unless options.validate is set.
/// Throws ContractViolation when an assumption about the input fails on
/// the way (fewer than four disjoint paths, a failed self-check, ...).
MinDiscCutResult find_min_disc_cut(const Graph& g, const MinDiscCutOptions& options = {});

std::optional<VertexList> min_disc_cut(const Graph& g, const RotationSystem* rot = nullptr);

}  // namespace mdcut
