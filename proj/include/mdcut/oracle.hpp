#pragma once

// Exhaustive ground truth for small graphs: every minimal cut by subset
// scan, plus checks of the structural facts the fast algorithm relies on.
// Nothing here shares code with verify_cut or the cut search.

#include <span>
#include <string>
#include <vector>

#include "mdcut/embedding.hpp"
#include "mdcut/graph.hpp"

namespace mdcut {

inline constexpr int kDefaultOracleBound = 14;
/// Subsets are bitmasks; this is a hard ceiling regardless of the bound.
inline constexpr int kOracleCeiling = 24;

struct MinimalCutEntry {
  /// Sorted.
  VertexList vertices;
  int side_components = 0;
  int cut_components = 0;
  /// G[S] has no edges.
  bool stable = false;
};

struct MinimalCutInventory {
  /// Sorted lexicographically by vertex list.
  std::vector<MinimalCutEntry> cuts;

  bool has_disconnected() const;
};

/// Every S ⊂ V such that G - S has two or more components and each vertex
/// of S has a neighbor in each of them. Throws InputError if n > bound.
MinimalCutInventory enumerate_minimal_cuts(const Graph& g, int bound = kDefaultOracleBound);

/// Every minimal cut induces a connected subgraph.
bool is_cleavable(const Graph& g, int bound = kDefaultOracleBound);

/// Smallest number of vertices other than s and t whose removal separates
/// s from t; -1 if s and t are adjacent.
int min_vertex_separator(const Graph& g, VertexId s, VertexId t, int bound = kDefaultOracleBound);

/// Outcome of one oracle check.
struct OracleCheck {
  std::string name;
  /// False when the graph falls outside the check's hypotheses.
  bool applicable = true;
  bool passed = true;
  std::string note;
  std::vector<std::string> failures;
};

/// Near-triangulation cut shapes: each minimal cut is a chordless cycle
/// meeting the large face in nothing, a vertex or an edge, or a path whose
/// ends, and only its ends, lie on the large face. Throws InputError when
/// the embedding has two or more large faces.
OracleCheck check_near_triangulation_cut_shapes(const Graph& g, const RotationSystem& rot,
                                                int bound = kDefaultOracleBound);

/// G[R] has at most max(k, 1) components for every minimal cut R, k the
/// number of large faces (a triangulation still has connected cuts).
OracleCheck check_component_bound(const Graph& g, const RotationSystem& rot, int bound = kDefaultOracleBound);

/// No minimal cut is edgeless. Applies to 3-connected graphs whose large
/// faces are pairwise disjoint.
OracleCheck check_no_stable_cut(const Graph& g, const RotationSystem& rot, int bound = kDefaultOracleBound);

/// Cleavability by inventory.
OracleCheck check_cleavable(const Graph& g, int bound = kDefaultOracleBound);

/// For 3-connected g: each minimal cut R of g is the restriction of exactly
/// one minimal cut of G^∇, that cut equals extend_min_cut_to_auxiliary(R),
/// and every minimal cut of G^∇ induces a chordless cycle. The scan of G^∇
/// is bounded by `aux_bound` vertices.
OracleCheck check_auxiliary_extension(const Graph& g, const RotationSystem& rot, int bound = kDefaultOracleBound,
                                      int aux_bound = 20);

/// menger_paths agrees with min_vertex_separator for every non-adjacent
/// pair, and its paths are internally disjoint.
OracleCheck check_menger(const Graph& g, int bound = kDefaultOracleBound);

}  // namespace mdcut
