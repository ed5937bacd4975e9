#pragma once

// The auxiliary triangulation G^∇ (one apex vertex inside every large face)
// and the relations between large faces and chordless cycles of G^∇.

#include <optional>
#include <span>
#include <vector>

#include "mdcut/dcel.hpp"
#include "mdcut/embedding.hpp"
#include "mdcut/graph.hpp"

namespace mdcut {

/// G^∇ on vertices 1..n+k; the apex of face i (0-based) is n + 1 + i.
struct AuxiliaryGraph {
  Graph graph;
  RotationSystem rotation;
  int base_order = 0;
  /// Ω in the order the apexes were numbered.
  std::vector<VertexList> faces;

  int face_count() const { return static_cast<int>(faces.size()); }
  VertexId apex(int face) const { return base_order + 1 + face; }
  bool is_apex(VertexId v) const { return v > base_order; }
  /// Face index of an apex, -1 for vertices of G.
  int face_of_apex(VertexId v) const { return is_apex(v) ? v - base_order - 1 : -1; }
};

/// Adds v_W inside each face W of Ω, joined to every vertex of W, with the
/// fan placed inside the face in the rotation. Throws InputError if Ω does
/// not list exactly the faces of length >= 4 of `rot`.
AuxiliaryGraph build_auxiliary(const Graph& g, const RotationSystem& rot, const FaceCatalog& omega);
AuxiliaryGraph build_auxiliary(const Graph& g, const RotationSystem& rot);

enum class FaceCycleRelation { touches, inside, outside, covers, crosses };

const char* to_string(FaceCycleRelation r);

/// Relation of every face of Ω to the cycle C of G^∇ (C given in cyclic
/// order). Int(C) is the side met when turning from c_{i+1} towards c_{i-1}
/// in the rotation at c_i; reversing C swaps inside and outside.
///
/// Throws InputError if C is not a cycle of G^∇, or if some face meets C in
/// a way that is only possible when C has a chord.
std::vector<FaceCycleRelation> classify_faces(const AuxiliaryGraph& aux, std::span<const VertexId> cycle);

FaceCycleRelation classify_face_vs_cycle(const AuxiliaryGraph& aux, int face, std::span<const VertexId> cycle);

/// True iff face W meets both open s-t arcs of C. Throws InputError if s or
/// t is not on C or they are consecutive on C.
bool splits(const AuxiliaryGraph& aux, int face, std::span<const VertexId> cycle, VertexId s, VertexId t);

/// ζ(C): the number of faces of Ω crossing C.
int zeta(const AuxiliaryGraph& aux, std::span<const VertexId> cycle);

/// Outcome of repeated crossing removal.
struct CrossingRemoval {
  VertexList cycle;
  int rounds = 0;
};

/// Repeatedly picks the first face crossing C, finds the s-t arc of C that
/// holds all of W ∩ C, and replaces the stretch from its first to its last
/// W-vertex by x, v_W, y. Stops when ζ = 0. Faces of Ω must be pairwise
/// disjoint. Throws ContractViolation if a crossing face splits s and t.
CrossingRemoval remove_crossings(const AuxiliaryGraph& aux, std::span<const VertexId> cycle, VertexId s,
                                 VertexId t);

}  // namespace mdcut
