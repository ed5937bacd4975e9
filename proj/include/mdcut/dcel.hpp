#pragma once

// Half-edge realization of a rotation system plus face enumeration.

#include <cstdint>
#include <vector>

#include "mdcut/embedding.hpp"
#include "mdcut/graph.hpp"

namespace mdcut {

using HalfEdge = std::int32_t;
using FaceId = std::int32_t;

/// Doubly connected edge list.
///
/// Half-edge h is rotation slot h, i.e. origin u and head around(u)[i] for
/// h = offset(u) + i. Faces follow next(u->v) = v->w where w follows u in the
/// rotation at v.
class Dcel {
 public:
  /// Throws EmbeddingError if the rotation is not a permutation of g's
  /// adjacency or the traced faces violate Euler's formula.
  Dcel(const Graph& g, const RotationSystem& rot);

  std::size_t half_edge_count() const { return head_.size(); }
  std::size_t face_count() const { return face_edge_.size(); }
  int vertex_count() const { return n_; }

  VertexId origin(HalfEdge h) const { return origin_[static_cast<std::size_t>(h)]; }
  VertexId head(HalfEdge h) const { return head_[static_cast<std::size_t>(h)]; }
  HalfEdge twin(HalfEdge h) const { return twin_[static_cast<std::size_t>(h)]; }
  HalfEdge next(HalfEdge h) const { return next_[static_cast<std::size_t>(h)]; }
  HalfEdge prev(HalfEdge h) const { return prev_[static_cast<std::size_t>(h)]; }
  FaceId face(HalfEdge h) const { return face_[static_cast<std::size_t>(h)]; }

  /// One half-edge on the boundary of f.
  HalfEdge face_edge(FaceId f) const { return face_edge_[static_cast<std::size_t>(f)]; }
  /// Number of half-edges on the boundary walk of f.
  int face_length(FaceId f) const { return face_len_[static_cast<std::size_t>(f)]; }
  /// Origins along the boundary walk of f, starting at face_edge(f).
  VertexList face_boundary(FaceId f) const;

  /// The half-edge u -> v, or -1 if uv is not an edge. O(deg u).
  HalfEdge find(VertexId u, VertexId v) const;

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> origin_;
  std::vector<VertexId> head_;
  std::vector<HalfEdge> twin_;
  std::vector<HalfEdge> next_;
  std::vector<HalfEdge> prev_;
  std::vector<FaceId> face_;
  std::vector<HalfEdge> face_edge_;
  std::vector<int> face_len_;
};

/// Ω = (W_1, ..., W_k): the faces of length >= 4 in face-discovery order,
/// each listed in boundary-walk order.
struct FaceCatalog {
  std::vector<VertexList> faces;
  /// DCEL face id of each listed face.
  std::vector<FaceId> ids;

  std::size_t size() const { return faces.size(); }
  bool empty() const { return faces.empty(); }
};

/// twin[h] is the slot of the reverse half-edge. Throws EmbeddingError if the
/// rotation is not a permutation of g's adjacency.
std::vector<HalfEdge> twin_slots(const Graph& g, const RotationSystem& rot);

/// Every face of the embedding, in face-id order.
std::vector<VertexList> list_faces(const Dcel& dcel);

/// Large faces of a 2-connected plane graph. Throws InputError if any face
/// boundary repeats a vertex (the graph is not 2-connected).
FaceCatalog list_large_faces(const Dcel& dcel);

/// Same catalog without building a Dcel; also checks Euler's formula.
FaceCatalog list_large_faces(const Graph& g, const RotationSystem& rot);

}  // namespace mdcut
