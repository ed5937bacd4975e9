#include "mdcut/dcel.hpp"

#include <string>

#include "mdcut/errors.hpp"

namespace mdcut {

namespace {

void check_euler(const Graph& g, std::size_t faces) {
  const long long components_count = static_cast<long long>(count_components(g));
  const long long euler =
      static_cast<long long>(g.order()) - static_cast<long long>(g.size()) + static_cast<long long>(faces);
  if (g.order() > 0 && euler != 1 + components_count) {
    throw EmbeddingError("rotation is not planar: V - E + F = " + std::to_string(euler) + ", expected " +
                         std::to_string(1 + components_count));
  }
}

}  // namespace

std::vector<HalfEdge> twin_slots(const Graph& g, const RotationSystem& rot) {
  const int n = g.order();
  if (rot.order() != n) throw EmbeddingError("rotation size does not match graph");
  const std::size_t slots = rot.slots();
  if (slots != 2 * g.size()) throw EmbeddingError("rotation does not list every edge twice");

  // Bucket half-edges by head, then resolve against the head's rotation.
  struct Incoming {
    HalfEdge slot;
    VertexId origin;
  };
  std::vector<std::size_t> in_offsets(static_cast<std::size_t>(n) + 2, 0);
  for (VertexId v = 1; v <= n; ++v) {
    if (rot.around(v).size() != static_cast<std::size_t>(g.degree(v))) {
      throw EmbeddingError("rotation at vertex " + std::to_string(v) + " does not match its degree");
    }
    for (VertexId w : rot.around(v)) {
      if (w < 1 || w > n) throw EmbeddingError("rotation entry out of range");
      ++in_offsets[static_cast<std::size_t>(w) + 1];
    }
  }
  for (std::size_t i = 1; i < in_offsets.size(); ++i) in_offsets[i] += in_offsets[i - 1];
  std::vector<Incoming> incoming(slots);
  {
    std::vector<std::size_t> fill(in_offsets.begin(), in_offsets.end() - 1);
    for (VertexId v = 1; v <= n; ++v) {
      for (std::size_t h = rot.offset(v); h < rot.offset(v + 1); ++h) {
        incoming[fill[static_cast<std::size_t>(rot.head(h))]++] = {static_cast<HalfEdge>(h), v};
      }
    }
  }
  std::vector<HalfEdge> twin(slots, -1);
  std::vector<VertexId> stamp(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 1; v <= n; ++v) {
    const auto around = rot.around(v);
    for (std::size_t i = 0; i < around.size(); ++i) {
      stamp[static_cast<std::size_t>(around[i])] = v;
      position[static_cast<std::size_t>(around[i])] = static_cast<int>(i);
    }
    for (auto i = in_offsets[static_cast<std::size_t>(v)]; i < in_offsets[static_cast<std::size_t>(v) + 1]; ++i) {
      const auto [h, u] = incoming[i];
      if (stamp[static_cast<std::size_t>(u)] != v) {
        throw EmbeddingError("rotation at vertex " + std::to_string(v) + " lacks neighbor " +
                             std::to_string(u));
      }
      twin[static_cast<std::size_t>(h)] =
          static_cast<HalfEdge>(rot.offset(v) + static_cast<std::size_t>(position[static_cast<std::size_t>(u)]));
    }
  }
  for (std::size_t h = 0; h < slots; ++h) {
    if (twin[static_cast<std::size_t>(twin[h])] != static_cast<HalfEdge>(h)) {
      throw EmbeddingError("rotation is not a permutation of the adjacency lists");
    }
  }
  return twin;
}

Dcel::Dcel(const Graph& g, const RotationSystem& rot) : n_(g.order()), twin_(twin_slots(g, rot)) {
  const auto n = static_cast<std::size_t>(n_);
  const std::size_t slots = rot.slots();
  offsets_.resize(n + 2);
  for (std::size_t v = 0; v <= n + 1; ++v) {
    offsets_[v] = v == 0 ? 0 : (v <= n ? rot.offset(static_cast<VertexId>(v)) : slots);
  }
  origin_.resize(slots);
  head_.resize(slots);
  for (VertexId v = 1; v <= n_; ++v) {
    for (std::size_t h = rot.offset(v); h < rot.offset(v + 1); ++h) {
      origin_[h] = v;
      head_[h] = rot.head(h);
    }
  }

  // next(u->v) = v->succ_v(u).
  next_.resize(slots);
  prev_.resize(slots);
  for (std::size_t h = 0; h < slots; ++h) {
    const auto t = static_cast<std::size_t>(twin_[h]);
    const VertexId v = head_[h];
    const std::size_t base = offsets_[static_cast<std::size_t>(v)];
    const std::size_t deg = offsets_[static_cast<std::size_t>(v) + 1] - base;
    const std::size_t nxt = base + (t - base + 1) % deg;
    next_[h] = static_cast<HalfEdge>(nxt);
    prev_[nxt] = static_cast<HalfEdge>(h);
  }

  face_.assign(slots, -1);
  for (std::size_t h0 = 0; h0 < slots; ++h0) {
    if (face_[h0] >= 0) continue;
    const auto f = static_cast<FaceId>(face_edge_.size());
    int len = 0;
    auto h = static_cast<HalfEdge>(h0);
    do {
      face_[static_cast<std::size_t>(h)] = f;
      ++len;
      h = next_[static_cast<std::size_t>(h)];
    } while (h != static_cast<HalfEdge>(h0));
    face_edge_.push_back(static_cast<HalfEdge>(h0));
    face_len_.push_back(len);
  }

  check_euler(g, face_edge_.size());
}

VertexList Dcel::face_boundary(FaceId f) const {
  VertexList out;
  out.reserve(static_cast<std::size_t>(face_length(f)));
  const HalfEdge start = face_edge(f);
  HalfEdge h = start;
  do {
    out.push_back(origin(h));
    h = next(h);
  } while (h != start);
  return out;
}

HalfEdge Dcel::find(VertexId u, VertexId v) const {
  for (std::size_t h = offsets_[static_cast<std::size_t>(u)]; h < offsets_[static_cast<std::size_t>(u) + 1]; ++h) {
    if (head_[h] == v) return static_cast<HalfEdge>(h);
  }
  return -1;
}

std::vector<VertexList> list_faces(const Dcel& dcel) {
  std::vector<VertexList> out;
  out.reserve(dcel.face_count());
  for (FaceId f = 0; f < static_cast<FaceId>(dcel.face_count()); ++f) out.push_back(dcel.face_boundary(f));
  return out;
}

FaceCatalog list_large_faces(const Dcel& dcel) {
  FaceCatalog out;
  std::vector<FaceId> stamp(static_cast<std::size_t>(dcel.vertex_count()) + 1, -1);
  for (FaceId f = 0; f < static_cast<FaceId>(dcel.face_count()); ++f) {
    const HalfEdge start = dcel.face_edge(f);
    HalfEdge h = start;
    do {
      const auto v = static_cast<std::size_t>(dcel.origin(h));
      if (stamp[v] == f) {
        throw InputError("face boundary repeats vertex " + std::to_string(v) +
                         "; graph is not 2-connected");
      }
      stamp[v] = f;
      h = dcel.next(h);
    } while (h != start);
    if (dcel.face_length(f) >= 4) {
      out.faces.push_back(dcel.face_boundary(f));
      out.ids.push_back(f);
    }
  }
  return out;
}

FaceCatalog list_large_faces(const Graph& g, const RotationSystem& rot) {
  const std::vector<HalfEdge> twin = twin_slots(g, rot);
  const std::size_t slots = twin.size();
  std::vector<char> seen(slots, 0);
  std::vector<FaceId> stamp(static_cast<std::size_t>(g.order()) + 1, -1);
  FaceCatalog out;
  VertexList walk;
  FaceId faces = 0;
  for (std::size_t h0 = 0; h0 < slots; ++h0) {
    if (seen[h0] != 0) continue;
    const FaceId f = faces++;
    walk.clear();
    auto h = h0;
    VertexId origin = rot.head(static_cast<std::size_t>(twin[h0]));
    do {
      seen[h] = 1;
      if (stamp[static_cast<std::size_t>(origin)] == f) {
        throw InputError("face boundary repeats vertex " + std::to_string(origin) +
                         "; graph is not 2-connected");
      }
      stamp[static_cast<std::size_t>(origin)] = f;
      walk.push_back(origin);
      origin = rot.head(h);
      const auto t = static_cast<std::size_t>(twin[h]);
      h = t + 1 == rot.offset(origin + 1) ? rot.offset(origin) : t + 1;
    } while (h != h0);
    if (walk.size() >= 4) {
      out.faces.push_back(walk);
      out.ids.push_back(f);
    }
  }
  check_euler(g, static_cast<std::size_t>(faces));
  return out;
}

}  // namespace mdcut
