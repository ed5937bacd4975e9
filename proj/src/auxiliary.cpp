#include "mdcut/auxiliary.hpp"

#include <algorithm>
#include <string>

#include "mdcut/errors.hpp"

namespace mdcut {

AuxiliaryGraph build_auxiliary(const Graph& g, const RotationSystem& rot, const FaceCatalog& omega) {
  const Dcel dcel(g, rot);
  const int n = g.order();
  if (omega.ids.size() != omega.faces.size()) throw InputError("face catalog lacks face ids");

  std::vector<int> apex_of_face(dcel.face_count(), -1);
  std::size_t large = 0;
  for (FaceId f = 0; f < static_cast<FaceId>(dcel.face_count()); ++f) {
    if (dcel.face_length(f) >= 4) ++large;
  }
  if (large != omega.size()) {
    throw InputError("face catalog lists " + std::to_string(omega.size()) + " faces, embedding has " +
                     std::to_string(large) + " large faces");
  }
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const FaceId f = omega.ids[i];
    if (f < 0 || static_cast<std::size_t>(f) >= dcel.face_count() || dcel.face_length(f) < 4) {
      throw InputError("face catalog entry " + std::to_string(i) + " is not a large face");
    }
    if (apex_of_face[static_cast<std::size_t>(f)] >= 0) throw InputError("face listed twice");
    if (dcel.face_boundary(f) != omega.faces[i]) {
      throw InputError("face catalog entry " + std::to_string(i) + " disagrees with the embedding");
    }
    apex_of_face[static_cast<std::size_t>(f)] = n + 1 + static_cast<int>(i);
  }

  std::vector<VertexList> order(static_cast<std::size_t>(n) + omega.size());
  for (VertexId v = 1; v <= n; ++v) {
    auto& out = order[static_cast<std::size_t>(v - 1)];
    const auto around = rot.around(v);
    out.reserve(around.size() + 2);
    for (std::size_t j = 0; j < around.size(); ++j) {
      out.push_back(around[j]);
      // The corner after slot j lies in the face of the reversed edge.
      const auto h = static_cast<HalfEdge>(rot.offset(v) + j);
      const int apex = apex_of_face[static_cast<std::size_t>(dcel.face(dcel.twin(h)))];
      if (apex > 0) out.push_back(apex);
    }
  }
  for (std::size_t i = 0; i < omega.size(); ++i) {
    VertexList fan(omega.faces[i].rbegin(), omega.faces[i].rend());
    order[static_cast<std::size_t>(n) + i] = std::move(fan);
  }

  AuxiliaryGraph aux;
  aux.rotation = RotationSystem(order);
  try {
    aux.graph = graph_of(aux.rotation);
  } catch (const InputError& e) {
    throw InputError(std::string("auxiliary graph is not simple: ") + e.what());
  }
  aux.base_order = n;
  aux.faces = omega.faces;
  return aux;
}

AuxiliaryGraph build_auxiliary(const Graph& g, const RotationSystem& rot) {
  return build_auxiliary(g, rot, list_large_faces(Dcel(g, rot)));
}

const char* to_string(FaceCycleRelation r) {
  switch (r) {
    case FaceCycleRelation::touches: return "touches";
    case FaceCycleRelation::inside: return "inside";
    case FaceCycleRelation::outside: return "outside";
    case FaceCycleRelation::covers: return "covers";
    case FaceCycleRelation::crosses: return "crosses";
  }
  return "?";
}

namespace {

IndexArray cycle_positions(const AuxiliaryGraph& aux, std::span<const VertexId> cycle) {
  const Graph& h = aux.graph;
  if (cycle.size() < 3) throw InputError("a cycle needs at least 3 vertices");
  for (VertexId v : cycle) {
    if (!h.contains(v)) throw InputError("cycle vertex " + std::to_string(v) + " not in G^∇");
  }
  IndexArray pos = lookup_array(cycle, h.order());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (pos[cycle[i]] != static_cast<int>(i) + 1) {
      throw InputError("cycle repeats vertex " + std::to_string(cycle[i]));
    }
    const VertexId next = cycle[(i + 1) % cycle.size()];
    if (!h.adjacent(cycle[i], next)) {
      throw InputError("cycle step " + std::to_string(cycle[i]) + "-" + std::to_string(next) + " is not an edge");
    }
  }
  return pos;
}

// 1 for vertices of G^∇ - C on the Int side, 0 otherwise.
std::vector<char> inside_region(const AuxiliaryGraph& aux, std::span<const VertexId> cycle, const IndexArray& pos) {
  const Graph& h = aux.graph;
  const std::size_t len = cycle.size();
  std::vector<char> inside(static_cast<std::size_t>(h.order()) + 1, 0);
  VertexList queue;
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId c = cycle[i];
    const VertexId p = cycle[(i + len - 1) % len];
    const VertexId q = cycle[(i + 1) % len];
    const auto around = aux.rotation.around(c);
    const std::size_t deg = around.size();
    const auto start = static_cast<std::size_t>(std::find(around.begin(), around.end(), q) - around.begin());
    for (std::size_t k = 1; k < deg; ++k) {
      const VertexId w = around[(start + k) % deg];
      if (w == p) break;
      if (pos[w] == 0 && !inside[static_cast<std::size_t>(w)]) {
        inside[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (VertexId w : h.neighbors(queue[head])) {
      if (pos[w] == 0 && !inside[static_cast<std::size_t>(w)]) {
        inside[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return inside;
}

bool cyclic_neighbors(std::size_t i, std::size_t j, std::size_t len) {
  return (i + 1) % len == j || (j + 1) % len == i;
}

}  // namespace

std::vector<FaceCycleRelation> classify_faces(const AuxiliaryGraph& aux, std::span<const VertexId> cycle) {
  const IndexArray pos = cycle_positions(aux, cycle);
  const std::vector<char> inside = inside_region(aux, cycle, pos);
  const std::size_t len = cycle.size();

  std::vector<FaceCycleRelation> out;
  out.reserve(aux.faces.size());
  for (int f = 0; f < aux.face_count(); ++f) {
    const VertexList& w = aux.faces[static_cast<std::size_t>(f)];
    std::vector<std::size_t> hits;  // indices into W of vertices on C
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (pos[w[i]] > 0) hits.push_back(i);
    }
    const int apex_pos = pos[aux.apex(f)];

    if (apex_pos > 0 && hits.size() == 2) {
      const auto a = static_cast<std::size_t>(apex_pos - 1);
      const VertexId before = cycle[(a + len - 1) % len];
      const VertexId after = cycle[(a + 1) % len];
      const VertexId x = w[hits[0]];
      const VertexId y = w[hits[1]];
      if ((before == x && after == y) || (before == y && after == x)) {
        out.push_back(FaceCycleRelation::covers);
        continue;
      }
    }
    if (hits.size() >= 3 || (hits.size() == 2 && !cyclic_neighbors(hits[0], hits[1], w.size()))) {
      out.push_back(FaceCycleRelation::crosses);
      continue;
    }
    if (hits.size() == 1) {
      out.push_back(FaceCycleRelation::touches);
      continue;
    }
    if (hits.size() == 2) {
      const auto i = static_cast<std::size_t>(pos[w[hits[0]]] - 1);
      const auto j = static_cast<std::size_t>(pos[w[hits[1]]] - 1);
      if (!cyclic_neighbors(i, j, len)) {
        throw InputError("face " + std::to_string(f) + " meets the cycle in a chord");
      }
      out.push_back(FaceCycleRelation::touches);
      continue;
    }
    if (apex_pos > 0) throw InputError("apex of face " + std::to_string(f) + " on the cycle without its face");
    out.push_back(inside[static_cast<std::size_t>(w.front())] ? FaceCycleRelation::inside
                                                               : FaceCycleRelation::outside);
  }
  return out;
}

FaceCycleRelation classify_face_vs_cycle(const AuxiliaryGraph& aux, int face, std::span<const VertexId> cycle) {
  if (face < 0 || face >= aux.face_count()) throw InputError("face index out of range");
  return classify_faces(aux, cycle)[static_cast<std::size_t>(face)];
}

bool splits(const AuxiliaryGraph& aux, int face, std::span<const VertexId> cycle, VertexId s, VertexId t) {
  if (face < 0 || face >= aux.face_count()) throw InputError("face index out of range");
  const IndexArray pos = cycle_positions(aux, cycle);
  const std::size_t len = cycle.size();
  if (pos[s] == 0 || pos[t] == 0) throw InputError("s and t must lie on the cycle");
  const auto ps = static_cast<std::size_t>(pos[s] - 1);
  const auto pt = static_cast<std::size_t>(pos[t] - 1);
  if (ps == pt || cyclic_neighbors(ps, pt, len)) throw InputError("s and t must be distinct and non-adjacent on C");
  const std::size_t span_t = (pt + len - ps) % len;
  bool first = false;
  bool second = false;
  for (VertexId v : aux.faces[static_cast<std::size_t>(face)]) {
    if (pos[v] == 0 || v == s || v == t) continue;
    const std::size_t off = (static_cast<std::size_t>(pos[v] - 1) + len - ps) % len;
    (off < span_t ? first : second) = true;
  }
  return first && second;
}

int zeta(const AuxiliaryGraph& aux, std::span<const VertexId> cycle) {
  const auto rel = classify_faces(aux, cycle);
  return static_cast<int>(std::count(rel.begin(), rel.end(), FaceCycleRelation::crosses));
}

CrossingRemoval remove_crossings(const AuxiliaryGraph& aux, std::span<const VertexId> cycle, VertexId s,
                                 VertexId t) {
  CrossingRemoval out;
  out.cycle.assign(cycle.begin(), cycle.end());
  for (;;) {
    const auto rel = classify_faces(aux, out.cycle);
    const auto it = std::find(rel.begin(), rel.end(), FaceCycleRelation::crosses);
    if (it == rel.end()) return out;
    const int f = static_cast<int>(it - rel.begin());
    if (++out.rounds > aux.face_count()) throw ContractViolation("crossing removal does not terminate");

    // Rotate so that s sits at index 0.
    const std::size_t len = out.cycle.size();
    const auto s_at = static_cast<std::size_t>(std::find(out.cycle.begin(), out.cycle.end(), s) - out.cycle.begin());
    const auto t_at = static_cast<std::size_t>(std::find(out.cycle.begin(), out.cycle.end(), t) - out.cycle.begin());
    if (s_at == len || t_at == len) throw InputError("s and t must lie on the cycle");
    if (splits(aux, f, out.cycle, s, t)) {
      throw ContractViolation("face " + std::to_string(f) + " splits s and t");
    }
    VertexList r(len);
    for (std::size_t i = 0; i < len; ++i) r[i] = out.cycle[(s_at + i) % len];
    std::size_t dt = (t_at + len - s_at) % len;

    IndexArray pos = lookup_array(r, aux.graph.order());
    const VertexList& w = aux.faces[static_cast<std::size_t>(f)];
    bool on_second_arc = false;
    for (VertexId v : w) {
      const int p = pos[v] - 1;
      if (p > 0 && static_cast<std::size_t>(p) > dt) on_second_arc = true;
    }
    if (on_second_arc) {
      std::reverse(r.begin() + 1, r.end());
      dt = len - dt;
      pos = lookup_array(r, aux.graph.order());
    }
    std::size_t x = len;
    std::size_t y = 0;
    for (VertexId v : w) {
      if (pos[v] == 0) continue;
      const auto p = static_cast<std::size_t>(pos[v] - 1);
      x = std::min(x, p);
      y = std::max(y, p);
    }
    VertexList next(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(x) + 1);
    next.push_back(aux.apex(f));
    next.insert(next.end(), r.begin() + static_cast<std::ptrdiff_t>(y), r.end());
    out.cycle = std::move(next);
  }
}

}  // namespace mdcut
