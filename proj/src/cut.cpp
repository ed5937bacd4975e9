#include "mdcut/cut.hpp"

#include <algorithm>
#include <string>

#include "mdcut/errors.hpp"

namespace mdcut {

CutReport verify_cut(const Graph& g, std::span<const VertexId> cut) {
  const int n = g.order();
  CutReport out;
  out.cut.assign(cut.begin(), cut.end());
  std::sort(out.cut.begin(), out.cut.end());
  for (std::size_t i = 0; i < out.cut.size(); ++i) {
    if (!g.contains(out.cut[i])) throw InputError("cut vertex " + std::to_string(out.cut[i]) + " outside 1.." + std::to_string(n));
    if (i > 0 && out.cut[i] == out.cut[i - 1]) throw InputError("cut repeats vertex " + std::to_string(out.cut[i]));
  }

  const Components side = components(g, out.cut);
  out.side_components = side.classes;
  const auto inner = induced_subgraph(g, out.cut);
  for (auto cls : components(inner.graph).classes) {
    for (VertexId& v : cls) v = inner.to_parent[static_cast<std::size_t>(v - 1)];
    out.cut_components.push_back(std::move(cls));
  }
  out.is_cut = side.count() >= 2;
  out.disconnected = out.cut_components.size() >= 2;

  // Every cut vertex needs a neighbor in each of the k side components, so a
  // minimal cut has k·|S| <= Σ deg; beyond that the answer is already "no".
  const std::size_t k = side.count();
  std::size_t degree_sum = 0;
  for (VertexId v : out.cut) degree_sum += static_cast<std::size_t>(g.degree(v));
  if (!out.is_cut || k * out.cut.size() > degree_sum) return out;

  bool minimal = true;
  out.witnesses.reserve(out.cut.size());
  for (VertexId v : out.cut) {
    MinimalityWitness w{v, VertexList(k, 0)};
    for (VertexId u : g.neighbors(v)) {
      const int c = side.label[static_cast<std::size_t>(u)];
      if (c >= 0 && w.neighbor[static_cast<std::size_t>(c)] == 0) w.neighbor[static_cast<std::size_t>(c)] = u;
    }
    if (std::find(w.neighbor.begin(), w.neighbor.end(), 0) != w.neighbor.end()) minimal = false;
    out.witnesses.push_back(std::move(w));
  }
  out.minimal = minimal;
  return out;
}

VertexList neighborhood_cut(const Graph& g, VertexId u) {
  if (!g.contains(u)) throw InputError("vertex " + std::to_string(u) + " not in graph");
  VertexList out(g.neighbors(u).begin(), g.neighbors(u).end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexId> face_intersection(int n, const std::vector<VertexList>& faces) {
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (VertexId v : faces[f]) {
      if (v < 1 || v > n) throw InputError("face vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      auto& mark = seen[static_cast<std::size_t>(v)];
      if (mark >= 0 && mark != static_cast<int>(f)) return v;
      mark = static_cast<int>(f);
    }
  }
  return std::nullopt;
}

VertexList extend_min_cut_to_auxiliary(const Graph& g, const AuxiliaryGraph& aux, std::span<const VertexId> cut) {
  if (aux.base_order != g.order()) throw InputError("auxiliary graph does not belong to this graph");
  const CutReport report = verify_cut(g, cut);
  if (!report.minimal) throw InputError("not a minimal cut");
  const IndexArray in_cut = subset_array(report.cut, g.order());

  VertexList out = report.cut;
  for (int f = 0; f < aux.face_count(); ++f) {
    const VertexList& w = aux.faces[static_cast<std::size_t>(f)];
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (in_cut[w[i]] == 1) hits.push_back(i);
    }
    if (hits.size() != 2) continue;
    const bool adjacent_in_w = hits[1] == hits[0] + 1 || (hits[0] == 0 && hits[1] + 1 == w.size());
    if (!adjacent_in_w) out.push_back(aux.apex(f));
  }
  if (!induces_cycle(aux.graph, out)) {
    throw ContractViolation("extension of the cut does not induce a chordless cycle of G^∇");
  }
  return out;
}

const char* to_string(CutBranch b) {
  switch (b) {
    case CutBranch::near_triangulation: return "near-triangulation";
    case CutBranch::shared_vertex: return "shared-vertex";
    case CutBranch::menger: return "menger";
  }
  return "?";
}

namespace {

// Chordlessness and ζ of a cycle of G^∇ when the faces are pairwise
// disjoint, without materializing G^∇. Apex of face f is n + 1 + f.
struct CycleCheck {
  bool cycle = true;
  bool chordless = true;
  int zeta = 0;
};

CycleCheck check_cycle(const Graph& g, const std::vector<VertexList>& faces, std::span<const VertexId> d) {
  const int n = g.order();
  const int total = n + static_cast<int>(faces.size());
  CycleCheck out;
  std::vector<int> face_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (VertexId v : faces[f]) face_of[static_cast<std::size_t>(v)] = static_cast<int>(f);
  }
  std::vector<int> pos(static_cast<std::size_t>(total) + 1, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const VertexId v = d[i];
    if (v < 1 || v > total || pos[static_cast<std::size_t>(v)] != 0) {
      out.cycle = false;
      return out;
    }
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
  }
  auto on_d = [&](VertexId v) { return pos[static_cast<std::size_t>(v)] > 0; };
  auto adjacent = [&](VertexId u, VertexId v) {
    if (u > n && v > n) return false;
    if (u > n) return face_of[static_cast<std::size_t>(v)] == u - n - 1;
    if (v > n) return face_of[static_cast<std::size_t>(u)] == v - n - 1;
    return g.adjacent(u, v);
  };
  if (d.size() < 3) out.cycle = false;
  for (std::size_t i = 0; i < d.size() && out.cycle; ++i) {
    if (!adjacent(d[i], d[(i + 1) % d.size()])) out.cycle = false;
  }
  if (!out.cycle) return out;

  for (VertexId v : d) {
    if (v > n) continue;
    int on = 0;
    for (VertexId w : g.neighbors(v)) on += on_d(w) ? 1 : 0;
    const int f = face_of[static_cast<std::size_t>(v)];
    if (f >= 0 && on_d(n + 1 + f)) ++on;
    if (on != 2) out.chordless = false;
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const VertexList& w = faces[f];
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (on_d(w[i])) hits.push_back(i);
    }
    const bool apex_on = on_d(n + 1 + static_cast<int>(f));
    if (apex_on && hits.size() != 2) out.chordless = false;
    if (apex_on && hits.size() == 2) continue;  // covers
    const bool far_pair =
        hits.size() == 2 && !(hits[1] == hits[0] + 1 || (hits[0] == 0 && hits[1] + 1 == w.size()));
    if (hits.size() >= 3 || far_pair) ++out.zeta;
  }
  return out;
}

// Skipper vertices with the apex of the face inserted at every shortcut step.
VertexList expand(const Skipper& s, int n) {
  VertexList out;
  out.reserve(s.vertices.size() + s.shortcuts.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    out.push_back(s.vertices[i]);
    if (next < s.shortcuts.size() && s.shortcuts[next].first == i) {
      out.push_back(n + 1 + s.shortcuts[next].second);
      ++next;
    }
  }
  return out;
}

}  // namespace

MinDiscCutResult find_min_disc_cut(const Graph& g, const MinDiscCutOptions& options) {
  const int n = g.order();
  MinDiscCutResult res;

  std::optional<RotationSystem> computed;
  const RotationSystem* rot = options.rotation;
  if (rot == nullptr) {
    try {
      computed = embed(g);
    } catch (const InputError& e) {
      throw ContractViolation(e.what());
    }
    if (!computed) throw ContractViolation("graph is not planar");
    rot = &*computed;
  }
  if (options.validate) {
    const auto check = validate_embedding(g, *rot);
    if (!check.ok()) throw ContractViolation("invalid embedding: " + check.reason);
    if (!is_k_connected(g, 4)) throw ContractViolation("graph is not 4-connected");
  }

  FaceCatalog omega;
  try {
    omega = list_large_faces(g, *rot);
  } catch (const InputError& e) {
    throw ContractViolation(e.what());
  }
  res.large_faces = omega.size();
  if (omega.size() < 2) return res;

  if (const auto meet = face_intersection(n, omega.faces)) {
    res.branch = CutBranch::shared_vertex;
    res.meet = *meet;
    res.cut = neighborhood_cut(g, *meet);
  } else {
    res.branch = CutBranch::menger;
    const VertexList& w1 = omega.faces[0];
    const VertexList& w2 = omega.faces[1];

    const VertexId s = n + 1;
    const VertexId t = n + 2;
    const Graph extended = g.with_vertices({VertexList(w1.begin(), w1.begin() + 4), VertexList(w2.begin(), w2.begin() + 4)});
    const PathBundle bundle = menger_paths(extended, s, t, 4);
    if (bundle.kappa() < 4) {
      throw ContractViolation("only " + std::to_string(bundle.kappa()) +
                              " disjoint paths between the first two large faces; graph is not 4-connected");
    }

    const IndexArray on_w1 = subset_array(w1, n);
    const IndexArray on_w2 = subset_array(w2, n);
    for (const Path& p : bundle.paths) {
      const std::span<const VertexId> inner(p.data() + 1, p.size() - 2);
      Path r = remove_chords(g, truncate_path(w1, w2, inner, n));
      for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (on_w1[r[i]] == 1 || on_w2[r[i]] == 1) throw ContractViolation("chord removal re-entered a face");
      }
      res.paths.push_back(std::move(r));
    }
    const IndexArray w1_pos = lookup_array(w1, n);
    std::sort(res.paths.begin(), res.paths.end(),
              [&](const Path& a, const Path& b) { return w1_pos[a.front()] < w1_pos[b.front()]; });

    res.first_skipper = path_skipper(g, res.paths[0], omega.faces);
    res.third_skipper = path_skipper(g, res.paths[2], omega.faces);
    const VertexId apex1 = n + 1;
    const VertexId apex2 = n + 2;
    VertexList d{apex1};
    const VertexList e1 = expand(res.first_skipper, n);
    const VertexList e3 = expand(res.third_skipper, n);
    d.insert(d.end(), e1.begin(), e1.end());
    d.push_back(apex2);
    d.insert(d.end(), e3.rbegin(), e3.rend());

    const CycleCheck check = check_cycle(g, omega.faces, d);
    if (!check.cycle || !check.chordless || check.zeta != 0) {
      res.log.push_back("skipper cycle " + std::string(!check.cycle ? "is not a cycle"
                                                       : !check.chordless ? "has a chord"
                                                                          : "is crossed by " + std::to_string(check.zeta) + " faces") +
                        "; running crossing removal");
      const AuxiliaryGraph aux = build_auxiliary(g, *rot, omega);
      VertexList c{apex1};
      c.insert(c.end(), res.paths[0].begin(), res.paths[0].end());
      c.push_back(apex2);
      c.insert(c.end(), res.paths[2].rbegin(), res.paths[2].rend());
      const CrossingRemoval removal = remove_crossings(aux, c, apex1, apex2);
      d = removal.cycle;
      const CycleCheck again = check_cycle(g, omega.faces, d);
      if (!again.cycle || !again.chordless || again.zeta != 0) {
        throw ContractViolation("crossing removal left a chord or a crossing face");
      }
      res.repaired = true;
      res.log.push_back("crossing removal finished after " + std::to_string(removal.rounds) + " rounds");
    }
    VertexList cut;
    for (VertexId v : d) {
      if (v <= n) cut.push_back(v);
    }
    std::sort(cut.begin(), cut.end());
    res.aux_cycle = std::move(d);
    res.cut = std::move(cut);
  }

  if (options.self_verify) {
    const CutReport report = verify_cut(g, *res.cut);
    if (!report.minimal || !report.disconnected) {
      throw ContractViolation(std::string("self-check failed: cut is ") +
                              (report.minimal ? "connected" : "not minimal"));
    }
  }
  return res;
}

std::optional<VertexList> min_disc_cut(const Graph& g, const RotationSystem* rot) {
  MinDiscCutOptions options;
  options.rotation = rot;
  return find_min_disc_cut(g, options).cut;
}

}  // namespace mdcut
