#include "mdcut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "mdcut/auxiliary.hpp"
#include "mdcut/connectivity.hpp"
#include "mdcut/cut.hpp"
#include "mdcut/dcel.hpp"
#include "mdcut/errors.hpp"

namespace mdcut {

namespace {

using Mask = std::uint32_t;

// Vertex v is bit v - 1.
struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;
};

BitGraph to_bits(const Graph& g, int bound) {
  const int limit = std::min(bound, kOracleCeiling);
  if (g.order() > limit) {
    throw InputError("oracle refuses n = " + std::to_string(g.order()) + " above bound " + std::to_string(limit));
  }
  BitGraph b;
  b.n = g.order();
  b.adj.assign(static_cast<std::size_t>(b.n), 0);
  for (VertexId v = 1; v <= b.n; ++v) {
    for (VertexId w : g.neighbors(v)) b.adj[static_cast<std::size_t>(v - 1)] |= Mask{1} << (w - 1);
  }
  return b;
}

Mask full_mask(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<Mask> split(const BitGraph& b, Mask within) {
  std::vector<Mask> out;
  while (within != 0) {
    Mask comp = within & (~within + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask grow = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) grow |= b.adj[static_cast<std::size_t>(std::countr_zero(f))];
      grow &= within & ~comp;
      comp |= grow;
      frontier = grow;
    }
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

VertexList to_list(Mask m) {
  VertexList out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string format(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (VertexId v : to_list(m)) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

struct RawCut {
  Mask set = 0;
  int sides = 0;
};

std::vector<RawCut> scan_minimal_cuts(const BitGraph& b) {
  std::vector<RawCut> out;
  const Mask full = full_mask(b.n);
  if (b.n < 3) return out;
  for (Mask s = 1; s < full; ++s) {
    const auto sides = split(b, full & ~s);
    if (sides.size() < 2) continue;
    bool minimal = true;
    for (Mask m = s; m != 0 && minimal; m &= m - 1) {
      const Mask nb = b.adj[static_cast<std::size_t>(std::countr_zero(m))];
      for (Mask c : sides) {
        if ((nb & c) == 0) {
          minimal = false;
          break;
        }
      }
    }
    if (minimal) out.push_back({s, static_cast<int>(sides.size())});
  }
  return out;
}

Mask face_mask(const VertexList& face) {
  Mask m = 0;
  for (VertexId v : face) m |= Mask{1} << (v - 1);
  return m;
}

OracleCheck finish(OracleCheck c) {
  c.passed = c.failures.empty();
  return c;
}

}  // namespace

bool MinimalCutInventory::has_disconnected() const {
  return std::any_of(cuts.begin(), cuts.end(), [](const MinimalCutEntry& e) { return e.cut_components >= 2; });
}

MinimalCutInventory enumerate_minimal_cuts(const Graph& g, int bound) {
  const BitGraph b = to_bits(g, bound);
  MinimalCutInventory out;
  for (const RawCut& raw : scan_minimal_cuts(b)) {
    MinimalCutEntry e;
    e.vertices = to_list(raw.set);
    e.side_components = raw.sides;
    e.cut_components = static_cast<int>(split(b, raw.set).size());
    e.stable = true;
    for (Mask m = raw.set; m != 0; m &= m - 1) {
      if ((b.adj[static_cast<std::size_t>(std::countr_zero(m))] & raw.set) != 0) e.stable = false;
    }
    out.cuts.push_back(std::move(e));
  }
  std::sort(out.cuts.begin(), out.cuts.end(),
            [](const MinimalCutEntry& x, const MinimalCutEntry& y) { return x.vertices < y.vertices; });
  return out;
}

bool is_cleavable(const Graph& g, int bound) { return !enumerate_minimal_cuts(g, bound).has_disconnected(); }

int min_vertex_separator(const Graph& g, VertexId s, VertexId t, int bound) {
  if (!g.contains(s) || !g.contains(t) || s == t) throw InputError("min_vertex_separator: bad endpoints");
  const BitGraph b = to_bits(g, bound);
  if (g.adjacent(s, t)) return -1;
  const Mask full = full_mask(b.n);
  const Mask sb = Mask{1} << (s - 1);
  const Mask tb = Mask{1} << (t - 1);
  const Mask candidates = full & ~sb & ~tb;
  auto reaches = [&](Mask removed) {
    const Mask alive = full & ~removed;
    Mask seen = sb;
    Mask frontier = sb;
    while (frontier != 0) {
      Mask grow = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) grow |= b.adj[static_cast<std::size_t>(std::countr_zero(f))];
      grow &= alive & ~seen;
      seen |= grow;
      frontier = grow;
    }
    return (seen & tb) != 0;
  };
  int best = std::popcount(candidates);
  for (Mask sub = candidates;; sub = (sub - 1) & candidates) {
    const int size = std::popcount(sub);
    if (size < best && !reaches(sub)) best = size;
    if (sub == 0) break;
  }
  return best;
}

OracleCheck check_near_triangulation_cut_shapes(const Graph& g, const RotationSystem& rot, int bound) {
  OracleCheck c;
  c.name = "shapes";
  const FaceCatalog omega = list_large_faces(Dcel(g, rot));
  if (omega.size() > 1) throw InputError("not a near-triangulation: " + std::to_string(omega.size()) + " large faces");
  const BitGraph b = to_bits(g, bound);
  const Mask w = omega.empty() ? 0 : face_mask(omega.faces[0]);

  for (const RawCut& raw : scan_minimal_cuts(b)) {
    const Mask s = raw.set;
    const bool connected = split(b, s).size() == 1;
    int deg1 = 0;
    int deg2 = 0;
    Mask ends = 0;
    for (Mask m = s; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = std::popcount(b.adj[static_cast<std::size_t>(v)] & s);
      if (d == 1) {
        ++deg1;
        ends |= Mask{1} << v;
      }
      if (d == 2) ++deg2;
    }
    const int size = std::popcount(s);
    const bool cycle = connected && size >= 3 && deg2 == size;
    const bool path = connected && ((size == 1) || (deg1 == 2 && deg1 + deg2 == size));
    if (size == 1) ends = s;
    if (cycle) {
      const Mask on_face = s & w;
      const int hits = std::popcount(on_face);
      bool ok = hits <= 1;
      if (hits == 2) {
        const int x = std::countr_zero(on_face);
        ok = (b.adj[static_cast<std::size_t>(x)] & on_face) != 0;
      }
      if (!ok) c.failures.push_back("cycle cut " + format(s) + " meets the large face in " + format(on_face));
    } else if (path) {
      if ((s & w) != ends) {
        c.failures.push_back("path cut " + format(s) + " meets the large face in " + format(s & w) +
                             ", ends " + format(ends));
      }
    } else {
      c.failures.push_back("cut " + format(s) + " is neither a chordless cycle nor a path");
    }
  }
  return finish(c);
}

OracleCheck check_component_bound(const Graph& g, const RotationSystem& rot, int bound) {
  OracleCheck c;
  c.name = "bound";
  FaceCatalog omega;
  try {
    omega = list_large_faces(Dcel(g, rot));
  } catch (const InputError& e) {
    c.applicable = false;
    c.note = e.what();
    return c;
  }
  const int limit = std::max<int>(static_cast<int>(omega.size()), 1);
  for (const auto& e : enumerate_minimal_cuts(g, bound).cuts) {
    if (e.cut_components > limit) {
      std::ostringstream os;
      os << "cut with " << e.cut_components << " components exceeds " << limit << ':';
      for (VertexId v : e.vertices) os << ' ' << v;
      c.failures.push_back(os.str());
    }
  }
  c.note = "k = " + std::to_string(omega.size());
  return finish(c);
}

OracleCheck check_no_stable_cut(const Graph& g, const RotationSystem& rot, int bound) {
  OracleCheck c;
  c.name = "stable";
  if (!is_k_connected(g, 3)) {
    c.applicable = false;
    c.note = "graph is not 3-connected";
    return c;
  }
  const FaceCatalog omega = list_large_faces(Dcel(g, rot));
  if (face_intersection(g.order(), omega.faces)) {
    c.applicable = false;
    c.note = "two large faces intersect";
    return c;
  }
  for (const auto& e : enumerate_minimal_cuts(g, bound).cuts) {
    if (e.stable) {
      std::ostringstream os;
      os << "stable minimal cut:";
      for (VertexId v : e.vertices) os << ' ' << v;
      c.failures.push_back(os.str());
    }
  }
  return finish(c);
}

OracleCheck check_cleavable(const Graph& g, int bound) {
  OracleCheck c;
  c.name = "cleavable";
  const auto inv = enumerate_minimal_cuts(g, bound);
  c.note = inv.has_disconnected() ? "not cleavable" : "cleavable";
  return finish(c);
}

OracleCheck check_auxiliary_extension(const Graph& g, const RotationSystem& rot, int bound, int aux_bound) {
  OracleCheck c;
  c.name = "extension";
  if (!is_k_connected(g, 3)) {
    c.applicable = false;
    c.note = "graph is not 3-connected";
    return c;
  }
  const AuxiliaryGraph aux = build_auxiliary(g, rot);
  if (aux.graph.order() > std::min(aux_bound, kOracleCeiling)) {
    c.applicable = false;
    c.note = "G^∇ has " + std::to_string(aux.graph.order()) + " vertices, above bound";
    return c;
  }
  const BitGraph base = to_bits(g, bound);
  const BitGraph big = to_bits(aux.graph, aux_bound);
  const Mask base_full = full_mask(base.n);

  std::map<Mask, std::vector<Mask>> by_restriction;
  for (const RawCut& raw : scan_minimal_cuts(big)) {
    by_restriction[raw.set & base_full].push_back(raw.set);
    if (!induces_cycle(aux.graph, to_list(raw.set))) {
      c.failures.push_back("minimal cut of G^∇ " + format(raw.set) + " is not a chordless cycle");
    }
  }
  for (const RawCut& raw : scan_minimal_cuts(base)) {
    const auto it = by_restriction.find(raw.set);
    const std::size_t count = it == by_restriction.end() ? 0 : it->second.size();
    if (count != 1) {
      c.failures.push_back("cut " + format(raw.set) + " has " + std::to_string(count) + " extensions");
      continue;
    }
    VertexList expected = to_list(it->second.front());
    VertexList got;
    try {
      got = extend_min_cut_to_auxiliary(g, aux, to_list(raw.set));
    } catch (const std::exception& e) {
      c.failures.push_back("cut " + format(raw.set) + ": extension failed: " + e.what());
      continue;
    }
    std::sort(got.begin(), got.end());
    if (got != expected) {
      Mask m = 0;
      for (VertexId v : got) m |= Mask{1} << (v - 1);
      c.failures.push_back("cut " + format(raw.set) + ": extension " + format(m) + " differs from oracle " +
                           format(it->second.front()));
    }
  }
  return finish(c);
}

OracleCheck check_menger(const Graph& g, int bound) {
  OracleCheck c;
  c.name = "menger";
  to_bits(g, bound);
  for (VertexId s = 1; s <= g.order(); ++s) {
    for (VertexId t = s + 1; t <= g.order(); ++t) {
      if (g.adjacent(s, t)) continue;
      const PathBundle bundle = menger_paths(g, s, t);
      const int brute = min_vertex_separator(g, s, t, bound);
      if (bundle.kappa() != brute) {
        c.failures.push_back("pair " + std::to_string(s) + "," + std::to_string(t) + ": " +
                             std::to_string(bundle.kappa()) + " paths, separator " + std::to_string(brute));
      }
      if (!paths_internally_disjoint(g, bundle)) {
        c.failures.push_back("pair " + std::to_string(s) + "," + std::to_string(t) + ": paths not disjoint");
      }
    }
  }
  return finish(c);
}

}  // namespace mdcut
