#pragma once

// Brute-force reference routines for the tests. They work from the edge list
// and the definitions only, never through library helpers they are checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "mdcut/embedding.hpp"
#include "mdcut/generators.hpp"
#include "mdcut/graph.hpp"

namespace mdcut::testing {

using Mask = std::uint32_t;

inline bool in_mask(Mask m, VertexId v) { return ((m >> (v - 1)) & 1U) != 0; }

inline Mask mask_of(const VertexList& vs) {
  Mask m = 0;
  for (VertexId v : vs) m |= Mask{1} << (v - 1);
  return m;
}

inline VertexList list_of(Mask m, int n) {
  VertexList out;
  for (VertexId v = 1; v <= n; ++v) {
    if (in_mask(m, v)) out.push_back(v);
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

/// Number of components of G[keep] (0 for an empty set).
inline int components_in(const std::vector<Edge>& edges, int n, Mask keep) {
  UnionFind uf(n);
  for (const auto& [u, v] : edges) {
    if (in_mask(keep, u) && in_mask(keep, v)) uf.unite(u, v);
  }
  std::set<int> roots;
  for (VertexId v = 1; v <= n; ++v) {
    if (in_mask(keep, v)) roots.insert(uf.find(v));
  }
  return static_cast<int>(roots.size());
}

/// Same count for a vertex list, with no limit on n.
inline int components_in(const std::vector<Edge>& edges, int n, const VertexList& keep) {
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v : keep) in[static_cast<std::size_t>(v)] = 1;
  UnionFind uf(n);
  for (const auto& [u, v] : edges) {
    if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) uf.unite(u, v);
  }
  std::set<int> roots;
  for (VertexId v : keep) roots.insert(uf.find(v));
  return static_cast<int>(roots.size());
}

inline Mask all_vertices(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Minimal cuts straight from the definition: G - S is disconnected and
/// G - (S - v) is connected for every v in S.
inline std::vector<VertexList> minimal_cuts_by_definition(const Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  const Mask all = all_vertices(n);
  std::vector<VertexList> out;
  for (Mask s = 1; s < all; ++s) {
    if (components_in(edges, n, all & ~s) < 2) continue;
    bool minimal = true;
    for (VertexId v = 1; v <= n && minimal; ++v) {
      if (in_mask(s, v) && components_in(edges, n, all & ~(s & ~(Mask{1} << (v - 1)))) != 1) minimal = false;
    }
    if (minimal) out.push_back(list_of(s, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest vertex set avoiding s and t whose removal separates them.
inline int min_separator_by_subsets(const Graph& g, VertexId s, VertexId t) {
  const int n = g.order();
  const auto edges = g.edges();
  const Mask all = all_vertices(n);
  int best = n;
  for (Mask m = 0; m <= all; ++m) {
    if (in_mask(m, s) || in_mask(m, t)) continue;
    const int size = __builtin_popcount(m);
    if (size >= best) continue;
    UnionFind uf(n);
    for (const auto& [u, v] : edges) {
      if (!in_mask(m, u) && !in_mask(m, v)) uf.unite(u, v);
    }
    if (uf.find(s) != uf.find(t)) best = size;
    if (m == all) break;
  }
  return best;
}

/// Vertex connectivity by subsets (n itself when complete).
inline int connectivity_by_subsets(const Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  const Mask all = all_vertices(n);
  int best = n - 1;
  for (Mask m = 0; m < all; ++m) {
    const int size = __builtin_popcount(m);
    if (size >= best || n - size < 2) continue;
    if (components_in(edges, n, all & ~m) >= 2) best = size;
  }
  return best;
}

/// Faces traced from plain rotation lists: next(u -> v) = v -> w where w
/// follows u in the rotation at v.
inline std::vector<VertexList> trace_faces(const std::vector<VertexList>& rot) {
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<VertexList> faces;
  for (std::size_t i = 0; i < rot.size(); ++i) {
    const auto u0 = static_cast<VertexId>(i + 1);
    for (VertexId v0 : rot[i]) {
      if (used.count({u0, v0}) != 0) continue;
      VertexList face;
      VertexId u = u0;
      VertexId v = v0;
      while (used.insert({u, v}).second) {
        face.push_back(u);
        const auto& around = rot[static_cast<std::size_t>(v) - 1];
        const auto it = std::find(around.begin(), around.end(), u);
        const VertexId w = std::next(it) == around.end() ? around.front() : *std::next(it);
        u = v;
        v = w;
      }
      faces.push_back(face);
    }
  }
  return faces;
}

inline std::vector<VertexList> large_faces_of(const PlaneGraph& p) {
  std::vector<VertexList> out;
  for (auto& f : trace_faces(p.rotation.to_lists())) {
    if (f.size() >= 4) out.push_back(f);
  }
  return out;
}

/// Cyclic rotation and reflection invariant form of a face boundary.
inline VertexList canonical_cycle(VertexList c) {
  VertexList best = c;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::rotate(c.begin(), c.begin() + 1, c.end());
      best = std::min(best, c);
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cube_graph() {
  std::vector<Edge> edges;
  for (int a = 0; a < 8; ++a) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if (a < (a ^ bit)) edges.emplace_back(a + 1, (a ^ bit) + 1);
    }
  }
  return Graph::from_edges(8, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

/// G(n, p) on vertices 1..n.
inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (static_cast<double>(rng.below(1U << 20)) < p * static_cast<double>(1U << 20)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace mdcut::testing
