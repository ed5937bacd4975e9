#pragma once

// Internally disjoint s-t paths by unit-capacity augmenting paths on the
// vertex-split graph, and a vertex-connectivity test built on them.

#include <optional>
#include <vector>

#include "mdcut/graph.hpp"

namespace mdcut {

using Path = VertexList;

/// Pairwise internally disjoint s-t paths; each runs s ... t.
struct PathBundle {
  VertexId source = 0;
  VertexId sink = 0;
  std::vector<Path> paths;

  int kappa() const { return static_cast<int>(paths.size()); }
};

/// min(cap, κ(s, t)) internally disjoint s-t paths. When s and t are
/// adjacent the direct edge counts as one path. Each augmentation costs
/// O(n + m), so a constant cap gives linear time.
PathBundle menger_paths(const Graph& g, VertexId s, VertexId t, std::optional<int> cap = std::nullopt);

/// True iff n >= k + 1 and no fewer than k vertices disconnect g.
///
/// Any separator smaller than k misses one of the vertices 1..k, so it is
/// enough to check κ(v, w) >= k for v in 1..k and every w not adjacent to v.
bool is_k_connected(const Graph& g, int k);

/// True iff `bundle` is a set of simple s-t paths in g that share no
/// internal vertex.
bool paths_internally_disjoint(const Graph& g, const PathBundle& bundle);

}  // namespace mdcut
