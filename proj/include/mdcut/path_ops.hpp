#pragma once

// Path surgery used by the cut search: truncation between two vertex sets,
// greedy chord removal, and shortcutting across large faces.

#include <span>
#include <vector>

#include "mdcut/connectivity.hpp"
#include "mdcut/graph.hpp"

namespace mdcut {

/// The last A-vertex before the first B-vertex of P, through that B-vertex.
///
/// The result is a contiguous slice of P that starts in A, ends in B and has
/// no internal vertex in A ∪ B. Throws InputError if A and B meet, if P does
/// not start in A, or if P never reaches B.
Path truncate_path(std::span<const VertexId> a, std::span<const VertexId> b, std::span<const VertexId> path,
                   int n);

/// Greedy furthest-jump subsequence of P from p_1 to p_k.
///
/// From the current vertex, step to the neighbor with the largest position
/// on P. Undirected edges and overlay arcs are both followed forward only.
/// Throws ContractViolation if some vertex has no neighbor further along P.
Path remove_chords(const Graph& g, std::span<const VertexId> path);
Path remove_chords(const ArcOverlay& h, std::span<const VertexId> path);

/// PathSkipper output.
struct Skipper {
  VertexList vertices;
  /// (position in `vertices`, face index) for each step that can only be
  /// made through the face's shortcut arc, i.e. vertices[pos] and
  /// vertices[pos + 1] are not adjacent in G.
  std::vector<std::pair<std::size_t, int>> shortcuts;
};

/// For each face meeting P in two or more vertices, adds the arc from the
/// first to the last of them (a one-vertex meeting adds nothing), then runs
/// remove_chords on the extended graph. Throws InputError if two faces of
/// Ω share a vertex.
Skipper path_skipper(const Graph& g, std::span<const VertexId> path, const std::vector<VertexList>& faces);

/// Vertices p_y of P such that some face contains p_x, p_y, p_z with x < y < z.
VertexList middle_vertices(std::span<const VertexId> path, const std::vector<VertexList>& faces, int n);

}  // namespace mdcut
