#pragma once

// Combinatorial planar embeddings (rotation systems): computing one for a
// planar graph and checking a supplied one.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdcut/graph.hpp"

namespace mdcut {

/// Per-vertex cyclic (clockwise) order of neighbors.
///
/// Stored flat: slot `offset(v) + i` is the directed edge v -> around(v)[i].
/// A rotation system is only data; validate_embedding() decides whether it
/// is a planar embedding of a given graph.
class RotationSystem {
 public:
  RotationSystem() = default;
  /// `order[v - 1]` is the cyclic neighbor order of v.
  explicit RotationSystem(const std::vector<VertexList>& order);

  int order() const { return static_cast<int>(offsets_.size()) - 2; }
  std::size_t slots() const { return around_.size(); }
  std::size_t offset(VertexId v) const { return offsets_[static_cast<std::size_t>(v)]; }
  std::span<const VertexId> around(VertexId v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return std::span<const VertexId>(around_).subspan(b, e - b);
  }
  /// Head of the directed edge stored in `slot`.
  VertexId head(std::size_t slot) const { return around_[slot]; }

  std::vector<VertexList> to_lists() const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

 private:
  std::vector<std::size_t> offsets_{0, 0};
  std::vector<VertexId> around_;
};

/// Planar embedding of a connected simple graph, or nullopt when the graph
/// is not planar. Throws InputError when the graph is disconnected.
std::optional<RotationSystem> embed(const Graph& g);

/// Outcome of validate_embedding: empty reason means the rotation is valid.
struct EmbeddingCheck {
  enum class Failure { none, size_mismatch, not_a_permutation, euler };
  Failure failure = Failure::none;
  std::string reason;
  std::size_t faces = 0;

  bool ok() const { return failure == Failure::none; }
};

/// Checks, in order: every rotation is a permutation of the adjacency list;
/// face tracing closes up (guaranteed once the first check passes); and
/// V - E + F = 2 for the traced faces. Reports the first violated check.
EmbeddingCheck validate_embedding(const Graph& g, const RotationSystem& rot);

/// The graph whose adjacency lists are the rotation's cyclic orders.
Graph graph_of(const RotationSystem& rot);

}  // namespace mdcut
