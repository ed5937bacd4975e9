#pragma once

// Undirected simple graphs on vertices 1..n, the Subset/Lookup index arrays
// and the elementary connectivity helpers every other module builds on.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mdcut {

using VertexId = std::int32_t;
using VertexList = std::vector<VertexId>;
using Edge = std::pair<VertexId, VertexId>;

/// n-entry integer array indexed by vertex id 1..n.
class IndexArray {
 public:
  IndexArray() = default;
  explicit IndexArray(int n) : data_(static_cast<std::size_t>(n) + 1, 0) {}

  int size() const { return static_cast<int>(data_.size()) - 1; }
  int& operator[](VertexId v) { return data_[static_cast<std::size_t>(v)]; }
  int operator[](VertexId v) const { return data_[static_cast<std::size_t>(v)]; }

  /// The n entries for vertices 1..n, in order.
  std::span<const int> entries() const {
    return std::span<const int>(data_).subspan(data_.empty() ? 0 : 1);
  }

 private:
  std::vector<int> data_;
};

/// Subset(A): entry i is 1 iff i appears in A.
IndexArray subset_array(std::span<const VertexId> items, int n);

/// Lookup(A): entry i is j iff a_j = i (1-based position), else 0.
IndexArray lookup_array(std::span<const VertexId> items, int n);

/// Append(A, v).
inline void append(VertexList& list, VertexId v) { list.push_back(v); }

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Vertex ids run 1..n. Adjacency lists keep the order they were supplied in,
/// which lets a graph double as the carrier of a rotation system.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Throws InputError on self-loops, duplicate
  /// edges or endpoints outside 1..n.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Builds from per-vertex neighbor lists; `adjacency[v - 1]` lists the
  /// neighbors of v. The lists must be symmetric and simple.
  static Graph from_adjacency(const std::vector<VertexList>& adjacency);

  int order() const { return n_; }
  std::size_t size() const { return adj_.size() / 2; }
  bool contains(VertexId v) const { return v >= 1 && v <= n_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return std::span<const VertexId>(adj_).subspan(b, e - b);
  }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  /// O(min(deg u, deg v)).
  bool adjacent(VertexId u, VertexId v) const;

  /// G plus vertices n+1, n+2, ...; new vertex n+i is joined to
  /// attachments[i-1]. Existing adjacency order is kept.
  Graph with_vertices(const std::vector<VertexList>& attachments) const;

  /// Each edge once as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Offset of v's first neighbor in the flat adjacency array. Neighbor
  /// slot `offset(v) + i` identifies the directed edge v -> neighbors(v)[i].
  std::size_t offset(VertexId v) const { return offsets_[static_cast<std::size_t>(v)]; }

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0, 0};
  std::vector<VertexId> adj_;
};

/// Connected components of G minus a removed vertex set.
struct Components {
  /// Component index (0-based) per vertex; -1 for removed vertices. Index 0 unused.
  std::vector<int> label;
  /// Classes ordered by their smallest vertex; each class sorted ascending.
  std::vector<VertexList> classes;

  std::size_t count() const { return classes.size(); }
};

Components components(const Graph& g, std::span<const VertexId> removed = {});

int count_components(const Graph& g);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i - 1] is the original id of new vertex i.
  VertexList to_parent;
};

/// G[S], relabelled 1..|S| in the order S is given.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> subset);

/// True iff G[S] is a cycle (hence chordless) on |S| >= 3 vertices.
bool induces_cycle(const Graph& g, std::span<const VertexId> subset);

/// G extended with directed arcs, without touching G itself.
class ArcOverlay {
 public:
  explicit ArcOverlay(const Graph& base);

  const Graph& base() const { return *base_; }

  /// Append(Adj_H(from), to).
  void add_arc(VertexId from, VertexId to);
  bool has_arc(VertexId from, VertexId to) const;
  std::size_t arc_count() const { return arc_to_.size(); }

  /// Calls f(w) for every undirected neighbor, then every arc head, of v.
  template <class F>
  void for_each_out_neighbor(VertexId v, F&& f) const {
    for (VertexId w : base_->neighbors(v)) f(w);
    for (int a = head_[static_cast<std::size_t>(v)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
      f(arc_to_[static_cast<std::size_t>(a)]);
    }
  }

 private:
  const Graph* base_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<VertexId> arc_to_;
};

}  // namespace mdcut
