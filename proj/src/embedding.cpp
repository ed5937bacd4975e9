#include "mdcut/embedding.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "mdcut/dcel.hpp"
#include "mdcut/errors.hpp"

namespace mdcut {

RotationSystem::RotationSystem(const std::vector<VertexList>& order) {
  offsets_.assign(order.size() + 2, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    offsets_[i + 1] = total;
    total += order[i].size();
  }
  offsets_[order.size() + 1] = total;
  around_.reserve(total);
  for (const auto& list : order) around_.insert(around_.end(), list.begin(), list.end());
}

std::vector<VertexList> RotationSystem::to_lists() const {
  std::vector<VertexList> out(static_cast<std::size_t>(order()));
  for (VertexId v = 1; v <= order(); ++v) {
    const auto a = around(v);
    out[static_cast<std::size_t>(v) - 1].assign(a.begin(), a.end());
  }
  return out;
}

Graph graph_of(const RotationSystem& rot) { return Graph::from_adjacency(rot.to_lists()); }

std::optional<RotationSystem> embed(const Graph& g) {
  if (!is_connected(g)) throw InputError("embed: graph is disconnected");
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>,
                            boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

  const int n = g.order();
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u - 1),
                                                       static_cast<std::size_t>(v - 1), bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next_index = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next_index++);

  std::vector<std::vector<BoostEdge>> embedding(static_cast<std::size_t>(n));
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data());
  if (!planar) return std::nullopt;

  std::vector<VertexList> order(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) {
    order[v].reserve(embedding[v].size());
    for (const auto& e : embedding[v]) {
      const auto a = boost::source(e, bg);
      const auto b = boost::target(e, bg);
      order[v].push_back(static_cast<VertexId>((a == v ? b : a) + 1));
    }
  }
  return RotationSystem(order);
}

EmbeddingCheck validate_embedding(const Graph& g, const RotationSystem& rot) {
  EmbeddingCheck out;
  if (rot.order() != g.order()) {
    out.failure = EmbeddingCheck::Failure::size_mismatch;
    out.reason = "rotation covers " + std::to_string(rot.order()) + " vertices, graph has " +
                 std::to_string(g.order());
    return out;
  }
  std::vector<VertexId> mark(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<VertexId> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  for (VertexId v = 1; v <= g.order(); ++v) {
    const auto around = rot.around(v);
    if (around.size() != static_cast<std::size_t>(g.degree(v))) {
      out.failure = EmbeddingCheck::Failure::not_a_permutation;
      out.reason = "rotation at vertex " + std::to_string(v) + " has " +
                   std::to_string(around.size()) + " entries, degree is " +
                   std::to_string(g.degree(v));
      return out;
    }
    for (VertexId w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = v;
    for (VertexId w : around) {
      if (w < 1 || w > g.order() || mark[static_cast<std::size_t>(w)] != v ||
          seen[static_cast<std::size_t>(w)] == v) {
        out.failure = EmbeddingCheck::Failure::not_a_permutation;
        out.reason = "rotation at vertex " + std::to_string(v) +
                     " is not a permutation of its neighbors (entry " + std::to_string(w) + ")";
        return out;
      }
      seen[static_cast<std::size_t>(w)] = v;
    }
  }
  try {
    const Dcel dcel(g, rot);
    out.faces = dcel.face_count();
  } catch (const EmbeddingError& e) {
    out.failure = EmbeddingCheck::Failure::euler;
    out.reason = e.what();
  }
  return out;
}

}  // namespace mdcut
