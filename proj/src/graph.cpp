#include "mdcut/graph.hpp"

#include <algorithm>
#include <string>

#include "mdcut/errors.hpp"

namespace mdcut {

namespace {

void check_items(std::span<const VertexId> items, int n) {
  for (VertexId v : items) {
    if (v < 1 || v > n) {
      throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
  }
}

// Rejects self-loops and repeated neighbors; the stamp array avoids a clear per vertex.
void check_simple(const Graph& g) {
  std::vector<VertexId> stamp(static_cast<std::size_t>(g.order()) + 1, 0);
  for (VertexId v = 1; v <= g.order(); ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (w == v) throw InputError("self-loop at vertex " + std::to_string(v));
      if (stamp[static_cast<std::size_t>(w)] == v) {
        throw InputError("duplicate edge " + std::to_string(v) + "-" + std::to_string(w));
      }
      stamp[static_cast<std::size_t>(w)] = v;
    }
  }
}

}  // namespace

IndexArray subset_array(std::span<const VertexId> items, int n) {
  check_items(items, n);
  IndexArray out(n);
  for (VertexId v : items) out[v] = 1;
  return out;
}

IndexArray lookup_array(std::span<const VertexId> items, int n) {
  check_items(items, n);
  IndexArray out(n);
  int j = 0;
  for (VertexId v : items) out[v] = ++j;
  return out;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 1.." +
                       std::to_string(n));
    }
    ++g.offsets_[static_cast<std::size_t>(u) + 1];
    ++g.offsets_[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.adj_.resize(edges.size() * 2);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[fill[static_cast<std::size_t>(u)]++] = v;
    g.adj_[fill[static_cast<std::size_t>(v)]++] = u;
  }
  check_simple(g);
  return g;
}

Graph Graph::from_adjacency(const std::vector<VertexList>& adjacency) {
  Graph g;
  g.n_ = static_cast<int>(adjacency.size());
  g.offsets_.assign(adjacency.size() + 2, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    g.offsets_[i + 1] = total;
    total += adjacency[i].size();
  }
  g.offsets_[adjacency.size() + 1] = total;
  if (total % 2 != 0) throw InputError("adjacency lists are not symmetric");
  g.adj_.reserve(total);
  for (const auto& list : adjacency) {
    check_items(list, g.n_);
    g.adj_.insert(g.adj_.end(), list.begin(), list.end());
  }
  check_simple(g);
  // Symmetry: bucket arcs by head, then check each head lists every tail.
  const auto n = static_cast<std::size_t>(g.n_);
  std::vector<std::size_t> in_offsets(n + 2, 0);
  for (VertexId u = 1; u <= g.n_; ++u) {
    for (VertexId v : g.neighbors(u)) ++in_offsets[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 1; i < in_offsets.size(); ++i) in_offsets[i] += in_offsets[i - 1];
  std::vector<VertexId> tails(total);
  std::vector<std::size_t> fill(in_offsets.begin(), in_offsets.end() - 1);
  for (VertexId u = 1; u <= g.n_; ++u) {
    for (VertexId v : g.neighbors(u)) tails[fill[static_cast<std::size_t>(v)]++] = u;
  }
  std::vector<VertexId> mark(n + 1, 0);
  for (VertexId v = 1; v <= g.n_; ++v) {
    for (VertexId w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = v;
    const auto b = in_offsets[static_cast<std::size_t>(v)];
    const auto e = in_offsets[static_cast<std::size_t>(v) + 1];
    if (e - b != static_cast<std::size_t>(g.degree(v))) {
      throw InputError("adjacency lists are not symmetric at vertex " + std::to_string(v));
    }
    for (auto i = b; i < e; ++i) {
      if (mark[static_cast<std::size_t>(tails[i])] != v) {
        throw InputError("adjacency lists are not symmetric at vertex " + std::to_string(v));
      }
    }
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (VertexId u = 1; u <= n_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::with_vertices(const std::vector<VertexList>& attachments) const {
  const auto n = static_cast<std::size_t>(n_);
  const std::size_t k = attachments.size();
  std::vector<std::size_t> extra(n + 1, 0);
  std::size_t added = 0;
  for (const auto& list : attachments) {
    for (VertexId v : list) {
      if (!contains(v)) throw InputError("attachment vertex " + std::to_string(v) + " not in graph");
      ++extra[static_cast<std::size_t>(v)];
    }
    added += list.size();
  }
  Graph out;
  out.n_ = n_ + static_cast<int>(k);
  out.offsets_.assign(n + k + 2, 0);
  out.adj_.resize(adj_.size() + 2 * added);
  std::size_t at = 0;
  for (std::size_t v = 1; v <= n; ++v) {
    out.offsets_[v] = at;
    const auto nb = neighbors(static_cast<VertexId>(v));
    std::copy(nb.begin(), nb.end(), out.adj_.begin() + static_cast<std::ptrdiff_t>(at));
    at += nb.size() + extra[v];
    extra[v] = at - extra[v];  // next free slot for new neighbors
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto id = static_cast<VertexId>(n + 1 + i);
    out.offsets_[n + 1 + i] = at;
    for (VertexId v : attachments[i]) {
      out.adj_[at++] = v;
      out.adj_[extra[static_cast<std::size_t>(v)]++] = id;
    }
  }
  out.offsets_[n + k + 1] = at;
  check_simple(out);
  return out;
}

Components components(const Graph& g, std::span<const VertexId> removed) {
  const int n = g.order();
  Components out;
  out.label.assign(static_cast<std::size_t>(n) + 1, -2);
  out.label[0] = -1;
  for (VertexId v : removed) {
    if (!g.contains(v)) throw InputError("removed vertex " + std::to_string(v) + " not in graph");
    out.label[static_cast<std::size_t>(v)] = -1;
  }
  std::vector<VertexId> queue;
  queue.reserve(static_cast<std::size_t>(n));
  std::vector<std::size_t> sizes;
  for (VertexId root = 1; root <= n; ++root) {
    if (out.label[static_cast<std::size_t>(root)] != -2) continue;
    const int id = static_cast<int>(sizes.size());
    queue.clear();
    queue.push_back(root);
    out.label[static_cast<std::size_t>(root)] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (out.label[static_cast<std::size_t>(w)] == -2) {
          out.label[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
    sizes.push_back(queue.size());
  }
  // A second pass in vertex order fills every class already sorted.
  out.classes.resize(sizes.size());
  for (std::size_t c = 0; c < sizes.size(); ++c) out.classes[c].reserve(sizes[c]);
  for (VertexId v = 1; v <= n; ++v) {
    const int c = out.label[static_cast<std::size_t>(v)];
    if (c >= 0) out.classes[static_cast<std::size_t>(c)].push_back(v);
  }
  return out;
}

int count_components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<VertexId> stack;
  int count = 0;
  for (VertexId root = 1; root <= n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    ++count;
    seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return count_components(g) <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> subset) {
  IndexArray index(g.order());
  InducedSubgraph out;
  for (VertexId v : subset) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " not in graph");
    if (index[v] != 0) throw InputError("vertex " + std::to_string(v) + " repeated in subset");
    out.to_parent.push_back(v);
    index[v] = static_cast<int>(out.to_parent.size());
  }
  std::vector<Edge> edges;
  for (VertexId v : subset) {
    for (VertexId w : g.neighbors(v)) {
      if (index[w] != 0 && v < w) edges.emplace_back(index[v], index[w]);
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(subset.size()), edges);
  return out;
}

bool induces_cycle(const Graph& g, std::span<const VertexId> subset) {
  if (subset.size() < 3) return false;
  const auto sub = induced_subgraph(g, subset);
  for (VertexId v = 1; v <= sub.graph.order(); ++v) {
    if (sub.graph.degree(v) != 2) return false;
  }
  return is_connected(sub.graph);
}

ArcOverlay::ArcOverlay(const Graph& base)
    : base_(&base), head_(static_cast<std::size_t>(base.order()) + 1, -1) {}

void ArcOverlay::add_arc(VertexId from, VertexId to) {
  if (!base_->contains(from) || !base_->contains(to)) throw InputError("arc endpoint not in graph");
  if (from == to) throw InputError("arc would be a self-loop");
  next_.push_back(head_[static_cast<std::size_t>(from)]);
  arc_to_.push_back(to);
  head_[static_cast<std::size_t>(from)] = static_cast<int>(arc_to_.size()) - 1;
}

bool ArcOverlay::has_arc(VertexId from, VertexId to) const {
  for (int a = head_[static_cast<std::size_t>(from)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
    if (arc_to_[static_cast<std::size_t>(a)] == to) return true;
  }
  return false;
}

}  // namespace mdcut
