#include "mdcut/connectivity.hpp"

#include <limits>
#include <string>

#include "mdcut/errors.hpp"

namespace mdcut {

namespace {

// Unit vertex capacities by augmenting paths on the implicit vertex-split
// graph (v_in -> v_out, u_out -> v_in per edge direction). With capacity 1
// every vertex other than s and t carries at most one unit, so the flow is
// stored as one successor and one predecessor per vertex.
class UnitFlow {
 public:
  UnitFlow(const Graph& g, VertexId s, VertexId t)
      : g_(g), s_(s), t_(t), size_(static_cast<std::size_t>(g.order()) + 1),
        next_(size_, 0), prev_(size_, 0), seen_(2 * size_, 0), parent_(2 * size_, -1) {}

  bool augment() {
    ++round_;
    queue_.clear();
    visit(node(s_, true), -1);
    const int goal = node(t_, false);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int x = queue_[head];
      const VertexId v = x >> 1;
      if ((x & 1) != 0) {
        // v_out: forward edge arcs, and the reverse split arc.
        for (VertexId w : g_.neighbors(v)) {
          if (w == s_ || has_flow(v, w)) continue;
          if (visit(node(w, false), x) && w == t_) return apply(goal);
        }
        if (v != s_ && prev_[static_cast<std::size_t>(v)] != 0) visit(node(v, false), x);
      } else {
        // v_in: the split arc if free, and the reverse of the arc feeding v.
        const VertexId from = prev_[static_cast<std::size_t>(v)];
        if (from == 0) {
          visit(node(v, true), x);
        } else {
          visit(node(from, true), x);
        }
      }
    }
    return false;
  }

  std::vector<Path> paths() const {
    std::vector<Path> out;
    if (direct_) out.push_back({s_, t_});
    for (VertexId w : g_.neighbors(s_)) {
      if (w == t_ || prev_[static_cast<std::size_t>(w)] != s_) continue;
      Path p{s_};
      for (VertexId x = w; x != t_; x = next_[static_cast<std::size_t>(x)]) {
        if (x == 0 || p.size() > size_) throw ContractViolation("flow decomposition lost its path");
        p.push_back(x);
      }
      p.push_back(t_);
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  static int node(VertexId v, bool out) { return 2 * v + (out ? 1 : 0); }

  bool has_flow(VertexId u, VertexId v) const {
    if (u == s_) return v == t_ ? direct_ : prev_[static_cast<std::size_t>(v)] == s_;
    return next_[static_cast<std::size_t>(u)] == v;
  }

  bool visit(int x, int parent) {
    auto& stamp = seen_[static_cast<std::size_t>(x)];
    if (stamp == round_) return false;
    stamp = round_;
    parent_[static_cast<std::size_t>(x)] = parent;
    queue_.push_back(x);
    return true;
  }

  void set_flow(VertexId u, VertexId v) {
    if (u == s_ && v == t_) {
      direct_ = true;
      return;
    }
    if (u != s_) next_[static_cast<std::size_t>(u)] = v;
    if (v != t_) prev_[static_cast<std::size_t>(v)] = u;
  }

  void clear_flow(VertexId u, VertexId v) {
    if (u != s_ && next_[static_cast<std::size_t>(u)] == v) next_[static_cast<std::size_t>(u)] = 0;
    if (v != t_ && prev_[static_cast<std::size_t>(v)] == u) prev_[static_cast<std::size_t>(v)] = 0;
  }

  // Applies the path ending at `goal` in forward order; later steps may
  // overwrite links that earlier steps cleared, never the reverse.
  bool apply(int goal) {
    path_.clear();
    for (int x = goal; x != -1; x = parent_[static_cast<std::size_t>(x)]) path_.push_back(x);
    for (std::size_t i = path_.size() - 1; i > 0; --i) {
      const int a = path_[i];
      const int b = path_[i - 1];
      const VertexId u = a >> 1;
      const VertexId v = b >> 1;
      if (u == v) continue;  // split arc or its reverse
      if ((a & 1) != 0) {
        set_flow(u, v);  // u_out -> v_in
      } else {
        clear_flow(v, u);  // u_in -> v_out cancels v -> u
      }
    }
    return true;
  }

  const Graph& g_;
  VertexId s_;
  VertexId t_;
  std::size_t size_;
  std::vector<VertexId> next_;
  std::vector<VertexId> prev_;
  std::vector<int> seen_;
  std::vector<int> parent_;
  std::vector<int> queue_;
  std::vector<int> path_;
  int round_ = 0;
  bool direct_ = false;
};

}  // namespace

PathBundle menger_paths(const Graph& g, VertexId s, VertexId t, std::optional<int> cap) {
  if (!g.contains(s) || !g.contains(t)) throw InputError("menger_paths: endpoint not in graph");
  if (s == t) throw InputError("menger_paths: s and t must differ");
  const int limit = cap.value_or(std::numeric_limits<int>::max());
  if (limit < 0) throw InputError("menger_paths: negative cap");

  UnitFlow flow(g, s, t);
  int value = 0;
  while (value < limit && flow.augment()) ++value;

  PathBundle out;
  out.source = s;
  out.sink = t;
  out.paths = flow.paths();
  return out;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  const int n = g.order();
  if (n < k + 1) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  std::vector<VertexId> mark(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 1; v <= k; ++v) {
    for (VertexId w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = v;
    for (VertexId w = 1; w <= n; ++w) {
      if (w == v || mark[static_cast<std::size_t>(w)] == v) continue;
      if (menger_paths(g, v, w, k).kappa() < k) return false;
    }
  }
  return true;
}

bool paths_internally_disjoint(const Graph& g, const PathBundle& bundle) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()) + 1, -1);
  for (std::size_t i = 0; i < bundle.paths.size(); ++i) {
    const Path& p = bundle.paths[i];
    if (p.size() < 2 || p.front() != bundle.source || p.back() != bundle.sink) return false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!g.contains(p[j])) return false;
      if (j + 1 < p.size() && !g.adjacent(p[j], p[j + 1])) return false;
      if (j == 0 || j + 1 == p.size()) continue;
      auto& o = owner[static_cast<std::size_t>(p[j])];
      if (o != -1) return false;  // repeated inside one path or shared between two
      o = static_cast<int>(i);
    }
    if (p.size() == 2) {
      // The direct edge may be used at most once.
      for (std::size_t q = 0; q < i; ++q) {
        if (bundle.paths[q].size() == 2) return false;
      }
    }
  }
  return true;
}

}  // namespace mdcut
