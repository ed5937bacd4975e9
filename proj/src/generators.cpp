#include "mdcut/generators.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "mdcut/connectivity.hpp"
#include "mdcut/dcel.hpp"
#include "mdcut/errors.hpp"

namespace mdcut {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

PlaneGraph plane_graph(const std::vector<VertexList>& rotation) {
  return PlaneGraph{Graph::from_adjacency(rotation), RotationSystem(rotation)};
}

PlaneGraph octahedron() {
  return plane_graph({{2, 3, 4, 5}, {6, 3, 1, 5}, {6, 4, 1, 2}, {6, 5, 1, 3}, {6, 2, 1, 4}, {5, 4, 3, 2}});
}

PlaneGraph antiprism(int k) {
  if (k < 3) throw InputError("antiprism needs k >= 3");
  auto top = [k](int i) { return ((i - 1) % k + k) % k + 1; };
  auto bottom = [k](int i) { return k + ((i - 1) % k + k) % k + 1; };
  std::vector<VertexList> rot(2 * static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    rot[static_cast<std::size_t>(i - 1)] = {bottom(i + 1), top(i + 1), top(i - 1), bottom(i)};
    rot[static_cast<std::size_t>(k + i - 1)] = {bottom(i + 1), top(i), top(i - 1), bottom(i - 1)};
  }
  return plane_graph(rot);
}

namespace {

PlaneGraph embedded(int n, const std::vector<Edge>& edges) {
  PlaneGraph out;
  out.graph = Graph::from_edges(n, edges);
  auto rot = embed(out.graph);
  if (!rot) throw ContractViolation("built-in graph failed to embed");
  out.rotation = *rot;
  // Keep adjacency order equal to the rotation so the pair stays canonical.
  out.graph = graph_of(out.rotation);
  return out;
}

}  // namespace

PlaneGraph icosahedron() {
  std::vector<Edge> edges;
  auto upper = [](int i) { return 2 + (i % 5 + 5) % 5; };
  auto lower = [](int i) { return 7 + (i % 5 + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(1, upper(i));
    edges.emplace_back(upper(i), upper(i + 1));
    edges.emplace_back(lower(i), lower(i + 1));
    edges.emplace_back(12, lower(i));
    edges.emplace_back(upper(i), lower(i));
    edges.emplace_back(upper(i + 1), lower(i));
  }
  return embedded(12, edges);
}

PlaneGraph cleavable_counterexample() {
  const std::vector<Edge> edges{{1, 4}, {1, 6}, {6, 4}, {1, 2}, {2, 3}, {3, 4}, {8, 2}, {8, 3},
                                {5, 8}, {8, 7}, {5, 6}, {6, 7}, {1, 8}, {8, 4}, {1, 5}, {7, 4}};
  return embedded(8, edges);
}

PlaneGraph named_graph(std::string_view name) {
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "counter-3conn") return cleavable_counterexample();
  if (name.starts_with("antiprism")) {
    const auto digits = name.substr(9);
    int k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return antiprism(k);
  }
  throw InputError("unknown graph name '" + std::string(name) + "'");
}

namespace {

// Rotation lists under local surgery; index 0 unused.
class Surgery {
 public:
  explicit Surgery(const RotationSystem& rot) : rot_(static_cast<std::size_t>(rot.order()) + 1) {
    for (VertexId v = 1; v <= rot.order(); ++v) {
      rot_[static_cast<std::size_t>(v)].assign(rot.around(v).begin(), rot.around(v).end());
    }
  }

  int order() const { return static_cast<int>(rot_.size()) - 1; }
  VertexList& at(VertexId v) { return rot_[static_cast<std::size_t>(v)]; }
  const VertexList& at(VertexId v) const { return rot_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(at(v).size()); }

  std::size_t index(VertexId u, VertexId v) const {
    const auto& r = at(u);
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), v) - r.begin());
  }
  bool has_edge(VertexId u, VertexId v) const { return index(u, v) < at(u).size(); }
  VertexId succ(VertexId u, VertexId v) const {
    const auto& r = at(u);
    return r[(index(u, v) + 1) % r.size()];
  }
  VertexId pred(VertexId u, VertexId v) const {
    const auto& r = at(u);
    return r[(index(u, v) + r.size() - 1) % r.size()];
  }
  void insert_after(VertexId x, VertexId anchor, VertexId w) {
    auto& r = at(x);
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(index(x, anchor)) + 1, w);
  }
  void replace(VertexId x, VertexId old_v, VertexId new_v) { at(x)[index(x, old_v)] = new_v; }
  void erase(VertexId x, VertexId y) {
    auto& r = at(x);
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(index(x, y)));
  }
  VertexId add_vertex(VertexList around) {
    rot_.push_back(std::move(around));
    return order();
  }

  /// Origins along the face walk starting with u -> v.
  VertexList walk(VertexId u, VertexId v) const {
    VertexList out;
    VertexId a = u;
    VertexId b = v;
    do {
      out.push_back(a);
      const VertexId c = succ(b, a);
      a = b;
      b = c;
    } while (a != u || b != v);
    return out;
  }

  std::vector<VertexList> lists() const { return {rot_.begin() + 1, rot_.end()}; }
  PlaneGraph plane() const { return plane_graph(lists()); }

 private:
  std::vector<VertexList> rot_;
};

bool common_neighbor_besides(const Surgery& s, VertexId a, VertexId b, VertexId u, VertexId v,
                             std::vector<VertexId>& stamp) {
  if (stamp.size() <= static_cast<std::size_t>(s.order())) stamp.resize(static_cast<std::size_t>(s.order()) + 1, 0);
  for (VertexId x : s.at(a)) stamp[static_cast<std::size_t>(x)] = a;
  for (VertexId x : s.at(b)) {
    if (x != u && x != v && stamp[static_cast<std::size_t>(x)] == a) {
      for (VertexId y : s.at(a)) stamp[static_cast<std::size_t>(y)] = 0;
      return true;
    }
  }
  for (VertexId y : s.at(a)) stamp[static_cast<std::size_t>(y)] = 0;
  return false;
}

}  // namespace

PlaneGraph relabel_breadth_first(const PlaneGraph& plane) {
  const int n = plane.graph.order();
  std::vector<VertexId> label(static_cast<std::size_t>(n) + 1, 0);
  VertexList order;
  order.reserve(static_cast<std::size_t>(n));
  for (VertexId root = 1; root <= n; ++root) {
    if (label[static_cast<std::size_t>(root)] != 0) continue;
    label[static_cast<std::size_t>(root)] = static_cast<VertexId>(order.size()) + 1;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (VertexId w : plane.rotation.around(order[head])) {
        if (label[static_cast<std::size_t>(w)] != 0) continue;
        label[static_cast<std::size_t>(w)] = static_cast<VertexId>(order.size()) + 1;
        order.push_back(w);
      }
    }
  }
  std::vector<VertexList> rot(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId w : plane.rotation.around(order[i])) rot[i].push_back(label[static_cast<std::size_t>(w)]);
  }
  return plane_graph(rot);
}

PlaneGraph random_triangulation(int n, std::uint64_t seed) {
  if (n < 4) throw InputError("random_triangulation needs n >= 4");
  Rng rng(seed);
  const PlaneGraph k4 = embedded(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  Surgery s(k4.rotation);
  std::vector<VertexList> faces = list_faces(Dcel(k4.graph, k4.rotation));
  while (s.order() < n) {
    const std::size_t f = rng.below(faces.size());
    const VertexId x = faces[f][0];
    const VertexId y = faces[f][1];
    const VertexId z = faces[f][2];
    const VertexId w = s.order() + 1;
    s.insert_after(y, x, w);
    s.insert_after(z, y, w);
    s.insert_after(x, z, w);
    s.add_vertex({y, x, z});
    faces[f] = {x, y, w};
    faces.push_back({y, z, w});
    faces.push_back({z, x, w});
  }
  return relabel_breadth_first(s.plane());
}

PlaneGraph random_4connected_triangulation(int n, std::uint64_t seed) {
  if (n < 6) throw InputError("a 4-connected triangulation needs n >= 6");
  Rng rng(seed);
  Surgery s(octahedron().rotation);
  std::vector<Edge> edges = octahedron().graph.edges();
  edges.reserve(3 * static_cast<std::size_t>(n));
  while (s.order() < n) {
    const std::size_t e = rng.below(edges.size());
    const auto [u, v] = edges[e];
    const VertexId a = s.succ(u, v);
    const VertexId b = s.pred(u, v);
    const VertexId w = s.order() + 1;
    s.replace(u, v, w);
    s.replace(v, u, w);
    s.insert_after(a, u, w);
    s.insert_after(b, v, w);
    s.add_vertex({u, b, v, a});
    edges[e] = {u, w};
    edges.emplace_back(w, v);
    edges.emplace_back(w, a);
    edges.emplace_back(w, b);
  }
  std::vector<VertexId> stamp;
  for (int attempt = 0; attempt < n; ++attempt) {
    const std::size_t e = rng.below(edges.size());
    const auto [u, v] = edges[e];
    const VertexId a = s.succ(u, v);
    const VertexId b = s.pred(u, v);
    if (s.degree(u) <= 4 || s.degree(v) <= 4 || s.has_edge(a, b)) continue;
    if (common_neighbor_besides(s, a, b, u, v, stamp)) continue;
    s.erase(u, v);
    s.erase(v, u);
    s.insert_after(a, u, b);
    s.insert_after(b, v, a);
    edges[e] = {a, b};
  }
  return relabel_breadth_first(s.plane());
}

bool has_separating_triangle(const Graph& g) {
  const int n = g.order();
  std::vector<VertexId> mark(static_cast<std::size_t>(n) + 1, 0);
  long long triangles = 0;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId w : g.neighbors(u)) mark[static_cast<std::size_t>(w)] = u;
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      for (VertexId w : g.neighbors(v)) {
        if (w > v && mark[static_cast<std::size_t>(w)] == u) ++triangles;
      }
    }
  }
  return triangles > 2LL * n - 4;
}

CarveResult carve_large_faces(const PlaneGraph& triangulation, int k, std::uint64_t seed,
                              const CarveOptions& options) {
  CarveResult out;
  if (k <= 0) {
    out.plane = triangulation;
    return out;
  }
  Rng rng(seed);
  Surgery s(triangulation.rotation);
  const std::vector<Edge> edges = triangulation.graph.edges();
  std::vector<int> on_face(static_cast<std::size_t>(s.order()) + 1, 0);
  std::vector<VertexId> stamp;
  const bool local = !options.allow_touching && !options.deep;

  auto four_connected = [&]() { return is_k_connected(Graph::from_adjacency(s.lists()), 4); };

  // Deletes xy; on rejection the rotation lists are restored verbatim.
  auto try_delete = [&](VertexId x, VertexId y, bool full_check) {
    const VertexList rx = s.at(x);
    const VertexList ry = s.at(y);
    s.erase(x, y);
    s.erase(y, x);
    if (full_check && !four_connected()) {
      s.at(x) = rx;
      s.at(y) = ry;
      return false;
    }
    return true;
  };

  const int budget = 50 * k;
  for (int attempt = 0; attempt < budget && out.faces < k; ++attempt) {
    const auto [u, v] = edges[rng.below(edges.size())];
    if (!s.has_edge(u, v) || s.degree(u) <= 4 || s.degree(v) <= 4) continue;
    const VertexList left = s.walk(u, v);
    const VertexList right = s.walk(v, u);
    if (left.size() != 3 || right.size() != 3) continue;
    const VertexId p = left[2];
    const VertexId q = right[2];
    if (!options.allow_touching) {
      bool busy = false;
      for (VertexId x : {u, v, p, q}) busy = busy || on_face[static_cast<std::size_t>(x)] > 0;
      if (busy) continue;
    }
    if (local && (s.has_edge(p, q) || common_neighbor_besides(s, p, q, u, v, stamp))) continue;
    if (!try_delete(u, v, !local)) continue;
    for (VertexId x : {u, v, p, q}) ++on_face[static_cast<std::size_t>(x)];
    ++out.faces;

    if (!options.deep) continue;
    // Grow the new face through triangles hanging off its boundary.
    VertexId rep_from = p;
    VertexId rep_to = u;
    int grown = 0;
    for (int g_attempt = 0; g_attempt < 50 * options.growth_steps && grown < options.growth_steps; ++g_attempt) {
      const VertexList boundary = s.walk(rep_from, rep_to);
      const std::size_t i = rng.below(boundary.size());
      const VertexId x = boundary[i];
      const VertexId y = boundary[(i + 1) % boundary.size()];
      if (s.degree(x) <= 4 || s.degree(y) <= 4) continue;
      const VertexList other = s.walk(y, x);
      if (other.size() != 3) continue;
      const VertexId c = other[2];
      if (std::find(boundary.begin(), boundary.end(), c) != boundary.end()) continue;
      if (!options.allow_touching && on_face[static_cast<std::size_t>(c)] > 0) continue;
      if (!try_delete(x, y, true)) continue;
      ++on_face[static_cast<std::size_t>(c)];
      rep_from = x;
      rep_to = c;
      ++grown;
    }
  }
  out.plane = s.plane();
  return out;
}

CarveResult generate(const GeneratorSpec& spec) {
  CarveResult out;
  const std::string& f = spec.family;
  if (f == "octahedron" || f == "icosahedron" || f == "counter-3conn") {
    out.plane = named_graph(f);
  } else if (f == "antiprism") {
    out.plane = antiprism(spec.n == 0 ? 4 : spec.n);
  } else if (f == "random-triangulation") {
    out.plane = random_triangulation(spec.n, spec.seed);
  } else if (f == "random-4conn") {
    out.plane = random_4connected_triangulation(spec.n, spec.seed);
  } else if (f == "carved") {
    const PlaneGraph base = random_4connected_triangulation(spec.n, spec.seed);
    return carve_large_faces(base, spec.faces, spec.seed ^ 0x9e3779b97f4a7c15ULL, spec.carve);
  } else {
    throw InputError("unknown family '" + f + "'");
  }
  out.faces = static_cast<int>(list_large_faces(Dcel(out.plane.graph, out.plane.rotation)).size());
  return out;
}

}  // namespace mdcut
