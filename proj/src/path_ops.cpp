#include "mdcut/path_ops.hpp"

#include <limits>
#include <string>

#include "mdcut/errors.hpp"

namespace mdcut {

Path truncate_path(std::span<const VertexId> a, std::span<const VertexId> b, std::span<const VertexId> path,
                   int n) {
  const IndexArray in_a = subset_array(a, n);
  const IndexArray in_b = subset_array(b, n);
  for (VertexId v : b) {
    if (in_a[v] == 1) throw InputError("truncate_path: A and B share vertex " + std::to_string(v));
  }
  if (path.empty() || in_a[path.front()] != 1) throw InputError("truncate_path: path does not start in A");

  std::size_t va = 0;
  std::size_t vb = path.size();
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (in_a[path[i]] == 1) va = i;
    if (in_b[path[i]] == 1) {
      vb = i;
      break;
    }
  }
  if (vb == path.size()) throw InputError("truncate_path: path never reaches B");
  return Path(path.begin() + static_cast<std::ptrdiff_t>(va), path.begin() + static_cast<std::ptrdiff_t>(vb) + 1);
}

namespace {

template <class Host>
Path remove_chords_impl(const Host& host, const Graph& g, std::span<const VertexId> path) {
  if (path.empty()) return {};
  const IndexArray position = lookup_array(path, g.order());
  const int k = static_cast<int>(path.size());
  Path out{path.front()};
  int i = 1;
  while (i < k) {
    int j = 0;
    host.for_each_out_neighbor(path[static_cast<std::size_t>(i - 1)], [&](VertexId v) {
      if (position[v] > j) j = position[v];
    });
    if (j <= i) {
      throw ContractViolation("remove_chords: vertex " + std::to_string(path[static_cast<std::size_t>(i - 1)]) +
                              " has no neighbor further along the path");
    }
    append(out, path[static_cast<std::size_t>(j - 1)]);
    i = j;
  }
  return out;
}

struct PlainHost {
  const Graph& g;
  template <class F>
  void for_each_out_neighbor(VertexId v, F&& f) const {
    for (VertexId w : g.neighbors(v)) f(w);
  }
};

}  // namespace

Path remove_chords(const Graph& g, std::span<const VertexId> path) {
  return remove_chords_impl(PlainHost{g}, g, path);
}

Path remove_chords(const ArcOverlay& h, std::span<const VertexId> path) {
  return remove_chords_impl(h, h.base(), path);
}

Skipper path_skipper(const Graph& g, std::span<const VertexId> path, const std::vector<VertexList>& faces) {
  const int n = g.order();
  const IndexArray position = lookup_array(path, n);

  // Ω must be pairwise disjoint; face_of doubles as the ownership check.
  std::vector<int> face_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (VertexId v : faces[f]) {
      if (!g.contains(v)) throw InputError("path_skipper: face vertex out of range");
      auto& owner = face_of[static_cast<std::size_t>(v)];
      if (owner != -1) {
        throw InputError("path_skipper: faces " + std::to_string(owner) + " and " + std::to_string(f) +
                         " share vertex " + std::to_string(v));
      }
      owner = static_cast<int>(f);
    }
  }

  ArcOverlay host(g);
  std::vector<int> arc_face(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    int a = std::numeric_limits<int>::max();
    int b = 0;
    for (VertexId v : faces[f]) {
      const int x = position[v];
      if (x > 0 && x < a) a = x;
      if (x > b) b = x;
    }
    if (b != 0 && a != b) {
      const VertexId from = path[static_cast<std::size_t>(a - 1)];
      host.add_arc(from, path[static_cast<std::size_t>(b - 1)]);
      arc_face[static_cast<std::size_t>(from)] = static_cast<int>(f);
    }
  }

  Skipper out;
  out.vertices = remove_chords(host, path);
  for (std::size_t i = 0; i + 1 < out.vertices.size(); ++i) {
    const VertexId u = out.vertices[i];
    const VertexId v = out.vertices[i + 1];
    const int f = arc_face[static_cast<std::size_t>(u)];
    if (f >= 0 && host.has_arc(u, v) && !g.adjacent(u, v)) out.shortcuts.emplace_back(i, f);
  }
  return out;
}

VertexList middle_vertices(std::span<const VertexId> path, const std::vector<VertexList>& faces, int n) {
  const IndexArray position = lookup_array(path, n);
  VertexList out;
  for (const auto& face : faces) {
    int first = std::numeric_limits<int>::max();
    int last = 0;
    for (VertexId v : face) {
      const int x = position[v];
      if (x > 0) {
        first = std::min(first, x);
        last = std::max(last, x);
      }
    }
    for (VertexId v : face) {
      const int x = position[v];
      if (x > first && x < last) out.push_back(v);
    }
  }
  return out;
}

}  // namespace mdcut
