#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mdcut/connectivity.hpp"
#include "mdcut/errors.hpp"
#include "mdcut/generators.hpp"
#include "support.hpp"

using namespace mdcut;
using namespace mdcut::testing;

namespace {

// Simple paths from s to t, consecutive vertices adjacent, no shared inner vertex.
void check_bundle(const Graph& g, const PathBundle& b, VertexId s, VertexId t) {
  std::vector<int> used(static_cast<std::size_t>(g.order()) + 1, 0);
  for (const Path& p : b.paths) {
    REQUIRE(p.size() >= 2);
    CHECK(p.front() == s);
    CHECK(p.back() == t);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
    for (std::size_t i = 1; i + 1 < p.size(); ++i) CHECK(++used[static_cast<std::size_t>(p[i])] == 1);
  }
  CHECK(paths_internally_disjoint(g, b));
}

}  // namespace

TEST_CASE("menger examples") {
  const Graph oct = octahedron().graph;
  const auto b = menger_paths(oct, 1, 6);
  CHECK(b.kappa() == min_separator_by_subsets(oct, 1, 6));
  CHECK(b.kappa() == 4);
  check_bundle(oct, b, 1, 6);

  const Graph q3 = cube_graph();
  const auto c = menger_paths(q3, 1, 8);
  CHECK(c.kappa() == 3);
  check_bundle(q3, c, 1, 8);

  const Graph p3 = path_graph(3);
  const auto d = menger_paths(p3, 1, 3);
  CHECK(d.kappa() == 1);
  CHECK(d.paths[0] == Path{1, 2, 3});
}

TEST_CASE("menger cap and errors") {
  const Graph oct = octahedron().graph;
  CHECK(menger_paths(oct, 1, 6, 2).kappa() == 2);
  CHECK(menger_paths(oct, 1, 6, 0).kappa() == 0);
  CHECK_THROWS_AS(menger_paths(oct, 1, 1), InputError);
  CHECK_THROWS_AS(menger_paths(oct, 1, 7), InputError);
}

TEST_CASE("menger on adjacent endpoints counts the direct edge once") {
  const Graph oct = octahedron().graph;
  const auto b = menger_paths(oct, 1, 2);
  check_bundle(oct, b, 1, 2);
  int direct = 0;
  for (const Path& p : b.paths) direct += p.size() == 2 ? 1 : 0;
  CHECK(direct == 1);
  // Besides the edge: 1-3-2, 1-5-2 and 1-4-6-2.
  CHECK(b.kappa() == 4);
}

TEST_CASE("menger matches brute-force separators on random graphs") {
  Rng rng(21);
  for (int round = 0; round < 120; ++round) {
    const int n = 4 + static_cast<int>(rng.below(9));
    const Graph g = random_graph(n, 0.25 + 0.05 * static_cast<double>(rng.below(8)), rng);
    const auto s = static_cast<VertexId>(1 + rng.below(static_cast<std::uint64_t>(n)));
    auto t = static_cast<VertexId>(1 + rng.below(static_cast<std::uint64_t>(n)));
    if (s == t || g.adjacent(s, t)) continue;
    const auto b = menger_paths(g, s, t);
    CHECK(b.kappa() == min_separator_by_subsets(g, s, t));
    check_bundle(g, b, s, t);
  }
}

TEST_CASE("is_k_connected") {
  CHECK(is_k_connected(octahedron().graph, 4));
  CHECK_FALSE(is_k_connected(octahedron().graph, 5));
  CHECK(is_k_connected(antiprism(4).graph, 4));
  CHECK_FALSE(is_k_connected(cube_graph(), 4));
  CHECK(is_k_connected(cube_graph(), 3));
  CHECK(is_k_connected(complete_graph(5), 4));
  CHECK_FALSE(is_k_connected(complete_graph(4), 4));
}

TEST_CASE("is_k_connected agrees with subset connectivity") {
  Rng rng(23);
  for (int round = 0; round < 80; ++round) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, 0.3 + 0.1 * static_cast<double>(rng.below(6)), rng);
    const int kappa = connectivity_by_subsets(g);
    for (int k = 1; k <= 5; ++k) {
      CHECK(is_k_connected(g, k) == (n >= k + 1 && kappa >= k));
    }
  }
}

TEST_CASE("4-connected graphs give 4 paths between non-adjacent pairs") {
  Rng rng(29);
  for (int round = 0; round < 20; ++round) {
    const PlaneGraph t = random_4connected_triangulation(8 + static_cast<int>(rng.below(30)), rng.next());
    const int n = t.graph.order();
    for (int q = 0; q < 10; ++q) {
      const auto s = static_cast<VertexId>(1 + rng.below(static_cast<std::uint64_t>(n)));
      const auto u = static_cast<VertexId>(1 + rng.below(static_cast<std::uint64_t>(n)));
      if (s == u || t.graph.adjacent(s, u)) continue;
      const auto b = menger_paths(t.graph, s, u);
      CHECK(b.kappa() >= 4);
      check_bundle(t.graph, b, s, u);
    }
  }
}
