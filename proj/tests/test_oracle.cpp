#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mdcut/connectivity.hpp"
#include "mdcut/errors.hpp"
#include "mdcut/generators.hpp"
#include "mdcut/oracle.hpp"
#include "support.hpp"

using namespace mdcut;
using namespace mdcut::testing;

namespace {

std::vector<VertexList> inventory_sets(const MinimalCutInventory& inv) {
  std::vector<VertexList> out;
  for (const auto& e : inv.cuts) out.push_back(e.vertices);
  return out;
}

PlaneGraph c4_plane() { return plane_graph({{2, 4}, {3, 1}, {4, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("enumerate_minimal_cuts examples") {
  CHECK(inventory_sets(enumerate_minimal_cuts(cycle_graph(4))) == std::vector<VertexList>{{1, 3}, {2, 4}});

  const Graph oct = octahedron().graph;
  const auto inv = enumerate_minimal_cuts(oct);
  CHECK(inventory_sets(inv) == minimal_cuts_by_definition(oct));
  CHECK(inv.cuts.size() == 3);
  for (const auto& e : inv.cuts) {
    CHECK(e.vertices.size() == 4);
    CHECK(e.side_components == 2);
    CHECK(e.cut_components == 1);
  }

  const Graph ap = antiprism(4).graph;
  const auto sets = inventory_sets(enumerate_minimal_cuts(ap));
  CHECK(sets == minimal_cuts_by_definition(ap));
  CHECK(std::find(sets.begin(), sets.end(), VertexList{1, 3, 5, 7}) != sets.end());
  CHECK(std::find(sets.begin(), sets.end(), VertexList{2, 4, 6, 8}) != sets.end());
}

TEST_CASE("enumerate_minimal_cuts refuses large graphs") {
  CHECK_THROWS_AS(enumerate_minimal_cuts(cycle_graph(15)), InputError);
  CHECK_NOTHROW(enumerate_minimal_cuts(cycle_graph(15), 15));
  CHECK_THROWS_AS(enumerate_minimal_cuts(cycle_graph(25), 30), InputError);
}

TEST_CASE("inventory matches the definition on random connected graphs") {
  Rng rng(201);
  int checked = 0;
  while (checked < 150) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, 0.3 + 0.1 * static_cast<double>(rng.below(5)), rng);
    if (!is_connected(g)) continue;
    ++checked;
    const auto inv = enumerate_minimal_cuts(g);
    CHECK(inventory_sets(inv) == minimal_cuts_by_definition(g));
    const auto edges = g.edges();
    for (const auto& e : inv.cuts) {
      const Mask s = mask_of(e.vertices);
      CHECK(e.side_components == components_in(edges, n, all_vertices(n) & ~s));
      CHECK(e.cut_components == components_in(edges, n, s));
      bool edgeless = true;
      for (const auto& [u, v] : edges) {
        if (in_mask(s, u) && in_mask(s, v)) edgeless = false;
      }
      CHECK(e.stable == edgeless);
    }
  }
}

TEST_CASE("cleavability") {
  CHECK(is_cleavable(octahedron().graph));
  CHECK_FALSE(is_cleavable(antiprism(4).graph));
  const PlaneGraph counter = cleavable_counterexample();
  CHECK(counter.graph.order() == 8);
  CHECK(is_cleavable(counter.graph));
  CHECK(is_k_connected(counter.graph, 3));
  const auto faces = large_faces_of(counter);
  REQUIRE(faces.size() == 2);
  std::set<VertexId> a(faces[0].begin(), faces[0].end());
  for (VertexId v : faces[1]) CHECK(a.count(v) == 0);
}

TEST_CASE("min_vertex_separator") {
  CHECK(min_vertex_separator(octahedron().graph, 1, 6) == 4);
  CHECK(min_vertex_separator(cube_graph(), 1, 8) == 3);
  CHECK(min_vertex_separator(path_graph(3), 1, 3) == 1);
  CHECK(min_vertex_separator(octahedron().graph, 1, 2) == -1);
  Rng rng(203);
  for (int round = 0; round < 100; ++round) {
    const int n = 4 + static_cast<int>(rng.below(8));
    const Graph g = random_graph(n, 0.35, rng);
    const auto s = static_cast<VertexId>(1 + rng.below(static_cast<std::uint64_t>(n)));
    const auto t = static_cast<VertexId>(1 + rng.below(static_cast<std::uint64_t>(n)));
    if (s == t || g.adjacent(s, t)) continue;
    CHECK(min_vertex_separator(g, s, t) == min_separator_by_subsets(g, s, t));
  }
}

TEST_CASE("cut shape check") {
  const PlaneGraph oct = octahedron();
  const OracleCheck c = check_near_triangulation_cut_shapes(oct.graph, oct.rotation);
  CHECK(c.applicable);
  CHECK(c.passed);
  for (const auto& e : enumerate_minimal_cuts(oct.graph).cuts) {
    const auto sub = induced_subgraph(oct.graph, e.vertices);
    CHECK(sub.graph.size() == e.vertices.size());
  }
  const PlaneGraph ap = antiprism(4);
  CHECK_THROWS_AS(check_near_triangulation_cut_shapes(ap.graph, ap.rotation), InputError);

  Rng rng(207);
  int near = 0;
  while (near < 30) {
    GeneratorSpec spec;
    spec.n = 7 + static_cast<int>(rng.below(7));
    spec.faces = 1;
    spec.seed = rng.next();
    spec.carve.deep = rng.below(2) == 0;
    const CarveResult r = generate(spec);
    if (r.faces != 1) continue;
    ++near;
    const OracleCheck s = check_near_triangulation_cut_shapes(r.plane.graph, r.plane.rotation);
    CHECK(s.passed);
    CHECK(s.failures.empty());
  }
}

TEST_CASE("component bound check") {
  const PlaneGraph oct = octahedron();
  CHECK(check_component_bound(oct.graph, oct.rotation).passed);
  const PlaneGraph ap = antiprism(4);
  const OracleCheck c = check_component_bound(ap.graph, ap.rotation);
  CHECK(c.passed);
  int most = 0;
  for (const auto& e : enumerate_minimal_cuts(ap.graph).cuts) most = std::max(most, e.cut_components);
  CHECK(most == 2);
  const PlaneGraph c4 = c4_plane();
  CHECK(check_component_bound(c4.graph, c4.rotation).passed);
}

TEST_CASE("stable cut check") {
  const PlaneGraph oct = octahedron();
  CHECK(check_no_stable_cut(oct.graph, oct.rotation).passed);
  const PlaneGraph ap = antiprism(4);
  const OracleCheck a = check_no_stable_cut(ap.graph, ap.rotation);
  CHECK(a.applicable);
  CHECK(a.passed);

  const PlaneGraph c4 = c4_plane();
  const OracleCheck c = check_no_stable_cut(c4.graph, c4.rotation);
  CHECK_FALSE(c.applicable);
  bool stable = false;
  for (const auto& e : enumerate_minimal_cuts(c4.graph).cuts) stable = stable || e.stable;
  CHECK(stable);
}

TEST_CASE("three-connected graphs split into exactly two sides") {
  Rng rng(211);
  int checked = 0;
  while (checked < 40) {
    GeneratorSpec spec;
    spec.family = rng.below(2) == 0 ? "random-triangulation" : "carved";
    spec.n = 6 + static_cast<int>(rng.below(8));
    spec.faces = static_cast<int>(rng.below(4));
    spec.seed = rng.next();
    const CarveResult r = generate(spec);
    if (connectivity_by_subsets(r.plane.graph) < 3) continue;
    ++checked;
    const int n = r.plane.graph.order();
    for (const auto& s : minimal_cuts_by_definition(r.plane.graph)) {
      CHECK(components_in(r.plane.graph.edges(), n, all_vertices(n) & ~mask_of(s)) == 2);
    }
  }
}

TEST_CASE("auxiliary extension check") {
  const PlaneGraph ap = antiprism(4);
  const OracleCheck c = check_auxiliary_extension(ap.graph, ap.rotation);
  CHECK(c.applicable);
  CHECK(c.passed);
  const PlaneGraph counter = cleavable_counterexample();
  CHECK(check_auxiliary_extension(counter.graph, counter.rotation).passed);
  const PlaneGraph c4 = c4_plane();
  CHECK_FALSE(check_auxiliary_extension(c4.graph, c4.rotation).applicable);
}

TEST_CASE("menger check") {
  CHECK(check_menger(octahedron().graph).passed);
  CHECK(check_menger(cube_graph()).passed);
  CHECK(check_menger(antiprism(5).graph).passed);
}

TEST_CASE("inventory is deterministic") {
  const Graph g = antiprism(5).graph;
  const auto a = inventory_sets(enumerate_minimal_cuts(g));
  const auto b = inventory_sets(enumerate_minimal_cuts(g));
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
}
