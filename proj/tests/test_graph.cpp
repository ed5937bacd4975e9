#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "mdcut/errors.hpp"
#include "mdcut/generators.hpp"
#include "mdcut/graph.hpp"
#include "mdcut/graph_io.hpp"
#include "support.hpp"

using namespace mdcut;
using namespace mdcut::testing;

namespace {

std::vector<int> entries(const IndexArray& a) { return {a.entries().begin(), a.entries().end()}; }

}  // namespace

TEST_CASE("subset array") {
  CHECK(entries(subset_array(VertexList{3, 1, 8, 5}, 8)) == std::vector<int>{1, 0, 1, 0, 1, 0, 0, 1});
  CHECK(entries(subset_array(VertexList{}, 4)) == std::vector<int>{0, 0, 0, 0});
  CHECK(entries(subset_array(VertexList{1, 2, 3}, 3)) == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(subset_array(VertexList{0}, 3), InputError);
  CHECK_THROWS_AS(subset_array(VertexList{4}, 3), InputError);
}

TEST_CASE("lookup array") {
  CHECK(entries(lookup_array(VertexList{3, 1, 8, 5}, 8)) == std::vector<int>{2, 0, 1, 0, 4, 0, 0, 3});
  CHECK(entries(lookup_array(VertexList{1, 2, 3, 4, 5}, 5)) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(entries(lookup_array(VertexList{}, 3)) == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(lookup_array(VertexList{9}, 8), InputError);
}

TEST_CASE("subset and lookup agree on random lists") {
  Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng.below(40));
    VertexList a;
    for (VertexId v = 1; v <= n; ++v) {
      if (rng.below(3) == 0) a.push_back(v);
    }
    for (std::size_t i = a.size(); i > 1; --i) std::swap(a[i - 1], a[rng.below(i)]);
    const IndexArray sub = subset_array(a, n);
    const IndexArray look = lookup_array(a, n);
    for (VertexId v = 1; v <= n; ++v) {
      CHECK((look[v] > 0) == (sub[v] == 1));
      if (look[v] > 0) CHECK(a[static_cast<std::size_t>(look[v] - 1)] == v);
    }
  }
}

TEST_CASE("append") {
  VertexList a{1, 2};
  append(a, 3);
  CHECK(a == VertexList{1, 2, 3});
  VertexList b;
  append(b, 7);
  CHECK(b == VertexList{7});
  VertexList c{5, 2};
  append(c, 9);
  CHECK(c == VertexList{5, 2, 9});
}

TEST_CASE("graph construction rejects non-simple input") {
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{1, 4}}), InputError);
  CHECK_THROWS_AS(Graph::from_adjacency({{2}, {}}), InputError);
  const Graph g = Graph::from_adjacency({{2, 3}, {1}, {1}});
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 3));
  CHECK_FALSE(g.adjacent(2, 3));
}

TEST_CASE("components") {
  const PlaneGraph oct = octahedron();
  for (VertexId v = 1; v <= 6; ++v) {
    const VertexList nv(oct.graph.neighbors(v).begin(), oct.graph.neighbors(v).end());
    const Components c = components(oct.graph, nv);
    REQUIRE(c.count() == 2);
    VertexId antipode = 0;
    for (VertexId w = 1; w <= 6; ++w) {
      if (w != v && !oct.graph.adjacent(v, w)) antipode = w;
    }
    CHECK(c.classes[0] == VertexList{std::min(v, antipode)});
    CHECK(c.classes[1] == VertexList{std::max(v, antipode)});
  }
  CHECK(components(cycle_graph(5)).count() == 1);

  // t_i = i, b_i = 4 + i; {t1, b1, t3, b3} leaves {t2, b2} and {t4, b4}.
  const PlaneGraph ap = antiprism(4);
  const Components c = components(ap.graph, VertexList{1, 5, 3, 7});
  REQUIRE(c.count() == 2);
  CHECK(c.classes[0] == VertexList{2, 6});
  CHECK(c.classes[1] == VertexList{4, 8});
  CHECK(c.label[1] == -1);
}

TEST_CASE("components form a partition matching union-find") {
  Rng rng(11);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng.below(18));
    const Graph g = random_graph(n, 0.15, rng);
    VertexList removed;
    for (VertexId v = 1; v <= n; ++v) {
      if (rng.below(5) == 0) removed.push_back(v);
    }
    const Components c = components(g, removed);
    const Mask keep = all_vertices(n) & ~mask_of(removed);
    CHECK(static_cast<int>(c.count()) == components_in(g.edges(), n, keep));
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < c.count(); ++i) {
      for (VertexId v : c.classes[i]) {
        ++seen[static_cast<std::size_t>(v)];
        CHECK(c.label[static_cast<std::size_t>(v)] == static_cast<int>(i));
      }
    }
    for (VertexId v = 1; v <= n; ++v) CHECK(seen[static_cast<std::size_t>(v)] == (in_mask(keep, v) ? 1 : 0));
    for (const auto& [u, v] : g.edges()) {
      if (in_mask(keep, u) && in_mask(keep, v)) {
        CHECK(c.label[static_cast<std::size_t>(u)] == c.label[static_cast<std::size_t>(v)]);
      }
    }
    CHECK(is_connected(g) == (components_in(g.edges(), n, all_vertices(n)) == 1));
    CHECK(count_components(g) == components_in(g.edges(), n, all_vertices(n)));
  }
}

TEST_CASE("induced subgraph") {
  const Graph tri = cycle_graph(3);
  const auto all = induced_subgraph(tri, VertexList{1, 2, 3});
  CHECK(all.graph.order() == 3);
  CHECK(all.graph.size() == 3);
  const auto one = induced_subgraph(tri, VertexList{2});
  CHECK(one.graph.order() == 1);
  CHECK(one.graph.size() == 0);
  CHECK(one.to_parent[0] == 2);

  const auto s = induced_subgraph(antiprism(4).graph, VertexList{1, 5, 3, 7});
  CHECK(s.graph.size() == 2);
  CHECK(count_components(s.graph) == 2);
  for (const auto& [u, v] : s.graph.edges()) {
    const Edge parent{std::min(s.to_parent[u - 1], s.to_parent[v - 1]), std::max(s.to_parent[u - 1], s.to_parent[v - 1])};
    CHECK((parent == Edge{1, 5} || parent == Edge{3, 7}));
  }
  CHECK_THROWS_AS(induced_subgraph(tri, VertexList{1, 1}), InputError);
}

TEST_CASE("induces cycle") {
  const PlaneGraph oct = octahedron();
  CHECK(induces_cycle(oct.graph, VertexList{2, 3, 4, 5}));
  CHECK_FALSE(induces_cycle(oct.graph, VertexList{1, 2, 3, 4}));
  CHECK(induces_cycle(oct.graph, VertexList{1, 2, 3}));
  CHECK_FALSE(induces_cycle(oct.graph, VertexList{1, 6}));
}

TEST_CASE("with_vertices appends attached vertices") {
  const Graph c = cycle_graph(4);
  const Graph g = c.with_vertices({{1, 3}, {2, 4}});
  CHECK(g.order() == 6);
  CHECK(g.size() == 8);
  CHECK(g.adjacent(5, 1));
  CHECK(g.adjacent(3, 5));
  CHECK(g.adjacent(6, 4));
  CHECK_FALSE(g.adjacent(5, 6));
  CHECK_THROWS_AS(c.with_vertices({{7}}), InputError);
}

TEST_CASE("arc overlay") {
  const Graph p = path_graph(4);
  ArcOverlay h(p);
  h.add_arc(1, 3);
  CHECK(h.has_arc(1, 3));
  CHECK_FALSE(h.has_arc(3, 1));
  CHECK(h.arc_count() == 1);
  VertexList out;
  h.for_each_out_neighbor(1, [&](VertexId w) { out.push_back(w); });
  CHECK(out == VertexList{2, 3});
  CHECK_THROWS_AS(h.add_arc(2, 2), InputError);
}

TEST_CASE("graph file round trip") {
  const PlaneGraph ap = antiprism(5);
  std::stringstream ss;
  write_graph(ss, ap.graph, &ap.rotation);
  const GraphFile back = read_graph(ss);
  CHECK(back.graph.edges() == ap.graph.edges());
  REQUIRE(back.rotation.has_value());
  CHECK(*back.rotation == ap.rotation);
}

TEST_CASE("graph file errors carry line numbers") {
  std::stringstream bad("# header\n3 2\n1 2\n2 x\n");
  try {
    read_graph(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  std::stringstream short_file("3 2\n1 2\n");
  CHECK_THROWS_AS(read_graph(short_file), ParseError);
}
