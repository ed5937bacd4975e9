#pragma once

// Seeded, reproducible test instances with their plane embeddings.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "mdcut/embedding.hpp"
#include "mdcut/graph.hpp"

namespace mdcut {

struct PlaneGraph {
  Graph graph;
  RotationSystem rotation;
};

/// Builds the graph of a rotation system (the rotation is the adjacency).
PlaneGraph plane_graph(const std::vector<VertexList>& rotation);

/// Octahedron: 1 and 6 are the poles, 2..5 the equator.
PlaneGraph octahedron();
/// Icosahedron: 1 top, 2..6 upper ring, 7..11 lower ring, 12 bottom.
PlaneGraph icosahedron();
/// k-gonal antiprism, k >= 3: top ring 1..k, bottom ring k+1..2k, t_i ~ b_i
/// and t_i ~ b_{i+1}. Its two k-gons are the only large faces.
PlaneGraph antiprism(int k);
/// The 8-vertex 3-connected cleavable graph with two disjoint quadrilateral
/// faces (1,2,3,4) and (5,8,7,6).
PlaneGraph cleavable_counterexample();

/// "octahedron", "icosahedron", "antiprism<k>" or "counter-3conn".
/// Throws InputError on an unknown name.
PlaneGraph named_graph(std::string_view name);

/// 64-bit Mersenne twister plus an unbiased bounded draw, so that streams
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Renumbers vertices in breadth-first order from vertex 1, keeping the
/// embedding. Neighbors end up with nearby ids.
PlaneGraph relabel_breadth_first(const PlaneGraph& plane);

/// Maximal planar graph from K4 by repeatedly inserting a vertex into a
/// uniformly chosen face. Always 3-connected, never 4-connected for n > 4.

PlaneGraph random_triangulation(int n, std::uint64_t seed);

/// 4-connected triangulation on n >= 6 vertices: octahedron, then random
/// edge subdivisions (the new vertex also joins the two opposite corners),
/// then random flips that create no separating triangle.
PlaneGraph random_4connected_triangulation(int n, std::uint64_t seed);

/// True iff some triangle of g does not bound a face, i.e. the triangle
/// count exceeds 2n - 4. For a triangulation with n >= 5 this is exactly
/// the failure of 4-connectivity.
bool has_separating_triangle(const Graph& g);

struct CarveOptions {
  /// Large faces may share vertices.
  bool allow_touching = false;
  /// Each new quadrilateral is grown by up to `growth_steps` more merges.
  bool deep = false;
  int growth_steps = 2;
};

struct CarveResult {
  PlaneGraph plane;
  int faces = 0;
};

/// Deletes edges of a 4-connected triangulation, each merging two triangles
/// into a quadrilateral, keeping the graph 4-connected. Gives up after
/// 50·k attempts and reports the number of faces achieved.
CarveResult carve_large_faces(const PlaneGraph& triangulation, int k, std::uint64_t seed,
                              const CarveOptions& options = {});

/// What `gen` builds.
struct GeneratorSpec {
  /// octahedron, icosahedron, antiprism, counter-3conn, random-triangulation,
  /// random-4conn or carved.
  std::string family = "carved";
  int n = 0;
  int faces = 0;
  std::uint64_t seed = 1;
  CarveOptions carve;
};

CarveResult generate(const GeneratorSpec& spec);

}  // namespace mdcut
