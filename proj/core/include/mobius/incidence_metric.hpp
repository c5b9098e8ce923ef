#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mobius/bitset.hpp"
#include "mobius/mobius_plane.hpp"

namespace mobius {

// Vertex of the point-circle incidence graph. Points order before circles.
enum class VertexKind : int { Point = 0, Circle = 1 };

struct Vertex {
  VertexKind kind = VertexKind::Point;
  int id = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex point_vertex(int id) { return {VertexKind::Point, id}; }
inline Vertex circle_vertex(int id) { return {VertexKind::Circle, id}; }

// Unified vertex indexing: points first, then circles.
inline int unified_index(const MobiusPlane& plane, Vertex v) {
  return v.kind == VertexKind::Point ? v.id : plane.point_count() + v.id;
}
inline Vertex vertex_from_unified(const MobiusPlane& plane, int idx) {
  return idx < plane.point_count()
             ? point_vertex(idx)
             : circle_vertex(idx - plane.point_count());
}
inline int vertex_universe_size(const MobiusPlane& plane) {
  return plane.point_count() + plane.circle_count();
}
std::string vertex_to_string(const Vertex& v);

// Graph distance in the incidence graph, by the closed-form table:
// point-point 0/2, circle-circle 0/2/4 by intersection, point-circle 1/3.
int distance(const MobiusPlane& plane, Vertex u, Vertex v);

// Breadth-first-search distance over the explicit bipartite incidence graph;
// the independent oracle for the closed form.
int bfs_distance(const MobiusPlane& plane, Vertex u, Vertex v);
std::vector<int> bfs_distances_from(const MobiusPlane& plane, Vertex source);

struct Verdict {
  bool ok = true;
  std::optional<std::pair<Vertex, Vertex>> violation;  // lexicographically first
};

// Does S resolve W: every two distinct vertices of W differ in distance to
// some vertex of S? Cross-class pairs are resolved by any nonempty S since
// point and circle distances to a common vertex always differ in parity.
Verdict is_resolving(const MobiusPlane& plane, std::span<const Vertex> s,
                     std::span<const Vertex> w);
// W = all vertices.
Verdict is_resolving(const MobiusPlane& plane, std::span<const Vertex> s);
// S∩points must resolve the circles and S∩circles must resolve the points.
Verdict is_split_resolving(const MobiusPlane& plane, std::span<const Vertex> s);

std::vector<Vertex> all_points(const MobiusPlane& plane);
std::vector<Vertex> all_circles(const MobiusPlane& plane);
std::vector<Vertex> all_vertices(const MobiusPlane& plane);

// A hyperedge of a covering instance: the candidate vertices that settle one
// constraint (distinguish one vertex pair / meet one circle). Members are a
// mask over universe positions.
struct Hyperedge {
  Vertex label_a;
  Vertex label_b;
  bool pair_label = true;  // false: single-vertex label (blocking constraints)
  Bitset members;
  int size = 0;
};

// Hitting-set instance: choose universe vertices so that every edge has one.
// By construction, hitting sets coincide with the geometric property named by
// tag ("resolve-all", "circles-resolve-points", "points-resolve-circles",
// "resolve-circles", "blocking").
struct CoverInstance {
  std::string tag;
  int q = 0;
  std::vector<Vertex> universe;
  std::vector<Hyperedge> edges;
  // Valid lower bound on every hitting set, derived by the builder from the
  // incidence structure behind the edges (counting incidences of once-covered
  // elements); 0 when no closed form applies. Solvers may fold it into their
  // certified bounds.
  int derived_lower = 0;

  int universe_size() const { return static_cast<int>(universe.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  // Degree of the instance: max number of edges through one universe vertex.
  int max_degree() const;
  std::vector<int> vertex_degrees() const;
  bool hits_all(std::span<const int> universe_positions) const;
  // Positions of the given vertices in the universe (throws if absent).
  std::vector<int> positions_of(std::span<const Vertex> vs) const;
};

// Hitting sets = resolving sets of the whole graph: one edge per point pair
// and per circle pair over the full vertex universe.
CoverInstance build_resolve_all_instance(const MobiusPlane& plane);
// Only the circle-pair edges over the full universe (hitting sets = sets that
// resolve the circles).
CoverInstance build_circle_pair_instance(const MobiusPlane& plane);
// First: universe = circles, edges = point pairs (hitting sets = circle sets
// resolving all points). Second: universe = points, edges = circle pairs.
std::pair<CoverInstance, CoverInstance> build_split_instances(const MobiusPlane& plane);
// Universe = points, one edge per circle; hitting sets = blocking sets.
CoverInstance build_blocking_instance(const MobiusPlane& plane);

}  // namespace mobius
