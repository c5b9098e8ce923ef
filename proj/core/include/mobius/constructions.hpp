#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mobius/cover_solvers.hpp"
#include "mobius/incidence_metric.hpp"
#include "mobius/mobius_plane.hpp"

namespace mobius {

// A circle set that resolves all points, built from two tangent pencils at a
// base point (two parallel classes of the affine residue) with one circle
// removed from each: 2q-2 circles, every one through the base point.
// Needs q >= 3 so that the set keeps more than two circles.
struct PencilPointResolver {
  int base_point = 0;
  std::array<int, 2> class_indices{0, 1};   // residue parallel classes used
  std::array<int, 2> removed_circles{-1, -1};
  std::vector<int> circles;                 // sorted circle ids, size 2q-2
};

PencilPointResolver build_pencil_point_resolver(
    const MobiusPlane& plane, int base_point = 0,
    std::optional<std::pair<int, int>> class_pair = std::nullopt,
    std::optional<std::pair<int, int>> removed = std::nullopt);

// Greedy hitting set over the circle-pair edges: a vertex set resolving all
// circles. Defined for q >= 2; the closed-form size guarantee needs q >= 4.
std::vector<Vertex> greedy_circle_resolver(const MobiusPlane& plane);

// Pencil construction united with the greedy circle resolver; verified to
// resolve the whole vertex set before returning.
std::vector<Vertex> combined_resolving_set(const MobiusPlane& plane);

// Greedy point set meeting every circle, verified before returning.
std::vector<int> greedy_blocking_set(const MobiusPlane& plane);

// One evaluated closed-form bound. Bounds carrying a logarithm are emitted
// twice, with suffix _ln and _log2.
struct BoundEntry {
  std::string name;
  double value = 0.0;
  bool applicable = true;
  int min_q = 0;  // smallest q the statement covers (0 = all)
  int max_q = 0;  // largest q, 0 = unbounded
};

struct BoundTable {
  int q = 0;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
  double value(const std::string& name) const;  // throws on unknown name
};

BoundTable evaluate_bounds(int q);
std::string bound_tables_csv(std::span<const BoundTable> tables);

// Diagnostic counters for a candidate vertex set S:
//  - outer_points_covered_once: points outside S lying on exactly one S-circle
//  - circles_hit_* : circles meeting the point part of S 0/1/2 times
struct CoverageCounters {
  long long outer_points_covered_once = 0;
  long long circles_unhit = 0;
  long long circles_hit_once = 0;
  long long circles_hit_twice = 0;
};

enum class CounterCheck { None, Resolving, SplitResolving };

// With a CounterCheck other than None the set is first verified to have the
// property (std::invalid_argument otherwise), and the counter inequalities
// implied by it are asserted (std::logic_error on violation — that would mean
// the verifier and the census disagree).
CoverageCounters coverage_counters(const MobiusPlane& plane,
                                   std::span<const Vertex> s,
                                   CounterCheck check = CounterCheck::None);

}  // namespace mobius
