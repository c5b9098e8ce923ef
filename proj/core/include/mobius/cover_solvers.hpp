#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mobius/incidence_metric.hpp"
#include "mobius/rational.hpp"

namespace mobius {

// Record of a greedy cover run: vertices in pick order and, per step, how
// many edges were hit for the first time. newly_covered is non-increasing
// and sums to the instance's edge count.
struct GreedyTrace {
  std::vector<int> chosen;        // universe positions, pick order
  std::vector<int> newly_covered;
};

// Greedy hitting set: repeatedly take the vertex covering the most uncovered
// edges, ties broken by lowest universe position. Throws std::invalid_argument
// on an empty (uncoverable) edge.
GreedyTrace greedy_cover(const CoverInstance& inst);

// Uniform fractional assignment num/den on every universe vertex, checked
// edge-by-edge in exact integer arithmetic.
struct FractionalAssignment {
  std::int64_t value_num = 0;
  std::int64_t value_den = 1;
  bool feasible = false;   // every edge sums to >= 1
  bool all_tight = false;  // every edge sums to exactly 1
  int first_violated_edge = -1;
  Rational objective;      // universe size * value
};

FractionalAssignment uniform_fractional_check(const CoverInstance& inst,
                                              std::int64_t numerator,
                                              std::int64_t denominator);

// Lovász guarantee: greedy size < tau_star * (1 + ln d), d = instance degree.
bool greedy_within_fractional_guarantee(std::size_t greedy_size,
                                        const Rational& tau_star, int degree);

struct SolveBudget {
  double wall_seconds = 60.0;
  std::uint64_t max_nodes = UINT64_MAX;
};

enum class SolveStatus { Optimal, Bounded };

// Exact solve outcome. lower <= upper always; status Optimal means
// lower == upper and witness is a hitting set of that size. On a budget stop
// the bounds are still certified: no hitting set smaller than lower exists.
struct SolveOutcome {
  SolveStatus status = SolveStatus::Bounded;
  std::vector<int> witness;  // universe positions, sorted
  int upper = 0;
  int lower = 0;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Branch-and-bound minimum hitting set. Upper bound seeded by greedy_cover;
// branches over the members of a minimum-cardinality uncovered edge; node
// lower bounds come from a pairwise-disjoint uncovered-edge packing plus a
// degree counting bound. initial_upper, when given, additionally prunes the
// search at that size; if nothing smaller is found the returned upper stays
// at the best witness actually held.
SolveOutcome exact_min_hitting_set(const CoverInstance& inst, SolveBudget budget,
                                   std::optional<int> initial_upper = std::nullopt);

// Size of a greedily built family of pairwise-disjoint uncovered edges; every
// hitting set needs a distinct vertex per family member. covered_edges is a
// mask over edge indices.
int disjoint_edge_lower_bound(const CoverInstance& inst, const Bitset& covered_edges);

std::string solve_status_name(SolveStatus s);

}  // namespace mobius
