#include <benchmark/benchmark.h>

#include "mobius/constructions.hpp"
#include "mobius/cover_solvers.hpp"
#include "mobius/mobius_plane.hpp"

using namespace mobius;

static void BM_GreedyBlocking(benchmark::State& state) {
  auto plane = MobiusPlane::miquelian(static_cast<int>(state.range(0)));
  auto inst = build_blocking_instance(plane);
  for (auto _ : state) {
    auto trace = greedy_cover(inst);
    benchmark::DoNotOptimize(trace.chosen.size());
  }
}
BENCHMARK(BM_GreedyBlocking)->Arg(5)->Arg(9);

static void BM_GreedyCircleResolver(benchmark::State& state) {
  auto plane = MobiusPlane::miquelian(static_cast<int>(state.range(0)));
  auto inst = build_circle_pair_instance(plane);
  for (auto _ : state) {
    auto trace = greedy_cover(inst);
    benchmark::DoNotOptimize(trace.chosen.size());
  }
}
BENCHMARK(BM_GreedyCircleResolver)->Arg(5)->Arg(7);

static void BM_ExactResolveOrder2(benchmark::State& state) {
  auto plane = MobiusPlane::order2_subsets();
  auto inst = build_resolve_all_instance(plane);
  for (auto _ : state) {
    auto out = exact_min_hitting_set(inst, SolveBudget{60.0, UINT64_MAX});
    benchmark::DoNotOptimize(out.upper);
  }
}
BENCHMARK(BM_ExactResolveOrder2);

static void BM_ExactResolveOrder3(benchmark::State& state) {
  auto plane = MobiusPlane::miquelian(3);
  auto inst = build_resolve_all_instance(plane);
  for (auto _ : state) {
    auto out = exact_min_hitting_set(inst, SolveBudget{600.0, UINT64_MAX});
    benchmark::DoNotOptimize(out.upper);
  }
}
BENCHMARK(BM_ExactResolveOrder3);

static void BM_ExactSplitOrder4(benchmark::State& state) {
  auto plane = MobiusPlane::miquelian(4);
  auto [circles_side, points_side] = build_split_instances(plane);
  for (auto _ : state) {
    auto oc = exact_min_hitting_set(circles_side, SolveBudget{600.0, UINT64_MAX});
    auto op = exact_min_hitting_set(points_side, SolveBudget{600.0, UINT64_MAX});
    benchmark::DoNotOptimize(oc.upper + op.upper);
  }
}
BENCHMARK(BM_ExactSplitOrder4);

static void BM_UniformFractionalBlocking(benchmark::State& state) {
  auto plane = MobiusPlane::miquelian(static_cast<int>(state.range(0)));
  auto inst = build_blocking_instance(plane);
  for (auto _ : state) {
    auto fr = uniform_fractional_check(inst, 1, plane.order() + 1);
    benchmark::DoNotOptimize(fr.feasible);
  }
}
BENCHMARK(BM_UniformFractionalBlocking)->Arg(9);

BENCHMARK_MAIN();
