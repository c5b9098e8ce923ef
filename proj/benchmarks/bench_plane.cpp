#include <benchmark/benchmark.h>

#include "mobius/incidence_metric.hpp"
#include "mobius/mobius_plane.hpp"

using namespace mobius;

static void BM_BuildMiquelian(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto plane = MobiusPlane::miquelian(q);
    benchmark::DoNotOptimize(plane.circle_count());
  }
}
BENCHMARK(BM_BuildMiquelian)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

static void BM_VerifyAxioms(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  auto plane = MobiusPlane::miquelian(q);
  for (auto _ : state) {
    auto report = plane.verify_axioms();
    benchmark::DoNotOptimize(report.all_pass());
  }
}
BENCHMARK(BM_VerifyAxioms)->Arg(5)->Arg(9);

static void BM_VerifyCounts(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  auto plane = MobiusPlane::miquelian(q);
  for (auto _ : state) {
    auto report = plane.verify_counts();
    benchmark::DoNotOptimize(report.all_pass());
  }
}
BENCHMARK(BM_VerifyCounts)->Arg(5)->Arg(9);

static void BM_ClosedFormDistanceAllPairs(benchmark::State& state) {
  auto plane = MobiusPlane::miquelian(static_cast<int>(state.range(0)));
  auto vs = all_vertices(plane);
  for (auto _ : state) {
    long long sum = 0;
    for (const Vertex& u : vs)
      for (const Vertex& v : vs) sum += distance(plane, u, v);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long long>(vs.size()) * vs.size());
}
BENCHMARK(BM_ClosedFormDistanceAllPairs)->Arg(3)->Arg(5);

static void BM_BfsDistanceAllPairs(benchmark::State& state) {
  auto plane = MobiusPlane::miquelian(static_cast<int>(state.range(0)));
  auto vs = all_vertices(plane);
  for (auto _ : state) {
    long long sum = 0;
    for (const Vertex& u : vs) {
      auto d = bfs_distances_from(plane, u);
      for (int x : d) sum += x;
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_BfsDistanceAllPairs)->Arg(3)->Arg(5);

static void BM_BuildResolveAllInstance(benchmark::State& state) {
  auto plane = MobiusPlane::miquelian(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto inst = build_resolve_all_instance(plane);
    benchmark::DoNotOptimize(inst.edge_count());
  }
}
BENCHMARK(BM_BuildResolveAllInstance)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
