#include <benchmark/benchmark.h>

#include "gpow/certifier.hpp"
#include "gpow/enumerate.hpp"
#include "gpow/extremal.hpp"
#include "gpow/graph_io.hpp"

using namespace gpow;

static void BM_Ball3(benchmark::State& state) {
  Graph g = build_extremal(int(state.range(0)));
  int n = g.vertex_count();
  for (auto _ : state) {
    for (int v = 0; v < n; ++v)
      benchmark::DoNotOptimize(ball(g, VertexSet::singleton(n, v), 3));
  }
}
BENCHMARK(BM_Ball3)->Arg(5)->Arg(20)->Arg(50);

static void BM_CubePower(benchmark::State& state) {
  Graph g = build_extremal(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(power(g, 3));
}
BENCHMARK(BM_CubePower)->Arg(5)->Arg(20)->Arg(50);

static void BM_Certify(benchmark::State& state) {
  Graph g = build_extremal(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify(g));
}
BENCHMARK(BM_Certify)->Arg(1)->Arg(5)->Arg(10);

static void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_connected(int(state.range(0))));
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6);

static void BM_RatioScan(benchmark::State& state) {
  ScanOptions opt;
  opt.workers = int(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(ratio_scan_connected(int(state.range(0)), opt));
}
BENCHMARK(BM_RatioScan)->Args({6, 1})->Args({6, 4});

static void BM_Graph6RoundTrip(benchmark::State& state) {
  Graph g = build_extremal(7);  // n = 59, near the graph6 limit
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(emit_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip);

BENCHMARK_MAIN();
