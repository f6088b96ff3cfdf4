#include <benchmark/benchmark.h>

#include "resiclose/closeness.hpp"
#include "resiclose/distance.hpp"
#include "resiclose/generators.hpp"
#include "resiclose/transform.hpp"

using namespace resiclose;

namespace {

Graph middle_cycle(benchmark::State& state) {
  return middle_graph(cycle_graph(static_cast<std::size_t>(state.range(0))));
}

void BM_AllPairsBfs(benchmark::State& state) {
  const Graph g = middle_cycle(state);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_bfs(g));
  state.SetComplexityN(state.range(0));
}

void BM_FloydWarshall(benchmark::State& state) {
  const Graph g = middle_cycle(state);
  for (auto _ : state) benchmark::DoNotOptimize(floyd_warshall(g));
  state.SetComplexityN(state.range(0));
}

void BM_ClosenessProfile(benchmark::State& state) {
  const Graph g = middle_cycle(state);
  const DistanceMatrix d = all_pairs_bfs(g);
  for (auto _ : state) benchmark::DoNotOptimize(closeness_profile(d));
  state.SetComplexityN(state.range(0));
}

void BM_ResidualDelete(benchmark::State& state) {
  const Graph g = middle_cycle(state);
  const ResidualOptions options{.mode = RemovalMode::Delete, .execution = {.threads = 1}};
  for (auto _ : state) benchmark::DoNotOptimize(residual_closeness(g, options));
  state.SetComplexityN(state.range(0));
}

void BM_ResidualIsolate(benchmark::State& state) {
  const Graph g = middle_cycle(state);
  const ResidualOptions options{.mode = RemovalMode::Isolate, .execution = {.threads = 1}};
  for (auto _ : state) benchmark::DoNotOptimize(residual_closeness(g, options));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_AllPairsBfs)->RangeMultiplier(2)->Range(8, 128)->Complexity();
BENCHMARK(BM_FloydWarshall)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_ClosenessProfile)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_ResidualDelete)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_ResidualIsolate)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
