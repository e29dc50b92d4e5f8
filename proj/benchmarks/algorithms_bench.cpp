#include <benchmark/benchmark.h>

#include "k2free/feedback.hpp"
#include "k2free/generators.hpp"
#include "k2free/independent_sets.hpp"
#include "k2free/recognition.hpp"
#include "k2free/separators.hpp"

namespace {

using namespace k2free;

void BM_EnumerateMvs(benchmark::State& state) {
  const Graph g = gen_split_graph(static_cast<std::size_t>(state.range(0)), 0.5, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mvs(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateMvs)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_EnumerateMvsUnchecked(benchmark::State& state) {
  const Graph g = gen_split_graph(static_cast<std::size_t>(state.range(0)), 0.5, 0.3, 1);
  MvsOptions options;
  options.check_input = false;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mvs(g, options));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateMvsUnchecked)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Structural(benchmark::State& state) {
  const Graph g = gen_split_graph(static_cast<std::size_t>(state.range(0)), 0.5, 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(test_2k2_structural(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Structural)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Pairwise(benchmark::State& state) {
  const Graph g = gen_split_graph(static_cast<std::size_t>(state.range(0)), 0.5, 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_2k2_pair(g));
}
BENCHMARK(BM_Pairwise)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_MinConnectedSeparator(benchmark::State& state) {
  const Graph g = gen_split_graph(static_cast<std::size_t>(state.range(0)), 0.5, 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(min_connected_separator(g));
}
BENCHMARK(BM_MinConnectedSeparator)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

void BM_EnumerateMis(benchmark::State& state) {
  const Graph g = gen_split_graph(static_cast<std::size_t>(state.range(0)), 0.5, 0.5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mis(g));
}
BENCHMARK(BM_EnumerateMis)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_FvsChainGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t right = std::max<std::size_t>(2, n / 100);
  const Graph g = gen_chain_graph(n - right, right, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fvs_c3c5(g));
  state.SetComplexityN(static_cast<int64_t>(n + g.m()));
}
BENCHMARK(BM_FvsChainGraph)->RangeMultiplier(2)->Range(1000, 16000)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace

BENCHMARK_MAIN();
