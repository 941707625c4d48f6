#include <benchmark/benchmark.h>

#include "freespan/exact.hpp"
#include "freespan/generators.hpp"
#include "freespan/greedy.hpp"
#include "freespan/mcf.hpp"
#include "freespan/paths.hpp"
#include "freespan/rounding.hpp"

using namespace freespan;

namespace {

SpannerInstance instance(std::size_t n, std::size_t m, std::int64_t max_length = 4) {
  GeneratorParams p;
  p.n = n;
  p.m = m;
  p.max_length = max_length;
  p.seed = 7;
  return generate(p);
}

void BM_Dijkstra(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpannerInstance inst = instance(n, 4 * n);
  const LengthGraph graph = LengthGraph::of_instance(inst);
  for (auto _ : state) benchmark::DoNotOptimize(dijkstra(graph, 0));
}
BENCHMARK(BM_Dijkstra)->RangeMultiplier(2)->Range(16, 256);

void BM_Greedy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpannerInstance inst = instance(n, 3 * n);
  for (auto _ : state) benchmark::DoNotOptimize(greedy(inst));
}
BENCHMARK(BM_Greedy)->RangeMultiplier(2)->Range(8, 64);

void BM_AugmentedGreedy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpannerInstance inst = instance(n, 3 * n);
  for (auto _ : state) benchmark::DoNotOptimize(augmented_greedy(inst));
}
BENCHMARK(BM_AugmentedGreedy)->RangeMultiplier(2)->Range(8, 64);

void BM_BuildMcf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpannerInstance inst = instance(n, 2 * n, 2);
  const IntegerInstance view = require_integer_lengths(inst);
  for (auto _ : state) benchmark::DoNotOptimize(build_mcf(view));
}
BENCHMARK(BM_BuildMcf)->DenseRange(4, 8, 2);

void BM_SolveLp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpannerInstance inst = instance(n, 2 * n, 2);
  const McfModel model = build_mcf(require_integer_lengths(inst));
  SimplexBackend backend;
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(model, backend));
}
BENCHMARK(BM_SolveLp)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_RandomizedRounding(benchmark::State& state) {
  const SpannerInstance inst = instance(6, 10, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_randomized(inst));
}
BENCHMARK(BM_RandomizedRounding)->Unit(benchmark::kMillisecond);

void BM_ExactOptimum(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const SpannerInstance inst = instance(8, m);
  for (auto _ : state) benchmark::DoNotOptimize(exact_optimum(inst));
}
BENCHMARK(BM_ExactOptimum)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
