// Serial reference versus OpenMP induced-subgraph sweeps.

#include <benchmark/benchmark.h>

#include "funbox/kernels.hpp"
#include "funbox/random.hpp"

namespace {

using namespace funbox;

kernels::MaskGraph sample(std::int64_t n) {
  return kernels::MaskGraph::from(random_graph(static_cast<std::size_t>(n), 1, 2, 2024));
}

void BM_fun_graph_serial(benchmark::State& state) {
  const auto g = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fun_graph_serial(g));
}

void BM_fun_graph_parallel(benchmark::State& state) {
  const auto g = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fun_graph_parallel(g));
}

void BM_sd_graph_serial(benchmark::State& state) {
  const auto g = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sd_graph_serial(g));
}

void BM_sd_graph_parallel(benchmark::State& state) {
  const auto g = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sd_graph_parallel(g));
}

}  // namespace

BENCHMARK(BM_fun_graph_serial)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fun_graph_parallel)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sd_graph_serial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sd_graph_parallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
