#include <benchmark/benchmark.h>

#include "popmax/gstar.hpp"
#include "popmax/mincost.hpp"
#include "popmax/oracle.hpp"
#include "popmax/random_instance.hpp"

namespace {

popmax::Instance dense(int n) {
  return popmax::random_instance({n, n, 1.0, 17, 9});
}

void BM_BrutePopularMaxParallel(benchmark::State& state) {
  const auto inst = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(popmax::oracle::brute_popular_max(inst, 64));
  }
}

void BM_BrutePopularMaxSerial(benchmark::State& state) {
  const auto inst = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(popmax::oracle::brute_popular_max_serial(inst, 64));
  }
}

void BM_PopularMaxMatching(benchmark::State& state) {
  const auto inst = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(popmax::popular_max_matching(inst));
}

void BM_MinCostPopularMax(benchmark::State& state) {
  const auto inst = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(popmax::min_cost_popular_max(inst));
}

}  // namespace

BENCHMARK(BM_BrutePopularMaxParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BrutePopularMaxSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PopularMaxMatching)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MinCostPopularMax)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
