#include <benchmark/benchmark.h>

#include "invseq/enumerate.hpp"

using namespace invseq;

static void BM_CountPruned(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto ps = PatternSet::of({"201", "210"});
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(n, ps, 1));
}
BENCHMARK(BM_CountPruned)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

static void BM_CountParallel(benchmark::State& state) {
  auto ps = PatternSet::of({"201", "210"});
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(11, ps, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CountParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CountScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto ps = PatternSet::of({"201", "210"});
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders_scan(n, ps));
}
BENCHMARK(BM_CountScan)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_WilfClassify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wilf_classify(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_WilfClassify)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_Distribution(benchmark::State& state) {
  auto ps = PatternSet::of({"101", "110"});
  for (auto _ : state) benchmark::DoNotOptimize(distribution(static_cast<int>(state.range(0)), ps, Statistic::zero));
}
BENCHMARK(BM_Distribution)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
