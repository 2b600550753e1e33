#include <benchmark/benchmark.h>

#include "invseq/recurrences.hpp"
#include "invseq/series.hpp"

using namespace invseq;

static void BM_GenSava(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gf(GfName::GEN_SAVA, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenSava)->Arg(24)->Arg(48)->Arg(96);

static void BM_Residual(benchmark::State& state) {
  const auto id = static_cast<EquationId>(state.range(0));
  const BigRational u(1, 2), v(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(residual(id, u, v, 16));
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_Residual)
    ->Arg(static_cast<int>(EquationId::FUN_110_102))
    ->Arg(static_cast<int>(EquationId::FUN_120_102))
    ->Arg(static_cast<int>(EquationId::FUNC_011_201))
    ->Arg(static_cast<int>(EquationId::EQ_SAV))
    ->Unit(benchmark::kMillisecond);

static void BM_GenTree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gentree_counts(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenTree)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
