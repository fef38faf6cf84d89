#include <benchmark/benchmark.h>

#include "pdspec/closed_forms.hpp"
#include "pdspec/oracle.hpp"
#include "pdspec/quadrature.hpp"
#include "pdspec/spectrum.hpp"

namespace {

using namespace pdspec;

ModelConfig bench_model(int L) {
  ModelConfig c;
  c.M = 1;
  c.mu = 1;
  c.A = 1;
  c.B = 0.05;
  c.L = L;
  return c;
}

void BM_BuildRule(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::build_rule(2.0, m));
}
BENCHMARK(BM_BuildRule)->Arg(16)->Arg(64)->Arg(128);

void BM_Audit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closed_forms::audit(10, 3));
}
BENCHMARK(BM_Audit)->Unit(benchmark::kMillisecond);

void BM_FiniteDifferenceOracle(benchmark::State& state) {
  const ModelConfig c = bench_model(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::solve(c, OracleSpec{}, 4));
}
BENCHMARK(BM_FiniteDifferenceOracle)->Unit(benchmark::kMillisecond);

void BM_ConsistentTotal(benchmark::State& state) {
  const ModelConfig c = bench_model(1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum::total_energy(c, 2, Mode::Consistent));
}
BENCHMARK(BM_ConsistentTotal)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
