#include <benchmark/benchmark.h>

#include "nsg/enumeration.hpp"
#include "nsg/family.hpp"
#include "nsg/reduction.hpp"

namespace {

void BM_Profile(benchmark::State& state) {
  const nsg::Int a = state.range(0);
  const auto tuple = nsg::GeneratorTuple::from({a, a + 7, 3 * a + 2});
  for (auto _ : state) benchmark::DoNotOptimize(nsg::profile(tuple));
  state.SetComplexityN(a);
}
BENCHMARK(BM_Profile)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ScanRange(benchmark::State& state) {
  const auto p = nsg::FamilyParams::make(2, 3, 87);
  for (auto _ : state) benchmark::DoNotOptimize(nsg::scan_range(p, -1, 21));
}
BENCHMARK(BM_ScanRange);

void BM_SolveReduction(benchmark::State& state) {
  const auto p = nsg::FamilyParams::make(3, 1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nsg::solve_reduction(p));
}
BENCHMARK(BM_SolveReduction)->Arg(85)->Arg(4001)->Arg(100003);

void BM_EnumerateAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nsg::enumerate_all());
}
BENCHMARK(BM_EnumerateAll);

}  // namespace

// The packaged benchmark_main archive is LTO bytecode from another GCC, so define main here.
BENCHMARK_MAIN();
