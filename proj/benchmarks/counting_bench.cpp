#include <benchmark/benchmark.h>

#include "chainpaths/counting.hpp"

namespace {

using namespace chainpaths;

void BM_SchroederRecurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(schroeder_large(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SchroederRecurrence)->RangeMultiplier(4)->Range(16, 1024);

void BM_SchroederClosed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(schroeder_large_closed(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SchroederClosed)->RangeMultiplier(4)->Range(16, 1024);

void BM_CentralDelannoy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delannoy(n, n));
}
BENCHMARK(BM_CentralDelannoy)->RangeMultiplier(4)->Range(16, 1024);

void BM_PoOrder(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(po_order(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PoOrder)->RangeMultiplier(4)->Range(16, 1024);

void BM_GPoTriangle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g_po_triangle(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GPoTriangle)->Arg(32)->Arg(128);

void BM_JPoTriangle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(j_po_triangle(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_JPoTriangle)->Arg(32)->Arg(128);

void BM_TableCsv(benchmark::State& state) {
  for (auto _ : state) {
    const auto entries = table(FamilyId::g_pc, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(table_csv(FamilyId::g_pc, entries));
  }
}
BENCHMARK(BM_TableCsv)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
