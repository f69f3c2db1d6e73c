#include <benchmark/benchmark.h>

#include "chainpaths/bijection.hpp"
#include "chainpaths/enumeration.hpp"

namespace {

using namespace chainpaths;

void BM_EnumeratePc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    ClassEnumerator gen(ClassId::pc, n);
    for (const auto& m : gen) {
      benchmark::DoNotOptimize(m);
      ++count;
    }
  }
  state.counters["maps"] = static_cast<double>(count);
  state.SetItemsProcessed(static_cast<std::int64_t>(count) * state.iterations());
}
BENCHMARK(BM_EnumeratePc)->DenseRange(4, 9);

void BM_EnumerateDel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    ClassEnumerator gen(ClassId::del, n);
    for (const auto& m : gen) {
      benchmark::DoNotOptimize(m);
      ++count;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(count) * state.iterations());
}
BENCHMARK(BM_EnumerateDel)->DenseRange(4, 8);

void BM_EnumerateSubdiagonalPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    PathEnumerator gen(n, {.subdiagonal = true});
    for (const auto& p : gen) {
      benchmark::DoNotOptimize(p);
      ++count;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(count) * state.iterations());
}
BENCHMARK(BM_EnumerateSubdiagonalPaths)->DenseRange(4, 9);

void BM_RoundTripDel(benchmark::State& state) {
  const auto maps = enumerate_class(ClassId::del, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& m : maps) benchmark::DoNotOptimize(path_to_map(map_to_path(m)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(maps.size()) * state.iterations());
}
BENCHMARK(BM_RoundTripDel)->Arg(6)->Arg(8);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(ClassId::po, static_cast<int>(state.range(0)), Statistic::im_card));
}
BENCHMARK(BM_Census)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
