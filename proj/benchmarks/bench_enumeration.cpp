#include <benchmark/benchmark.h>

#include "om/enumeration.hpp"

using namespace om;

static void BM_CountPFree(benchmark::State& state) {
  const Pattern p("ABABAB");
  for (auto _ : state) {
    auto v = count_P_free(3, (int)state.range(0), p);
    benchmark::DoNotOptimize(&v);
  }
}
BENCHMARK(BM_CountPFree)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateMatchings(benchmark::State& state) {
  for (auto _ : state) {
    long long count = 0;
    enumerate_matchings(3, (int)state.range(0), [&](const OrderedMatching&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateMatchings)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_LayeredGenerate(benchmark::State& state) {
  for (auto _ : state) {
    auto m = layered_generate(3, 3, (int)state.range(0));
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK(BM_LayeredGenerate)->Arg(6)->Arg(10);
