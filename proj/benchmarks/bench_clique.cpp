#include <benchmark/benchmark.h>

#include "om/clique.hpp"
#include "om/ramsey.hpp"
#include "om/random.hpp"

using namespace om;

static void BM_LargestPClique(benchmark::State& state) {
  const int n = (int)state.range(0);
  const OrderedMatching m = sample_matching(3, n, 11);
  const Pattern p("ABABAB");
  for (auto _ : state) {
    auto c = largest_P_clique(m, p);
    benchmark::DoNotOptimize(c.size());
  }
}
BENCHMARK(BM_LargestPClique)->Arg(64)->Arg(256)->Arg(1024);

static void BM_FindCliqueR3(benchmark::State& state) {
  const int n = (int)state.range(0);
  const OrderedMatching m = sample_matching(3, n, 13);
  for (auto _ : state) {
    auto res = find_clique_r3(m);
    benchmark::DoNotOptimize(res.second.size());
  }
}
BENCHMARK(BM_FindCliqueR3)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_RamseyBrute(benchmark::State& state) {
  for (auto _ : state) {
    auto res = brute_force_ramsey(2, (int)state.range(0));
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_RamseyBrute)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
