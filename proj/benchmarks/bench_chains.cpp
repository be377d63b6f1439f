#include <benchmark/benchmark.h>

#include "om/chains.hpp"
#include "om/random.hpp"
#include "om/rng.hpp"

using namespace om;

namespace {
PointSet uniform_points(int r, int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> flat((size_t)r * n);
  for (auto& x : flat) x = rng.uniform();
  return PointSet(r, std::move(flat));
}
}  // namespace

static void BM_LongestChain(benchmark::State& state) {
  const PointSet s = uniform_points(3, (int)state.range(0), 5);
  const auto a = CoordinatePartition::singletons(3);
  for (auto _ : state) {
    auto c = longest_chain(s, a);
    benchmark::DoNotOptimize(c.length());
  }
}
BENCHMARK(BM_LongestChain)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_CrossingSweep(benchmark::State& state) {
  const OrderedMatching m = sample_matching(2, (int)state.range(0), 6);
  const Pattern cross("ABAB");
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_LP(m, cross));
  }
}
BENCHMARK(BM_CrossingSweep)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_GreedyMinMax(benchmark::State& state) {
  const PointSet s = uniform_points(2, (int)state.range(0), 8);
  const auto a = CoordinatePartition::single_part(2);
  for (auto _ : state) {
    auto c = greedy_min_max_chain(s, a);
    benchmark::DoNotOptimize(c.length());
  }
}
BENCHMARK(BM_GreedyMinMax)->Arg(10000)->Unit(benchmark::kMillisecond);
