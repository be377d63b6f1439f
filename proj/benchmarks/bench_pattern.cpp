#include <benchmark/benchmark.h>

#include "om/pattern.hpp"
#include "om/random.hpp"
#include "om/rng.hpp"

using namespace om;

static void BM_PairMask(benchmark::State& state) {
  const int r = (int)state.range(0);
  const OrderedMatching m = sample_matching(r, 64, 7);
  std::uint64_t acc = 0;
  int i = 0, j = 1;
  for (auto _ : state) {
    acc += pair_mask(m, i, j);
    if (++j == 64) {
      j = ++i + 1;
      if (j >= 64) i = 0, j = 1;
    }
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_PairMask)->Arg(2)->Arg(3)->Arg(4)->Arg(8);

static void BM_EnumeratePatterns(benchmark::State& state) {
  for (auto _ : state) {
    auto v = enumerate_patterns((int)state.range(0));
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_EnumeratePatterns)->Arg(4)->Arg(6);

static void BM_SignatureOrder(benchmark::State& state) {
  for (auto _ : state) {
    auto v = signature_order((int)state.range(0));
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_SignatureOrder)->Arg(3)->Arg(4);

static void BM_Compose(benchmark::State& state) {
  const Pattern p("ABABAB"), q("ABBAAB");
  for (auto _ : state) {
    auto s = compose_patterns(p, q);
    benchmark::DoNotOptimize(&s);
  }
}
BENCHMARK(BM_Compose);

BENCHMARK_MAIN();
