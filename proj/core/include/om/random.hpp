#pragma once

#include <cstdint>
#include <vector>

#include "om/chains.hpp"
#include "om/pattern.hpp"
#include "om/types.hpp"

namespace om {

// Uniform random ordered r-matching of size n: a uniform permutation of
// {1..rn} chopped into consecutive r-blocks.
OrderedMatching sample_matching(int r, int n, std::uint64_t seed);

// Exact L_P(M). Fast paths: the single-block pattern (disjoint-interval
// chain), the r=2 crossing (cut scan with an incrementally maintained
// patience structure) and the r=2 nesting (monotone chain). Everything
// else goes through the exact clique search, intended for moderate n.
long long exact_LP(const OrderedMatching& m, const Pattern& p);

struct EstimateResult {
  double estimate = 0;  // mean of L_P(M) / n^(1/r)
  double ci_low = 0;    // 95% normal CI
  double ci_high = 0;
  double stddev = 0;
  int trials = 0;
  long long n = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of b_P over `trials` independent matchings; trial t
// uses the split stream seed+t, so results are reproducible and
// thread-count independent.
EstimateResult estimate_bP(const Pattern& p, int n, int trials,
                           std::uint64_t seed,
                           std::uint64_t budget = 2'000'000'000ull);

// f_P(q): probability that r uniform points land in the blocks' intervals
// with the prescribed multiplicities (a multinomial in q).
double fP_evaluate(const Pattern& p, const std::vector<double>& q);

// alpha_P = max f_P over the simplex. Exact for one or two blocks,
// projected-gradient multistart otherwise.
double alphaP(const Pattern& p);

}  // namespace om
