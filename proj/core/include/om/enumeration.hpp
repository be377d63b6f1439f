#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "om/numeric.hpp"
#include "om/pattern.hpp"
#include "om/types.hpp"

namespace om {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000ull;

// (rn)! / ((r!)^n n!), the number of r-matchings on {1..rn}.
BigInt count_formula(int r, int n);

// (n!)^(r-1), the number of r-partite ones.
BigInt partite_count(int r, int n);

// Streams every matching on {1..rn} exactly once, in the canonical order
// that always pairs the smallest unmatched vertex first. The callback may
// return false to stop early. Throws BudgetExceeded when the total count
// is over budget.
void enumerate_matchings(int r, int n,
                         const std::function<bool(const OrderedMatching&)>& cb,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// N_P(n): matchings on {1..rn} with no pair forming P. Exact; prunes a
// branch as soon as a forbidden pair appears. Parallel over the first
// edge's partner choice.
BigInt count_P_free(int r, int n, const Pattern& p,
                    std::uint64_t budget = kDefaultEnumerationBudget);

// N_{P,m}(n): matchings with L_P < m; m = 2 agrees with count_P_free.
BigInt count_clique_free(int r, int n, const Pattern& p, int m,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// The r-partite matching built by uncontracting the layered graph whose
// edges are the tuples (j_1..j_r) in {a..b}^r with b+1 <= sum <= b+m-1,
// a = (m-1)/(r-1). L_P(M) < m for the generalised crossing P. The seed
// picks one of the (prod_j d_j!)^r labelings uniformly; no seed gives the
// lexicographically least one.
OrderedMatching layered_generate(int r, int m, int b,
                               std::optional<std::uint64_t> seed = std::nullopt);

// Closed-form size of the matching produced by layered_generate.
BigInt layered_size(int r, int m, int b);

// Number of distinct labelings, (prod_j d_j!)^r.
BigInt layered_labeling_count(int r, int m, int b);

}  // namespace om
