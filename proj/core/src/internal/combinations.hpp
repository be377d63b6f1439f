#pragma once

#include <vector>

namespace om::detail {

// Calls f on every k-subset of {0..m-1} as a sorted index vector, in
// lexicographic order. k = 0 yields one empty pick.
template <typename F>
void for_each_index_combination(int m, int k, F&& f) {
  if (k == 0) {
    std::vector<int> empty;
    f(empty);
    return;
  }
  if (k > m) return;
  std::vector<int> pick((size_t)k);
  for (int t = 0; t < k; ++t) pick[(size_t)t] = t;
  for (;;) {
    f(pick);
    int t = k - 1;
    while (t >= 0 && pick[(size_t)t] == m - k + t) --t;
    if (t < 0) return;
    ++pick[(size_t)t];
    for (int u = t + 1; u < k; ++u) pick[(size_t)u] = pick[(size_t)u - 1] + 1;
  }
}

}  // namespace om::detail
