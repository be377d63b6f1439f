#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace om {

// Global worker cap, set once by the CLI's --threads flag.
inline std::atomic<int>& detail_thread_cap() {
  static std::atomic<int> cap{0};
  return cap;
}
inline int max_threads() {
  const int c = detail_thread_cap().load();
  if (c > 0) return c;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}
inline void set_max_threads(int n) { detail_thread_cap().store(n); }

// Runs fn(i) for i in [0, n). Work is handed out through a shared atomic
// counter; fn must be safe to call concurrently. Falls back to a serial
// loop when only one worker is allowed.
inline void parallel_for(long long n, const std::function<void(long long)>& fn,
                         int threads_wanted = 0) {
  int t = threads_wanted > 0 ? threads_wanted : max_threads();
  t = (int)std::min<long long>(t, n);
  if (t <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        long long i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace om
