#pragma once

#include <algorithm>
#include <vector>

#include "bitset.hpp"

namespace om::detail {

// Exact maximum clique over a relation given on index pairs i < j.
//
// When the relation is transitive (checked with bitset subset tests) a
// pairwise-related set is the same thing as a chain, and a longest-path
// pass suffices. Otherwise we run branch and bound with a greedy-coloring
// bound on the symmetric closure.
class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(int n)
      : n_(n), out_(n, Bitset(n)), sym_(n, Bitset(n)) {}

  void relate(int i, int j) {  // requires i < j
    out_[(size_t)i].set(j);
    sym_[(size_t)i].set(j);
    sym_[(size_t)j].set(i);
  }

  bool relation_is_transitive() const {
    for (int i = 0; i < n_; ++i) {
      bool ok = true;
      out_[(size_t)i].for_each([&](int j) {
        if (ok && !out_[(size_t)j].subset_of(out_[(size_t)i])) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  // Indices of one maximum clique, ascending.
  std::vector<int> solve() {
    if (n_ == 0) return {};
    if (relation_is_transitive()) return longest_chain();
    best_ = greedy_seed();
    cur_.clear();
    Bitset cand(n_);
    cand.set_all();
    expand(cand);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::vector<int> longest_chain() const {
    std::vector<int> len((size_t)n_, 1), pred((size_t)n_, -1);
    int best = 0;
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        if (out_[(size_t)i].test(j) && len[(size_t)i] + 1 > len[(size_t)j]) {
          len[(size_t)j] = len[(size_t)i] + 1;
          pred[(size_t)j] = i;
        }
      }
      if (len[(size_t)j] > len[(size_t)best]) best = j;
    }
    std::vector<int> chain;
    for (int v = best; v != -1; v = pred[(size_t)v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  std::vector<int> greedy_seed() const {
    std::vector<int> best;
    for (int start = 0; start < std::min(n_, 32); ++start) {
      std::vector<int> cl = {start};
      Bitset cand = sym_[(size_t)start];
      for (int v = cand.find_first(); v != -1;) {
        cl.push_back(v);
        cand.and_with(sym_[(size_t)v]);
        v = cand.find_first();
      }
      if (cl.size() > best.size()) best = cl;
    }
    return best;
  }

  void expand(const Bitset& cand) {
    if (cand.none()) {
      if (cur_.size() > best_.size()) best_ = cur_;
      return;
    }
    // greedy coloring: color class = independent set, color number bounds
    // the clique extension size
    std::vector<int> order, color;
    Bitset uncolored = cand;
    int c = 0;
    while (!uncolored.none()) {
      ++c;
      Bitset avail = uncolored;
      while (true) {
        const int v = avail.find_first();
        if (v == -1) break;
        order.push_back(v);
        color.push_back(c);
        uncolored.reset(v);
        avail.reset(v);
        avail.and_not(sym_[(size_t)v]);
      }
    }
    Bitset local = cand;
    for (int idx = (int)order.size() - 1; idx >= 0; --idx) {
      if (cur_.size() + (size_t)color[(size_t)idx] <= best_.size()) return;
      const int v = order[(size_t)idx];
      Bitset next = local;
      next.and_with(sym_[(size_t)v]);
      cur_.push_back(v);
      expand(next);
      cur_.pop_back();
      local.reset(v);
    }
  }

  int n_;
  std::vector<Bitset> out_;
  std::vector<Bitset> sym_;
  std::vector<int> cur_, best_;
};

}  // namespace om::detail
