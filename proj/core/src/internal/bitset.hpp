#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace om::detail {

// Fixed-capacity dynamic bitset, just enough for the clique searches.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((size_t)(n + 63) / 64, 0) {}

  void set(int i) { w_[(size_t)i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[(size_t)i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[(size_t)i >> 6] >> (i & 63)) & 1ull; }

  void set_all() {
    for (auto& x : w_) x = ~0ull;
    trim();
  }

  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  void and_with(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  }
  void and_not(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }

  // true iff this is a subset of o
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  int find_first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (int)(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        f((int)(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  int capacity() const { return n_; }

 private:
  void trim() {
    if (n_ % 64) w_.back() &= (~0ull) >> (64 - n_ % 64);
  }
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace om::detail
