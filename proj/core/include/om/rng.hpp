#pragma once

#include <cstdint>
#include <random>

namespace om {

// splitmix64; used to derive independent streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seedable, splittable generator. split(k) gives a stream that is stable
// under the parent's own consumption, so parallel trials are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed, 0)) {}

  std::mt19937_64& engine() { return engine_; }
  std::uint64_t seed() const { return seed_; }

  Rng split(std::uint64_t stream) const { return Rng(mix(seed_, stream + 1), 0); }

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

 private:
  Rng(std::uint64_t derived, int) : seed_(derived), engine_(derived) {}
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ (0x9e3779b97f4a7c15ull + (b << 6) + (b >> 2));
    std::uint64_t x = splitmix64(s);
    s ^= b;
    return x ^ splitmix64(s);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace om
