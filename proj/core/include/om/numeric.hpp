#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace om {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// (x)_+ = max(x, 0)
inline long long pos_part(long long x) { return x > 0 ? x : 0; }

// C(a, b), zero for a < b or b < 0.
inline BigInt binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

inline BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

// pow with big-integer result
inline BigInt bigpow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// Smallest integer h >= 1 with h^k >= n (exact, no floating point).
inline long long ceil_root(long long n, int k) {
  if (n <= 1) return 1;
  long long h = std::max<long long>(1, (long long)std::floor(std::pow((double)n, 1.0 / k)) - 2);
  while (bigpow(BigInt(h), (unsigned)k) < n) ++h;
  return h;
}

// Lanczos approximation of the Gamma function (g = 7, 9 terms).
inline double lanczos_gamma(double x) {
  static const double c[9] = {
      0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,  12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection formula
    const double pi = 3.14159265358979323846;
    return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
  }
  x -= 1.0;
  double a = c[0];
  double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  const double sqrt2pi = 2.5066282746310002;
  return sqrt2pi * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace om
