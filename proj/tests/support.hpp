#pragma once

// Shared generators for the randomized tests.
//
// Random data is drawn as integer "order exponents" e and mapped to a
// semifield element so that the semifield order follows the order of e:
//
//   MaxPlus  e      MinPlus  -e      MaxTimes  2^e      MinTimes  2^-e
//
// Powers of two keep the multiplicative kinds exact, so every comparison in
// the tests can be exact as well.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "tropopt/matrix.hpp"
#include "tropopt/optimization.hpp"

namespace testing_support {

using tropopt::Matrix;
using tropopt::SemifieldKind;

inline constexpr SemifieldKind kAllKinds[] = {SemifieldKind::MaxPlus, SemifieldKind::MinPlus,
                                              SemifieldKind::MaxTimes, SemifieldKind::MinTimes};

inline bool is_max(SemifieldKind k) {
  return k == SemifieldKind::MaxPlus || k == SemifieldKind::MaxTimes;
}
inline bool is_plus(SemifieldKind k) {
  return k == SemifieldKind::MaxPlus || k == SemifieldKind::MinPlus;
}

inline double elem(SemifieldKind k, int e) {
  switch (k) {
    case SemifieldKind::MaxPlus: return e;
    case SemifieldKind::MinPlus: return -e;
    case SemifieldKind::MaxTimes: return std::ldexp(1.0, e);
    case SemifieldKind::MinTimes: return std::ldexp(1.0, -e);
  }
  return 0;
}

/// Inverse of `elem` on the image of elem.
inline double exponent(SemifieldKind k, double v) {
  switch (k) {
    case SemifieldKind::MaxPlus: return v;
    case SemifieldKind::MinPlus: return -v;
    case SemifieldKind::MaxTimes: return std::log2(v);
    case SemifieldKind::MinTimes: return -std::log2(v);
  }
  return 0;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  double scalar(SemifieldKind k, int lo = -10, int hi = 10, double zero_prob = 0.0) {
    if (zero_prob > 0 && chance(zero_prob)) return tropopt::detail::zero(k);
    return elem(k, integer(lo, hi));
  }

  Matrix matrix(SemifieldKind k, std::size_t r, std::size_t c, int lo = -10, int hi = 10,
                double zero_prob = 0.0) {
    Matrix m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, scalar(k, lo, hi, zero_prob));
    return m;
  }

  Matrix regular(SemifieldKind k, std::size_t n, int lo = -10, int hi = 10) {
    return matrix(k, n, 1, lo, hi);
  }

  /// Square matrix with Tr(A) <= 1 by construction: a_ij = pi_i pi_j^-1 c_ij
  /// with c_ij <= 1, so every cycle has weight <= 1. Entries stay in [-10, 10]
  /// in exponent terms.
  Matrix cycle_free(SemifieldKind k, std::size_t n, double zero_prob = 0.3) {
    std::vector<int> pi(n);
    for (auto& v : pi) v = integer(-3, 3);
    Matrix a(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (chance(zero_prob)) continue;
        a.set(i, j, elem(k, pi[i] - pi[j] + integer(-4, 0)));
      }
    return a;
  }

 private:
  std::mt19937_64 rng_;
};

/// Componentwise g <= h in the semifield order, exponents in [-10, 10].
inline void ordered_pair(Gen& gen, SemifieldKind k, std::size_t n, Matrix& g, Matrix& h) {
  g = Matrix(k, n, 1);
  h = Matrix(k, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    int a = gen.integer(-10, 10);
    int b = gen.integer(-10, 10);
    if (a > b) std::swap(a, b);
    g.set(i, 0, elem(k, a));
    h.set(i, 0, elem(k, b));
  }
}

}  // namespace testing_support
