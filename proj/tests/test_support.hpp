#ifndef LEFLAB_TEST_SUPPORT_HPP
#define LEFLAB_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>

#include "leflab/rational.hpp"

namespace leflab::testsupport {

// Deterministic small-integer matrices; mt19937_64 is specified by the
// standard, so these sequences are identical on every platform.
inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline RatMatrix random_rat_matrix(std::mt19937_64& rng, Index rows, Index cols,
                                   long lo = -4, long hi = 4) {
  RatMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Rational(rand_range(rng, lo, hi));
  return m;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, Index rows, Index cols,
                                   long lo = -4, long hi = 4) {
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Integer(rand_range(rng, lo, hi));
  return m;
}

inline RatMatrix random_symmetric(std::mt19937_64& rng, Index n, long lo = -3, long hi = 3) {
  RatMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(rand_range(rng, lo, hi));
  return m;
}

inline RatMatrix random_invertible(std::mt19937_64& rng, Index n) {
  for (;;) {
    RatMatrix m = random_rat_matrix(rng, n, n, -3, 3);
    RatMatrix a = m;
    bool singular = false;
    for (Index k = 0; k < n && !singular; ++k) {
      Index pivot = -1;
      for (Index i = k; i < n; ++i)
        if (a(i, k) != 0) { pivot = i; break; }
      if (pivot < 0) { singular = true; break; }
      a.row(k).swap(a.row(pivot));
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) a.row(i) -= (a(i, k) / a(k, k)) * a.row(k);
    }
    if (!singular) return m;
  }
}

}  // namespace leflab::testsupport

#endif
