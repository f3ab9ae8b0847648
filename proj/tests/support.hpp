#pragma once

// Shared helpers for the test binaries: seeded generators and oracles that
// avoid the library code paths they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "niven/poly.hpp"

namespace niven::test {

inline constexpr std::uint64_t kSeed = 20240611;

inline mpz_class random_int(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return mpz_class(d(rng));
}

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_int(rng, bound);
  return IntPoly(std::move(c));
}

inline IntPoly random_nonzero_poly(std::mt19937_64& rng, int max_degree, long bound) {
  for (;;) {
    IntPoly p = random_poly(rng, max_degree, bound);
    if (!p.is_zero()) return p;
  }
}

inline RatPoly random_rat_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<mpq_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) {
    x = mpq_class(random_int(rng, bound), den(rng));
    x.canonicalize();
  }
  return RatPoly(std::move(c));
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// det of the Sylvester matrix: deg q rows of p, then deg p rows of q.
inline mpz_class sylvester_resultant(const IntPoly& p, const IntPoly& q) {
  const int m = p.degree(), n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return 1;
  std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = p[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = q[n - i];
  return bareiss_det(std::move(s));
}

/// Long-double evaluation for numeric spot checks.
inline long double eval_ld(const IntPoly& p, long double x) {
  long double acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].get_d();
  return acc;
}

inline long double two_cos(std::uint64_t m, std::uint64_t n) {
  return 2.0L * std::cos(2.0L * std::numbers::pi_v<long double> * static_cast<long double>(m) /
                         static_cast<long double>(n));
}

}  // namespace niven::test
