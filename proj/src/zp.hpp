#pragma once

// Polynomials over Z/pZ for word-size primes p < 2^31. Internal to the
// factoring code.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "niven/poly.hpp"

namespace niven::zp {

using u64 = std::uint64_t;

/// Ascending coefficients in [0, p), trimmed.
using Vec = std::vector<u64>;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 neg(u64 a) const { return a ? p - a : 0; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;
  u64 reduce(const mpz_class& v) const;
};

int deg(const Vec& a);
void trim(Vec& a);

Vec from_int(const IntPoly& f, const Field& F);
Vec add(const Vec& a, const Vec& b, const Field& F);
Vec sub(const Vec& a, const Vec& b, const Field& F);
Vec mul(const Vec& a, const Vec& b, const Field& F);
Vec scale(const Vec& a, u64 s, const Field& F);
Vec derivative(const Vec& a, const Field& F);
Vec monic(const Vec& a, const Field& F);
std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b, const Field& F);
Vec rem(const Vec& a, const Vec& b, const Field& F);
/// Monic gcd; gcd(0, 0) = 0.
Vec gcd(Vec a, Vec b, const Field& F);
/// s, t with s a + t b = gcd(a, b) (monic), deg s < deg b, deg t < deg a.
std::pair<Vec, Vec> xgcd(const Vec& a, const Vec& b, const Field& F);
Vec mulmod(const Vec& a, const Vec& b, const Vec& m, const Field& F);
Vec powmod(Vec a, u64 e, const Vec& m, const Field& F);

/// Matrix of the Frobenius map h -> h^p on Z_p[x]/(m): row i holds x^(p i) mod m.
struct Frobenius {
  std::vector<Vec> rows;
  Vec apply(const Vec& h, const Field& F) const;
};
Frobenius frobenius_matrix(const Vec& m, const Field& F);

/// Distinct-degree factorisation of a monic squarefree f: pairs (g_d, d)
/// where g_d is the product of all irreducible factors of degree d.
std::vector<std::pair<Vec, int>> distinct_degree(const Vec& f, const Field& F);

/// Splits a monic product of irreducibles of common degree d
/// (Cantor-Zassenhaus, p odd).
std::vector<Vec> equal_degree(const Vec& g, int d, const Field& F, std::mt19937_64& rng);

}  // namespace niven::zp
