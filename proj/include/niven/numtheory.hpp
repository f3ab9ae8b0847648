#pragma once

// Elementary number theory: totient, Moebius, factorisation, valuations,
// multiplicative order, and the totient summatory function.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace niven {

/// Prime factorisation n = prod prime^exponent, primes strictly increasing.
struct FactoredInteger {
  std::vector<std::pair<mpz_class, unsigned>> factors;

  mpz_class value() const;
  bool operator==(const FactoredInteger&) const = default;
};

struct FactorOptions {
  /// Inputs above this bound are refused outright.
  mpz_class cap = mpz_class(1) << 128;
  /// Seed for Pollard rho and for Miller-Rabin bases above the deterministic range.
  std::uint64_t seed = 0x5eed;
  /// Iteration budget for a single rho attempt before giving up on a cofactor.
  std::uint64_t rho_budget = 1u << 22;
};

/// Miller-Rabin. Deterministic (bases = first 13 primes) below 3.317e24;
/// above that, 64 rounds with bases drawn from a generator seeded by `seed`.
bool is_prime(const mpz_class& n, std::uint64_t seed = 0x5eed);

/// Trial division, then Brent's variant of Pollard rho.
/// Throws DomainError for n <= 1 and CapExceeded above opts.cap or when the
/// rho budget runs out; it never returns a partial factorisation.
FactoredInteger factorize(const mpz_class& n, const FactorOptions& opts = {});

/// All positive divisors, ascending.
std::vector<mpz_class> divisors(const FactoredInteger& f);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

/// Largest e with p^e | s. Throws DomainError for s = 0 or p < 2.
unsigned p_adic_valuation(const mpz_class& p, const mpz_class& s);

/// Least r >= 1 with a^r = 1 (mod n). Requires n > 1 and gcd(a, n) = 1.
mpz_class mult_order(const mpz_class& a, const mpz_class& n);

/// sum_{k=1}^{m} phi(k). The parallel form is an OpenMP reduction over k;
/// the serial one is kept as its reference.
mpz_class totient_summatory(std::uint64_t m);
mpz_class totient_summatory_serial(std::uint64_t m);

}  // namespace niven
