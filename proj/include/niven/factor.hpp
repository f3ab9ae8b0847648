#pragma once

// Factorisation of univariate integer polynomials: Yun's squarefree
// decomposition, then Zassenhaus (modular factorisation, Hensel lifting,
// subset recombination) on each squarefree part.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "niven/poly.hpp"

namespace niven {

struct FactorConfig {
  /// Inputs of larger degree are refused with CapExceeded.
  int max_degree = 128;
  /// Seed for the equal-degree splitting.
  std::uint64_t seed = 0x5eed;
  /// Number of good primes tried; the one giving the fewest modular factors wins.
  unsigned prime_trials = 6;
};

/// p = unit * content * prod factor^multiplicity. Factors are primitive with
/// positive leading coefficient, sorted by (degree, coefficients).
struct IntFactorization {
  int unit = 1;
  mpz_class content = 1;
  std::vector<std::pair<IntPoly, unsigned>> factors;

  IntPoly product() const;
  /// Number of irreducible factors counted without multiplicity.
  std::size_t size() const { return factors.size(); }
};

/// Yun's algorithm on the primitive part of p. Parts are primitive with
/// positive leading coefficient; multiplicities strictly increase.
/// Constant p gives an empty list; p = 0 is a DomainError.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decompose(const IntPoly& p);

IntFactorization factor_over_integers(const IntPoly& p, const FactorConfig& config = {});

/// Exactly one factor, of multiplicity 1, and content 1. Constants are not irreducible.
bool is_irreducible(const IntPoly& p, const FactorConfig& config = {});

/// Irreducible factors of a squarefree primitive polynomial with positive
/// leading coefficient. No degree cap is applied.
std::vector<IntPoly> factor_squarefree(const IntPoly& f, const FactorConfig& config = {});

}  // namespace niven
