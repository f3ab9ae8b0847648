#pragma once

// Iterates of f_c(x) = x^2 + c, dynatomic polynomials by the Moebius
// product, and the closed-form factorisation of the c = -2 case into Psi_m.

#include <cstdint>
#include <map>
#include <vector>

#include "niven/cyclotomic.hpp"
#include "niven/numtheory.hpp"
#include "niven/poly.hpp"

namespace niven {

struct DynamicsLimits {
  /// Largest k accepted by iterate_f (degree 2^k).
  unsigned max_iterate = 20;
  /// Largest n accepted by dynatomic_poly.
  unsigned max_dynatomic = 12;
};

/// f_c^(k)(x); k = 0 gives x. Throws CapExceeded above limits.max_iterate.
RatPoly iterate_f(unsigned k, const mpq_class& c, const DynamicsLimits& limits = {});
/// Integer-parameter form, kept in Z[x] throughout.
IntPoly iterate_f_int(unsigned k, const mpz_class& c, const DynamicsLimits& limits = {});

/// Phi_{n, f_c}(x) = prod_{d | n} (f^(d)(x) - x)^mu(n/d). The numerator
/// (mu = +1 terms) is accumulated in full before one exact division by the
/// denominator; a nonzero remainder raises ArithmeticError.
RatPoly dynatomic_poly(unsigned n, const mpq_class& c, const DynamicsLimits& limits = {});
IntPoly dynatomic_poly_int(unsigned n, const mpz_class& c, const DynamicsLimits& limits = {});

/// A product prod Psi_m^e_m kept in exponent space. Index 1 and 2 use the
/// squared convention (Psi_1^2 = x - 2, Psi_2^2 = x + 2), so their exponents
/// must be even before the product can be formed.
struct PsiFactorization {
  std::map<std::uint64_t, long> exponents;

  struct Factor {
    std::uint64_t index;
    /// Exponent of the listed polynomial (for index 1/2: half the Psi exponent).
    long multiplicity;
    IntPoly poly;
    int degree;
  };

  /// Factors in ascending index order. Throws ArithmeticError on negative or
  /// odd squared-form exponents.
  std::vector<Factor> factors(PsiTable& table = PsiTable::shared()) const;
  /// Sum of multiplicity * degree over factors().
  int degree(PsiTable& table = PsiTable::shared()) const;
  IntPoly materialize(PsiTable& table = PsiTable::shared()) const;

  bool operator==(const PsiFactorization&) const = default;
};

/// Closed form of Phi_{n, f} for f = x^2 - 2:
///   prod_{d | n} ( prod_{d1 | 2^d - 1} Psi_d1 prod_{d2 | 2^d + 1} Psi_d2 )^mu(n/d).
/// The d1 = 1 and d2 = 1 terms each contribute one Psi_1.
PsiFactorization vh_factorization(unsigned n, const FactorOptions& opts = {});

/// f^(D)(x) - x for f = x^2 - 2, telescoped:
///   Psi_1^2 * prod_{d | 2^D - 1, d > 1} Psi_d * prod_{d | 2^D + 1, d > 1} Psi_d.
PsiFactorization factor_iterate_minus_x(unsigned D, const FactorOptions& opts = {});

}  // namespace niven
