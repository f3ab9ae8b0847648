#pragma once

// Cyclotomic polynomials Phi_n and the minimal polynomials Psi_n of
// 2cos(2 pi / n), linked by z^(phi(n)/2) Psi_n(z + 1/z) = Phi_n(z).

#include <cstdint>
#include <map>
#include <shared_mutex>

#include "niven/poly.hpp"

namespace niven {

/// Psi_n together with its index. For n = 1 and n = 2 the stored polynomial
/// is the square Psi_1^2 = x - 2, Psi_2^2 = x + 2 and `squared_form` is set.
struct PsiPoly {
  std::uint64_t index = 0;
  IntPoly poly;
  bool squared_form = false;

  /// Degree of Psi_n itself: phi(n)/2 for n > 2 (1/2 for n <= 2, reported as 0).
  int degree() const { return squared_form ? 0 : poly.degree(); }
};

/// The n-th cyclotomic polynomial from the Moebius product
/// prod_{d | n} (x^d - 1)^mu(n/d), evaluated with sparse binomial
/// multiplications and exact divisions. Uncached.
IntPoly cyclotomic_poly_uncached(std::uint64_t n);

/// Inverse of the palindromic substitution: for palindromic p of degree 2k,
/// the unique q of degree k with z^k q(z + 1/z) = p(z).
/// Throws DomainError if p is not palindromic or has odd degree.
IntPoly depalindromize(const IntPoly& p);

/// Memo table for Phi_n and Psi_n. Lookups are safe from concurrent threads
/// (reader/writer lock); returned values are copies.
class PsiTable {
 public:
  IntPoly cyclotomic(std::uint64_t n);
  PsiPoly psi(std::uint64_t n);

  /// Replace a cached Psi entry. Only meant for fault-injection tests.
  void overwrite_psi_for_testing(std::uint64_t n, IntPoly poly);

  /// Process-wide shared table.
  static PsiTable& shared();

 private:
  std::shared_mutex mu_;
  std::map<std::uint64_t, IntPoly> phi_;
  std::map<std::uint64_t, PsiPoly> psi_;
};

inline IntPoly cyclotomic_poly(std::uint64_t n) { return PsiTable::shared().cyclotomic(n); }
inline PsiPoly psi(std::uint64_t n) { return PsiTable::shared().psi(n); }

}  // namespace niven
