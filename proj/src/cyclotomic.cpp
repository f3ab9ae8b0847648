#include "niven/cyclotomic.hpp"

#include <mutex>

#include "niven/numtheory.hpp"

namespace niven {

namespace {

// a * (x^d - 1)
std::vector<mpz_class> mul_binomial(const std::vector<mpz_class>& a, std::size_t d) {
  std::vector<mpz_class> out(a.size() + d);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i >= d) out[i] = a[i - d];
    if (i < a.size()) out[i] -= a[i];
  }
  return out;
}

// a / (x^d - 1), exact. From a_i = q_{i-d} - q_i.
std::vector<mpz_class> div_binomial(const std::vector<mpz_class>& a, std::size_t d) {
  if (a.size() <= d) throw ArithmeticError("cyclotomic: binomial divisor exceeds dividend");
  const std::size_t nq = a.size() - d;
  std::vector<mpz_class> q(nq);
  for (std::size_t i = 0; i < nq; ++i) q[i] = (i >= d ? q[i - d] : mpz_class(0)) - a[i];
  for (std::size_t i = nq; i < a.size(); ++i)
    if (a[i] != (i >= d ? q[i - d] : mpz_class(0))) throw ArithmeticError("cyclotomic: inexact binomial division");
  return q;
}

}  // namespace

IntPoly cyclotomic_poly_uncached(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic index must be positive");
  const auto divs = divisors(n);
  std::vector<mpz_class> acc{1};
  for (auto d : divs)
    if (moebius(n / d) == 1) acc = mul_binomial(acc, d);
  for (auto d : divs)
    if (moebius(n / d) == -1) acc = div_binomial(acc, d);
  return IntPoly(std::move(acc));
}

IntPoly depalindromize(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("depalindromize: zero polynomial");
  const int deg = p.degree();
  if (deg % 2 != 0) throw DomainError("depalindromize: odd degree " + std::to_string(deg));
  for (int i = 0; i <= deg; ++i)
    if (p[i] != p[deg - i]) throw DomainError("depalindromize: polynomial is not palindromic");
  const int k = deg / 2;
  // z^j + z^-j = b_j(t), t = z + 1/z: b_0 = 2, b_1 = t, b_j = t b_{j-1} - b_{j-2}.
  IntPoly q = IntPoly::constant(p[k]);
  IntPoly prev = IntPoly{2}, cur = IntPoly::x();
  for (int j = 1; j <= k; ++j) {
    if (j > 1) {
      IntPoly next = cur.shifted(1) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    q += cur * p[k + j];
  }
  return q;
}

IntPoly PsiTable::cyclotomic(std::uint64_t n) {
  {
    std::shared_lock lock(mu_);
    if (auto it = phi_.find(n); it != phi_.end()) return it->second;
  }
  IntPoly value = cyclotomic_poly_uncached(n);
  std::unique_lock lock(mu_);
  return phi_.try_emplace(n, std::move(value)).first->second;
}

PsiPoly PsiTable::psi(std::uint64_t n) {
  if (n == 0) throw DomainError("psi index must be positive");
  {
    std::shared_lock lock(mu_);
    if (auto it = psi_.find(n); it != psi_.end()) return it->second;
  }
  PsiPoly value;
  value.index = n;
  if (n == 1) {
    value.poly = IntPoly{-2, 1};
    value.squared_form = true;
  } else if (n == 2) {
    value.poly = IntPoly{2, 1};
    value.squared_form = true;
  } else {
    value.poly = depalindromize(cyclotomic(n));
  }
  std::unique_lock lock(mu_);
  return psi_.try_emplace(n, std::move(value)).first->second;
}

void PsiTable::overwrite_psi_for_testing(std::uint64_t n, IntPoly poly) {
  PsiPoly value = psi(n);
  value.poly = std::move(poly);
  std::unique_lock lock(mu_);
  psi_[n] = std::move(value);
}

PsiTable& PsiTable::shared() {
  static PsiTable table;
  return table;
}

}  // namespace niven
