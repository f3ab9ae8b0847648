#include "niven/dynatomic.hpp"

#include <string>

namespace niven {

namespace {

void check_iterate_cap(unsigned k, const DynamicsLimits& limits) {
  if (k > limits.max_iterate)
    throw CapExceeded("iterate k = " + std::to_string(k) + " exceeds the cap " +
                      std::to_string(limits.max_iterate));
}

// f^(k) = (f^(k-1))^2 + c.
template <class T>
Poly<T> iterate_impl(unsigned k, const T& c) {
  Poly<T> p = Poly<T>::x();
  for (unsigned i = 0; i < k; ++i) p = p * p + Poly<T>::constant(c);
  return p;
}

template <class T>
Poly<T> exact_quotient(const Poly<T>& num, const Poly<T>& den);

template <>
IntPoly exact_quotient(const IntPoly& num, const IntPoly& den) {
  return divide_exact(num, den);
}

template <>
RatPoly exact_quotient(const RatPoly& num, const RatPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw ArithmeticError("dynatomic: Moebius quotient left a nonzero remainder");
  return q;
}

template <class T>
Poly<T> dynatomic_impl(unsigned n, const T& c, const DynamicsLimits& limits) {
  if (n == 0) throw DomainError("dynatomic index must be positive");
  if (n > limits.max_dynatomic)
    throw CapExceeded("dynatomic n = " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(limits.max_dynatomic));
  check_iterate_cap(n, limits);
  std::vector<Poly<T>> numer, denom;
  Poly<T> it = Poly<T>::x();
  const Poly<T> x = Poly<T>::x();
  for (unsigned d = 1; d <= n; ++d) {
    it = it * it + Poly<T>::constant(c);
    if (n % d) continue;
    const int mu = moebius(n / d);
    if (mu == 1) numer.push_back(it - x);
    if (mu == -1) denom.push_back(it - x);
  }
  Poly<T> top = Poly<T>::constant(T(1));
  for (const auto& p : numer) top *= p;
  Poly<T> bottom = Poly<T>::constant(T(1));
  for (const auto& p : denom) bottom *= p;
  return exact_quotient(top, bottom);
}

std::vector<mpz_class> divisors_of(const mpz_class& v, const FactorOptions& opts) {
  if (v == 1) return {mpz_class(1)};
  return divisors(factorize(v, opts));
}

mpz_class pow2(unsigned d) {
  mpz_class r = 1;
  r <<= d;
  return r;
}

std::uint64_t to_index(const mpz_class& d) {
  if (!d.fits_ulong_p()) throw CapExceeded("Psi index does not fit in 64 bits");
  return d.get_ui();
}

}  // namespace

RatPoly iterate_f(unsigned k, const mpq_class& c, const DynamicsLimits& limits) {
  check_iterate_cap(k, limits);
  return iterate_impl(k, c);
}

IntPoly iterate_f_int(unsigned k, const mpz_class& c, const DynamicsLimits& limits) {
  check_iterate_cap(k, limits);
  return iterate_impl(k, c);
}

RatPoly dynatomic_poly(unsigned n, const mpq_class& c, const DynamicsLimits& limits) {
  if (c.get_den() == 1) return to_rat(dynatomic_impl(n, mpz_class(c.get_num()), limits));
  return dynatomic_impl(n, c, limits);
}

IntPoly dynatomic_poly_int(unsigned n, const mpz_class& c, const DynamicsLimits& limits) {
  return dynatomic_impl(n, c, limits);
}

std::vector<PsiFactorization::Factor> PsiFactorization::factors(PsiTable& table) const {
  std::vector<Factor> out;
  for (const auto& [index, e] : exponents) {
    if (e == 0) continue;
    if (e < 0)
      throw ArithmeticError("Psi_" + std::to_string(index) + " has negative exponent " + std::to_string(e));
    PsiPoly psi = table.psi(index);
    long mult = e;
    if (psi.squared_form) {
      if (e % 2 != 0)
        throw ArithmeticError("Psi_" + std::to_string(index) + " has odd exponent " + std::to_string(e) +
                              " under the squared convention");
      mult = e / 2;
    }
    const int deg = psi.poly.degree();
    out.push_back(Factor{index, mult, std::move(psi.poly), deg});
  }
  return out;
}

int PsiFactorization::degree(PsiTable& table) const {
  int total = 0;
  for (const auto& f : factors(table)) total += static_cast<int>(f.multiplicity) * f.degree;
  return total;
}

IntPoly PsiFactorization::materialize(PsiTable& table) const {
  std::vector<IntPoly> parts;
  for (const auto& f : factors(table))
    for (long i = 0; i < f.multiplicity; ++i) parts.push_back(f.poly);
  return product_tree(std::move(parts));
}

PsiFactorization vh_factorization(unsigned n, const FactorOptions& opts) {
  if (n == 0) throw DomainError("dynatomic index must be positive");
  PsiFactorization out;
  for (auto d : divisors(static_cast<std::uint64_t>(n))) {
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    const mpz_class p = pow2(static_cast<unsigned>(d));
    for (const auto& d1 : divisors_of(p - 1, opts)) out.exponents[to_index(d1)] += mu;
    for (const auto& d2 : divisors_of(p + 1, opts)) out.exponents[to_index(d2)] += mu;
  }
  std::erase_if(out.exponents, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [index, e] : out.exponents)
    if (e < 0) throw ArithmeticError("vh_factorization produced a negative exponent at Psi_" + std::to_string(index));
  if (auto it = out.exponents.find(1); it != out.exponents.end() && it->second % 2 != 0)
    throw ArithmeticError("vh_factorization produced an odd Psi_1 exponent");
  return out;
}

PsiFactorization factor_iterate_minus_x(unsigned D, const FactorOptions& opts) {
  if (D == 0) throw DomainError("iterate count must be positive");
  PsiFactorization out;
  out.exponents[1] = 2;
  const mpz_class p = pow2(D);
  for (const auto& d : divisors_of(p - 1, opts))
    if (d > 1) out.exponents[to_index(d)] += 1;
  for (const auto& d : divisors_of(p + 1, opts))
    if (d > 1) out.exponents[to_index(d)] += 1;
  return out;
}

}  // namespace niven
