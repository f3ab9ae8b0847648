#pragma once

// Dense univariate polynomials over Z (IntPoly) and Q (RatPoly).
//
// Coefficients are stored ascending by power and kept canonical at all
// times: no trailing zero coefficient, the zero polynomial is empty, and
// rational coefficients are in lowest terms (mpq_class canonicalises).
// Equality is therefore structural.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "niven/error.hpp"
#include "niven/kernels.hpp"

namespace niven {

template <class T>
class Poly {
 public:
  using coeff_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if constexpr (std::is_same_v<T, mpq_class>)
      for (auto& q : c_) q.canonicalize();
    trim();
  }
  Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }
  std::span<const T> coeffs() const { return c_; }

  /// Coefficient of x^i; zero beyond the degree.
  const T& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const T& leading() const { return c_.empty() ? zero_ : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  T operator()(const T& x) const {
    T acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly operator-() const {
    std::vector<T> v(c_);
    for (auto& e : v) e = -e;
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& e : c_) e *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    if (std::min(a.c_.size(), b.c_.size()) >= kernels::parallel_threshold())
      kernels::mul_parallel(a.coeffs(), b.coeffs(), out);
    else
      kernels::mul_serial(a.coeffs(), b.coeffs(), out);
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> v(k + c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return Poly(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
  inline static const T zero_ = T(0);
};

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;

extern template class Poly<mpz_class>;
extern template class Poly<mpq_class>;

// ---- conversions -----------------------------------------------------------

RatPoly to_rat(const IntPoly& p);
/// Integer polynomial q and positive integer d with p = q / d, d minimal.
std::pair<IntPoly, mpz_class> clear_denominators(const RatPoly& p);
/// Throws DomainError if some coefficient is not an integer.
IntPoly to_int(const RatPoly& p);

// ---- small ops ---------------------------------------------------------------

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> v(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p[i] * static_cast<unsigned long>(i);
  return Poly<T>(std::move(v));
}

/// p(q(x)) by Horner's rule over polynomials.
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q) {
  Poly<T> acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + Poly<T>::constant(p[i]);
  return acc;
}

/// Product of all entries, multiplied pairwise in a balanced tree.
IntPoly product_tree(std::vector<IntPoly> polys);

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
mpz_class content(const IntPoly& p);
/// p divided by its content, sign fixed so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& p);
mpq_class evaluate(const IntPoly& p, const mpq_class& x);
RatPoly make_monic(const RatPoly& p);

// ---- division ----------------------------------------------------------------

/// Euclidean division over Q: p = q*quot + rem with deg rem < deg q.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q);

/// Division over Z where the caller asserts the quotient is exact.
/// Throws DomainError for q = 0 and ArithmeticError on any nonzero
/// remainder or non-integral quotient coefficient.
IntPoly divide_exact(const IntPoly& p, const IntPoly& q);

/// Division with remainder over Z, valid when lc(q) = +-1.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& q);

/// True iff q divides p in Z[x]; the quotient is stored when requested.
/// Gives up as soon as one quotient coefficient is non-integral.
bool divides(const IntPoly& q, const IntPoly& p, IntPoly* quotient = nullptr);

/// Remainder of lc(q)^(deg p - deg q + 1) * p by q.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);

// ---- gcd and resultants --------------------------------------------------------

/// Primitive gcd with positive leading coefficient, via the subresultant PRS.
/// gcd(p, 0) = primitive_part(p). Both zero is a DomainError.
IntPoly gcd_subresultant(const IntPoly& p, const IntPoly& q);

/// Monic gcd over Q.
RatPoly gcd(const RatPoly& p, const RatPoly& q);

/// Res(p, q) with the Sylvester-determinant convention:
///   Res(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a),
/// so Res(x - 2, x + 1) = 3 and Res(q, p) = (-1)^(deg p deg q) Res(p, q).
/// Computed with the subresultant PRS. Nonzero arguments required.
mpz_class resultant(const IntPoly& p, const IntPoly& q);

/// Bivariate polynomial H(x, y) = sum_j coeff_y[j](x) * y^j.
struct BiPoly {
  std::vector<IntPoly> coeff_y;

  int degree_y() const;
  int degree_x() const;
  /// H(x0, y) as a univariate polynomial in y.
  IntPoly at_x(const mpz_class& x0) const;
};

/// p(x - s*y) expanded as a BiPoly.
BiPoly substitute_x_minus_sy(const IntPoly& p, const mpz_class& s);

/// Res_y(g(y), H(x, y)) as a polynomial in x, by evaluation at integer
/// points and exact interpolation. Points where H drops degree in y are skipped.
IntPoly resultant_in_y(const IntPoly& g, const BiPoly& h);

// ---- text I/O ----------------------------------------------------------------

/// "-2,0,1" -> x^2 - 2. Whitespace around entries is ignored.
IntPoly parse_int_poly(std::string_view text);
/// Same, entries may be fractions "p/q".
RatPoly parse_rat_poly(std::string_view text);
/// Ascending, comma separated ("-2,0,1"); "0" for the zero polynomial.
std::string to_coeff_string(const IntPoly& p);
std::string to_coeff_string(const RatPoly& p);
/// Descending powers: "x^4 - x^3 - 4x^2 + 4x + 1", "(1/4)x + 3/2".
std::string to_pretty(const IntPoly& p, char var = 'x');
std::string to_pretty(const RatPoly& p, char var = 'x');

}  // namespace niven
