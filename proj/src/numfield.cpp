#include "niven/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "niven/cyclotomic.hpp"

namespace niven {

// ---- NumberField / FieldElement ---------------------------------------------

NumberField::NumberField(IntPoly g, const FactorConfig& config) {
  if (g.degree() < 1) throw DomainError("field polynomial must have positive degree");
  if (!g.is_monic()) throw DomainError("field polynomial " + to_pretty(g, 'y') + " is not monic");
  if (g.degree() > 1) {
    const IntFactorization fac = factor_over_integers(g, config);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
      throw DomainError("field polynomial " + to_pretty(g, 'y') + " is reducible; it has the factor " +
                        to_pretty(fac.factors.front().first, 'y'));
  }
  auto data = std::make_shared<Data>();
  data->g_rat = to_rat(g);
  data->g = std::move(g);
  data_ = std::move(data);
}

FieldElement NumberField::element(const RatPoly& coeffs) const {
  return FieldElement(data_, divmod(coeffs, data_->g_rat).second);
}

FieldElement NumberField::from_rational(const mpq_class& q) const {
  return FieldElement(data_, RatPoly::constant(q));
}

FieldElement NumberField::generator() const { return element(RatPoly::x()); }

FieldElement::FieldElement(std::shared_ptr<const NumberField::Data> owner, RatPoly value)
    : owner_(std::move(owner)), value_(std::move(value)) {}

std::vector<mpq_class> FieldElement::coeffs() const {
  std::vector<mpq_class> out(owner_->g.degree());
  for (std::size_t i = 0; i < value_.size(); ++i) out[i] = value_[i];
  return out;
}

NumberField FieldElement::field() const { return NumberField(owner_); }

void FieldElement::same_field(const FieldElement& o) const {
  if (owner_ != o.owner_ && !(owner_->g == o.owner_->g))
    throw DomainError("field elements belong to different number fields");
}

FieldElement FieldElement::operator-() const { return FieldElement(owner_, -value_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  a.same_field(b);
  return FieldElement(a.owner_, a.value_ + b.value_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  a.same_field(b);
  return FieldElement(a.owner_, a.value_ - b.value_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.same_field(b);
  return FieldElement(a.owner_, divmod(a.value_ * b.value_, a.owner_->g_rat).second);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.same_field(b);
  return a.value_ == b.value_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero field element");
  // s with s * value = 1 mod g, tracking only the cofactor of value.
  RatPoly r0 = owner_->g_rat, r1 = value_, s0, s1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw ArithmeticError("field polynomial shares a factor with an element");
  return FieldElement(owner_, divmod(s0 * mpq_class(1 / r0[0]), owner_->g_rat).second);
}

FieldElement evaluate(const IntPoly& p, const FieldElement& a) {
  FieldElement acc = a - a;
  const NumberField K = a.field();
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * a + K.from_rational(mpq_class(p[i]));
  return acc;
}

// ---- minimal polynomials -------------------------------------------------------

namespace {

IntPoly squarefree_part(const IntPoly& p) {
  return primitive_part(divide_exact(p, gcd_subresultant(p, derivative(p))));
}

}  // namespace

IntPoly elem_minpoly(const FieldElement& a) {
  const NumberField K = a.field();
  if (a.is_rational()) {
    const mpq_class q = a.value()[0];
    return IntPoly(std::vector<mpz_class>{-q.get_num(), q.get_den()});
  }
  auto [A, d] = clear_denominators(a.value());
  // Res_y(g(y), d x - A(y)) = d^D * charpoly(x)
  BiPoly h;
  h.coeff_y.resize(A.size());
  for (std::size_t j = 0; j < A.size(); ++j) h.coeff_y[j] = IntPoly::constant(-A[j]);
  h.coeff_y[0] += IntPoly::monomial(d, 1);
  const IntPoly m = squarefree_part(resultant_in_y(K.modulus(), h));
  if (!evaluate(m, a).is_zero()) throw ArithmeticError("elem_minpoly: candidate does not vanish at the element");
  return m;
}

// ---- roots in K: Trager's norm ---------------------------------------------------

namespace {

using KPoly = std::vector<FieldElement>;

void ktrim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly krem(KPoly a, const KPoly& b) {
  const FieldElement inv_lc = b.back().inverse();
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const FieldElement c = a.back() * inv_lc;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = a[shift + j] - c * b[j];
    a.pop_back();
    ktrim(a);
  }
  return a;
}

KPoly kgcd(KPoly a, KPoly b) {
  ktrim(a);
  ktrim(b);
  while (!b.empty()) {
    KPoly r = krem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const FieldElement inv_lc = a.back().inverse();
  for (auto& c : a) c = c * inv_lc;
  return a;
}

KPoly lift(const IntPoly& p, const NumberField& K) {
  KPoly out;
  for (const auto& c : p.coeffs()) out.push_back(K.from_rational(mpq_class(c)));
  return out;
}

// q(x + shift) over K.
KPoly shift_compose(const IntPoly& q, const FieldElement& shift, const NumberField& K) {
  KPoly acc;
  for (std::size_t i = q.size(); i-- > 0;) {
    KPoly next(acc.size() + 1, K.from_rational(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = next[j + 1] + acc[j];
      next[j] = next[j] + acc[j] * shift;
    }
    next[0] = next[0] + K.from_rational(mpq_class(q[i]));
    ktrim(next);
    acc = std::move(next);
  }
  return acc;
}

bool coeff_less(const FieldElement& a, const FieldElement& b) {
  const auto x = a.coeffs(), y = b.coeffs();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

std::vector<FieldElement> roots_in_field(const IntPoly& p, const NumberField& K, const RootOptions& opts) {
  if (p.degree() < 1) throw DomainError("roots_in_field: polynomial must have positive degree");
  std::vector<FieldElement> roots;
  if (p.degree() == 1) {
    roots.push_back(K.from_rational(mpq_class(-p[0], p[1])));
  } else {
    const int D = K.degree();
    if (D * p.degree() > opts.factor.max_degree)
      throw CapExceeded("roots_in_field: norm degree " + std::to_string(D * p.degree()) + " exceeds the cap " +
                        std::to_string(opts.factor.max_degree));
    bool done = false;
    for (unsigned s = 0; s <= opts.max_shift && !done; ++s) {
      const IntPoly norm = resultant_in_y(K.modulus(), substitute_x_minus_sy(p, s));
      const IntPoly pn = primitive_part(norm);
      if (gcd_subresultant(pn, derivative(pn)).degree() != 0) continue;
      done = true;
      const FieldElement shift = K.generator() * K.from_rational(s);
      const KPoly pk = lift(p, K);
      for (const auto& ni : factor_squarefree(pn, opts.factor)) {
        if (ni.degree() != D) continue;
        const KPoly h = kgcd(pk, shift_compose(ni, shift, K));
        if (h.size() == 2) roots.push_back(-h[0]);
      }
    }
    if (!done)
      throw CapExceeded("roots_in_field: no squarefree norm for shifts up to " + std::to_string(opts.max_shift));
  }
  for (const auto& r : roots)
    if (!evaluate(p, r).is_zero()) throw ArithmeticError("roots_in_field: returned element is not a root");
  std::sort(roots.begin(), roots.end(), coeff_less);
  return roots;
}

// ---- C(K) ----------------------------------------------------------------------

namespace {

using cld = std::complex<long double>;

cld horner(const IntPoly& g, cld z) {
  cld acc = 0;
  for (std::size_t i = g.size(); i-- > 0;) acc = acc * z + cld(g[i].get_d(), 0);
  return acc;
}

// The chosen complex root of g: largest real root, else largest real part
// with nonnegative imaginary part.
cld embedding(const IntPoly& g) {
  const int D = g.degree();
  if (D == 1) return cld(-g[0].get_d(), 0);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(D, D);
  for (int i = 1; i < D; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < D; ++i) C(i, D - 1) = -g[i].get_d();
  const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(C, false).eigenvalues();
  const IntPoly dg = derivative(g);
  std::vector<cld> roots;
  for (int i = 0; i < D; ++i) {
    cld z(ev[i].real(), ev[i].imag());
    for (int it = 0; it < 8; ++it) {
      const cld d = horner(dg, z);
      if (std::abs(d) == 0) break;
      z -= horner(g, z) / d;
    }
    roots.push_back(z);
  }
  auto is_real = [](cld z) { return std::abs(z.imag()) < 1e-12L * (1 + std::abs(z)); };
  std::sort(roots.begin(), roots.end(), [&](cld a, cld b) {
    if (is_real(a) != is_real(b)) return is_real(a);
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return roots.front();
}

long double numeric_value(const FieldElement& a, cld theta) {
  cld acc = 0;
  const auto& v = a.value();
  for (std::size_t i = v.size(); i-- > 0;) acc = acc * theta + cld(v[i].get_d(), 0);
  return acc.real();
}

}  // namespace

CosineValues cosine_values_in_field(const NumberField& K, const RootOptions& opts) {
  const auto dens = qualifying_denominators(static_cast<unsigned>(K.degree()));
  std::vector<std::vector<FieldElement>> found(dens.size());
  std::vector<std::exception_ptr> errors(dens.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < dens.size(); ++i) {
    try {
      const AlgebraicValue v = min_poly_of(AngleClass{dens[i] == 2 ? 1u : 0u, dens[i]});
      found[i] = roots_in_field(v.min_poly, K, opts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  const cld theta = embedding(K.modulus());
  CosineValues out;
  for (std::size_t i = 0; i < dens.size(); ++i) {
    const std::uint64_t n = dens[i];
    std::vector<AngleClass> used;
    for (const auto& alpha : found[i]) {
      const long double x = numeric_value(alpha, theta);
      AngleClass best{};
      long double best_err = INFINITY;
      for (std::uint64_t m = 0; 2 * m <= n; ++m) {
        if (std::gcd(m, n) != 1) continue;
        const long double err =
            std::abs(x - 2 * std::cos(2 * std::numbers::pi_v<long double> * m / static_cast<long double>(n)));
        if (err < best_err) {
          best_err = err;
          best = AngleClass{m, n};
        }
      }
      if (best_err > 1e-6L || std::find(used.begin(), used.end(), best) != used.end())
        throw ArithmeticError("cosine_values_in_field: numeric labelling of a root of Psi_" + std::to_string(n) +
                              " failed");
      used.push_back(best);
      out.values.emplace_back(best, alpha);
    }
  }
  std::sort(out.values.begin(), out.values.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AngleClass> classes;
  for (const auto& [a, e] : out.values) classes.push_back(a);
  out.digraph = build_digraph(classes);
  return out;
}

}  // namespace niven
