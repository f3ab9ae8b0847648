#include "niven/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace niven {

template class Poly<mpz_class>;
template class Poly<mpq_class>;

RatPoly to_rat(const IntPoly& p) {
  std::vector<mpq_class> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = mpq_class(p[i]);
  return RatPoly(std::move(v));
}

std::pair<IntPoly, mpz_class> clear_denominators(const RatPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    v[i] = p[i].get_num() * (den / p[i].get_den());
  return {IntPoly(std::move(v)), den};
}

IntPoly to_int(const RatPoly& p) {
  std::vector<mpz_class> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1) throw DomainError("polynomial has a non-integer coefficient");
    v[i] = p[i].get_num();
  }
  return IntPoly(std::move(v));
}

IntPoly product_tree(std::vector<IntPoly> polys) {
  if (polys.empty()) return IntPoly{1};
  while (polys.size() > 1) {
    std::vector<IntPoly> next;
    next.reserve((polys.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < polys.size(); i += 2) next.push_back(polys[i] * polys[i + 1]);
    if (polys.size() % 2) next.push_back(std::move(polys.back()));
    polys = std::move(next);
  }
  return std::move(polys.front());
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<mpz_class> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

mpq_class evaluate(const IntPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero() || p.leading() == 1) return p;
  mpq_class inv = 1 / p.leading();
  return p * inv;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  const int dp = p.degree(), dq = q.degree();
  if (dp < dq) return {RatPoly{}, p};
  std::vector<mpq_class> r(p.coeffs().begin(), p.coeffs().end());
  std::vector<mpq_class> quot(dp - dq + 1);
  const mpq_class inv_lc = 1 / q.leading();
  mpq_class t;
  for (int i = dp; i >= dq; --i) {
    if (r[i] == 0) continue;
    mpq_class coef = r[i] * inv_lc;
    quot[i - dq] = coef;
    for (int j = 0; j <= dq; ++j) {
      mpq_mul(t.get_mpq_t(), coef.get_mpq_t(), q[j].get_mpq_t());
      r[i - dq + j] -= t;
    }
  }
  r.resize(dq);
  return {RatPoly(std::move(quot)), RatPoly(std::move(r))};
}

namespace {

// Shared long-division loop over Z. Returns false on the first
// non-divisible leading coefficient or a nonzero final remainder.
bool int_long_division(const IntPoly& p, const IntPoly& q, std::vector<mpz_class>& quot,
                       std::vector<mpz_class>* rem_out) {
  const int dp = p.degree(), dq = q.degree();
  std::vector<mpz_class> r(p.coeffs().begin(), p.coeffs().end());
  quot.assign(dp - dq + 1, 0);
  const mpz_srcptr lc = q.leading().get_mpz_t();
  mpz_class coef;
  for (int i = dp; i >= dq; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lc)) {
      if (rem_out == nullptr) return false;
      throw DomainError("inexact division step over Z");
    }
    mpz_divexact(coef.get_mpz_t(), r[i].get_mpz_t(), lc);
    for (int j = 0; j <= dq; ++j) mpz_submul(r[i - dq + j].get_mpz_t(), coef.get_mpz_t(), q[j].get_mpz_t());
    quot[i - dq] = coef;
  }
  r.resize(dq);
  if (rem_out != nullptr) {
    *rem_out = std::move(r);
    return true;
  }
  return std::all_of(r.begin(), r.end(), [](const mpz_class& c) { return c == 0; });
}

}  // namespace

IntPoly divide_exact(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw ArithmeticError("exact division: divisor degree exceeds dividend degree");
  std::vector<mpz_class> quot;
  if (!int_long_division(p, q, quot, nullptr))
    throw ArithmeticError("exact division left a nonzero remainder");
  return IntPoly(std::move(quot));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (q.leading() != 1 && q.leading() != -1)
    throw DomainError("divmod_monic needs a divisor with leading coefficient +-1");
  if (p.degree() < q.degree()) return {IntPoly{}, p};
  std::vector<mpz_class> quot, rem;
  int_long_division(p, q, quot, &rem);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool divides(const IntPoly& q, const IntPoly& p, IntPoly* quotient) {
  if (q.is_zero()) return p.is_zero();
  if (p.is_zero()) {
    if (quotient) *quotient = IntPoly{};
    return true;
  }
  if (p.degree() < q.degree()) return false;
  if (p[0] != 0) {
    if (q[0] == 0 || !mpz_divisible_p(p[0].get_mpz_t(), q[0].get_mpz_t())) return false;
  }
  if (!mpz_divisible_p(p.leading().get_mpz_t(), q.leading().get_mpz_t())) return false;
  std::vector<mpz_class> quot;
  if (!int_long_division(p, q, quot, nullptr)) return false;
  if (quotient) *quotient = IntPoly(std::move(quot));
  return true;
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  const int dq = q.degree();
  if (p.degree() < dq) return p;
  std::vector<mpz_class> r(p.coeffs().begin(), p.coeffs().end());
  const mpz_class& lc = q.leading();
  int e = p.degree() - dq + 1;
  int dr = p.degree();
  while (dr >= dq) {
    mpz_class lr = r[dr];
    // r <- lc*r - lr * x^(dr-dq) * q
    for (int i = 0; i <= dr; ++i) r[i] *= lc;
    for (int j = 0; j <= dq; ++j) mpz_submul(r[dr - dq + j].get_mpz_t(), lr.get_mpz_t(), q[j].get_mpz_t());
    --e;
    --dr;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  r.resize(std::max(dr + 1, 0));
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lc.get_mpz_t(), e);
    for (auto& c : r) c *= f;
  }
  return IntPoly(std::move(r));
}

namespace {

mpz_class zpow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

IntPoly divide_by_scalar(const IntPoly& p, const mpz_class& s) {
  std::vector<mpz_class> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p[i].get_mpz_t(), s.get_mpz_t());
  return IntPoly(std::move(v));
}

}  // namespace

IntPoly gcd_subresultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  IntPoly a = primitive_part(p), b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPoly{1};
  mpz_class g = 1, h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPoly{1};
    a = std::move(b);
    b = divide_by_scalar(r, g * zpow(h, delta));
    g = a.leading();
    if (delta == 0) {
      // h <- h^(1) * g^0 = h
    } else {
      h = zpow(g, delta) / zpow(h, delta - 1);
    }
  }
  return primitive_part(b);
}

RatPoly gcd(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  auto [pi, pd] = clear_denominators(p);
  auto [qi, qd] = clear_denominators(q);
  return make_monic(to_rat(gcd_subresultant(pi, qi)));
}

mpz_class resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  if (p.degree() == 0) return zpow(p[0], q.degree());
  if (q.degree() == 0) return zpow(q[0], p.degree());
  IntPoly a = p, b = q;
  const mpz_class ca = content(a), cb = content(b);
  a = divide_by_scalar(a, ca);
  b = divide_by_scalar(b, cb);
  mpz_class g = 1, h = 1, t = zpow(ca, b.degree()) * zpow(cb, a.degree());
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_by_scalar(r, g * zpow(h, delta));
    g = a.leading();
    if (delta > 0) h = zpow(g, delta) / zpow(h, delta - 1);
    if (b.degree() <= 0) break;
  }
  const int da = a.degree();
  h = zpow(b.leading(), da) / zpow(h, da - 1);
  return s * t * h;
}

int BiPoly::degree_y() const {
  int d = static_cast<int>(coeff_y.size()) - 1;
  while (d >= 0 && coeff_y[d].is_zero()) --d;
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& c : coeff_y) d = std::max(d, c.degree());
  return d;
}

IntPoly BiPoly::at_x(const mpz_class& x0) const {
  std::vector<mpz_class> v(coeff_y.size());
  for (std::size_t j = 0; j < coeff_y.size(); ++j) v[j] = coeff_y[j](x0);
  return IntPoly(std::move(v));
}

BiPoly substitute_x_minus_sy(const IntPoly& p, const mpz_class& s) {
  // p(x - s y) = sum_i c_i sum_k C(i,k) (-s)^k y^k x^(i-k)
  const int n = p.degree();
  BiPoly out;
  if (n < 0) return out;
  std::vector<std::vector<mpz_class>> cols(n + 1, std::vector<mpz_class>(n + 1));
  const mpz_class ms = -s;
  for (int i = 0; i <= n; ++i) {
    if (p[i] == 0) continue;
    mpz_class binom = 1, spow = 1;
    for (int k = 0; k <= i; ++k) {
      cols[k][i - k] += p[i] * binom * spow;
      binom = binom * (i - k) / (k + 1);
      spow *= ms;
    }
  }
  for (int k = 0; k <= n; ++k) out.coeff_y.emplace_back(std::move(cols[k]));
  return out;
}

IntPoly resultant_in_y(const IntPoly& g, const BiPoly& h) {
  const int dg = g.degree(), dh = h.degree_y();
  if (dg < 0 || dh < 0) return {};
  const int bound = dg * std::max(h.degree_x(), 0);
  const IntPoly& top = h.coeff_y[dh];
  std::vector<mpz_class> xs, vs;
  for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    // 0, 1, -1, 2, -2, ...
    const mpz_class x0 = (k % 2 == 1) ? mpz_class((k + 1) / 2) : mpz_class(-(k / 2));
    if (top(x0) == 0) continue;
    xs.push_back(x0);
    vs.push_back(resultant(g, h.at_x(x0)));
  }
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<mpq_class> dd(vs.begin(), vs.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  RatPoly acc = RatPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * RatPoly(std::vector<mpq_class>{mpq_class(-xs[i]), mpq_class(1)});
    acc += RatPoly::constant(dd[i]);
  }
  return to_int(acc);
}

// ---- text I/O ----------------------------------------------------------------

namespace {

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_entries(std::string_view text) {
  std::vector<std::string> out;
  text = trim_ws(text);
  if (text.empty()) throw DomainError("empty coefficient list");
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view item = trim_ws(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (item.empty()) throw DomainError("empty entry in coefficient list \"" + std::string(text) + "\"");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw DomainError("not an integer: \"" + std::string(s) + "\"");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

mpq_class parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(s));
  mpz_class num = parse_integer(trim_ws(s.substr(0, slash)));
  std::string_view dtxt = trim_ws(s.substr(slash + 1));
  if (!dtxt.empty() && (dtxt.front() == '-' || dtxt.front() == '+'))
    throw DomainError("denominator must be unsigned: \"" + std::string(s) + "\"");
  mpz_class den = parse_integer(dtxt);
  if (den == 0) throw DomainError("zero denominator in \"" + std::string(s) + "\"");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

template <class T>
std::string pretty_impl(const Poly<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const T& c = p[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    T a = neg ? T(-c) : c;
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) {
        if constexpr (std::is_same_v<T, mpq_class>) {
          if (a.get_den() != 1)
            os << '(' << a << ')';
          else
            os << a;
        } else {
          os << a;
        }
      }
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

template <class T>
std::string coeff_string_impl(const Poly<T>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os.str();
}

}  // namespace

IntPoly parse_int_poly(std::string_view text) {
  std::vector<mpz_class> v;
  for (const auto& e : split_entries(text)) v.push_back(parse_integer(e));
  return IntPoly(std::move(v));
}

RatPoly parse_rat_poly(std::string_view text) {
  std::vector<mpq_class> v;
  for (const auto& e : split_entries(text)) v.push_back(parse_rational(e));
  return RatPoly(std::move(v));
}

std::string to_coeff_string(const IntPoly& p) { return coeff_string_impl(p); }
std::string to_coeff_string(const RatPoly& p) { return coeff_string_impl(p); }
std::string to_pretty(const IntPoly& p, char var) { return pretty_impl(p, var); }
std::string to_pretty(const RatPoly& p, char var) { return pretty_impl(p, var); }

}  // namespace niven
