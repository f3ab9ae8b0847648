#include "zp.hpp"

#include <algorithm>

namespace niven::zp {

using u128 = unsigned __int128;

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a % p == 0) throw ArithmeticError("zp: inverse of zero");
  return pow(a, p - 2);
}

u64 Field::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

int deg(const Vec& a) { return static_cast<int>(a.size()) - 1; }

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec from_int(const IntPoly& f, const Field& F) {
  Vec out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = F.reduce(f[i]);
  trim(out);
  return out;
}

Vec add(const Vec& a, const Vec& b, const Field& F) {
  Vec out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

Vec sub(const Vec& a, const Vec& b, const Field& F) {
  Vec out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

Vec mul(const Vec& a, const Vec& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  Vec out(n);
  // Products are below 2^62; a 128-bit accumulator needs one reduction per output.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0;
    const std::size_t hi = std::min(k, a.size() - 1);
    u128 acc = 0;
    for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<u128>(a[i] * b[k - i]);
    out[k] = static_cast<u64>(acc % F.p);
  }
  trim(out);
  return out;
}

Vec scale(const Vec& a, u64 s, const Field& F) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], s);
  trim(out);
  return out;
}

Vec derivative(const Vec& a, const Field& F) {
  if (a.size() <= 1) return {};
  Vec out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(a[i], i % F.p);
  trim(out);
  return out;
}

Vec monic(const Vec& a, const Field& F) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, F.inv(a.back()), F);
}

std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b, const Field& F) {
  if (b.empty()) throw DomainError("zp: division by zero polynomial");
  if (a.size() < b.size()) return {Vec{}, a};
  Vec r = a;
  const std::size_t db = b.size() - 1;
  Vec q(a.size() - db);
  const u64 inv_lc = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 c = F.mul(r[k + db], inv_lc);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {std::move(q), std::move(r)};
}

Vec rem(const Vec& a, const Vec& b, const Field& F) {
  if (b.empty()) throw DomainError("zp: division by zero polynomial");
  if (a.size() < b.size()) return a;
  Vec r = a;
  const std::size_t db = b.size() - 1;
  const u64 inv_lc = F.inv(b.back());
  for (std::size_t k = a.size() - db; k-- > 0;) {
    const u64 c = F.mul(r[k + db], inv_lc);
    if (!c) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  return r;
}

Vec gcd(Vec a, Vec b, const Field& F) {
  while (!b.empty()) {
    Vec r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

std::pair<Vec, Vec> xgcd(const Vec& a, const Vec& b, const Field& F) {
  Vec r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, F);
    Vec s = sub(s0, mul(q, s1, F), F);
    Vec t = sub(t0, mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {Vec{}, Vec{}};
  const u64 inv_lc = F.inv(r0.back());
  return {scale(s0, inv_lc, F), scale(t0, inv_lc, F)};
}

Vec mulmod(const Vec& a, const Vec& b, const Vec& m, const Field& F) { return rem(mul(a, b, F), m, F); }

Vec powmod(Vec a, u64 e, const Vec& m, const Field& F) {
  Vec r{1};
  r = rem(r, m, F);
  a = rem(a, m, F);
  while (e) {
    if (e & 1) r = mulmod(r, a, m, F);
    e >>= 1;
    if (e) a = mulmod(a, a, m, F);
  }
  return r;
}

Vec Frobenius::apply(const Vec& h, const Field& F) const {
  const std::size_t n = rows.size();
  std::vector<u128> acc(n, 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i]) continue;
    const Vec& row = rows[i];
    for (std::size_t j = 0; j < row.size(); ++j) acc[j] += static_cast<u128>(h[i] * row[j]);
  }
  Vec out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<u64>(acc[j] % F.p);
  trim(out);
  return out;
}

Frobenius frobenius_matrix(const Vec& m, const Field& F) {
  const std::size_t n = m.size() - 1;
  Frobenius Q;
  Q.rows.resize(n);
  const Vec xp = powmod(Vec{0, 1}, F.p, m, F);
  Vec cur = rem(Vec{1}, m, F);
  for (std::size_t i = 0; i < n; ++i) {
    Q.rows[i] = cur;
    if (i + 1 < n) cur = mulmod(cur, xp, m, F);
  }
  return Q;
}

std::vector<std::pair<Vec, int>> distinct_degree(const Vec& f, const Field& F) {
  std::vector<std::pair<Vec, int>> out;
  if (deg(f) <= 0) return out;
  const Frobenius Q = frobenius_matrix(f, F);
  const Vec x{0, 1};
  Vec rest = f;
  Vec h = rem(x, f, F);
  for (int d = 1; 2 * d <= deg(rest); ++d) {
    h = Q.apply(h, F);
    Vec g = gcd(rest, sub(h, x, F), F);
    if (deg(g) > 0) {
      rest = divmod(rest, g, F).first;
      out.emplace_back(std::move(g), d);
    }
  }
  if (deg(rest) > 0) {
    const int d = deg(rest);
    out.emplace_back(monic(rest, F), d);
  }
  return out;
}

std::vector<Vec> equal_degree(const Vec& g, int d, const Field& F, std::mt19937_64& rng) {
  const int n = deg(g);
  if (n == d) return {g};
  const Frobenius Q = frobenius_matrix(g, F);
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  std::vector<Vec> done, pending{g};
  while (!pending.empty()) {
    Vec a(n);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p - 1)/2)
    Vec norm = a, conj = a;
    for (int i = 1; i < d; ++i) {
      conj = Q.apply(conj, F);
      norm = mulmod(norm, conj, g, F);
    }
    Vec b = sub(powmod(norm, (F.p - 1) / 2, g, F), Vec{1}, F);
    std::vector<Vec> next;
    for (auto& h : pending) {
      Vec s = gcd(h, rem(b, h, F), F);
      if (deg(s) > 0 && deg(s) < deg(h)) {
        Vec t = divmod(h, s, F).first;
        for (Vec* part : {&s, &t}) {
          if (deg(*part) == d)
            done.push_back(std::move(*part));
          else
            next.push_back(std::move(*part));
        }
      } else {
        next.push_back(std::move(h));
      }
    }
    pending = std::move(next);
  }
  std::sort(done.begin(), done.end());
  return done;
}

}  // namespace niven::zp
