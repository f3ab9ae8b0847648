#include "niven/factor.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "zp.hpp"

namespace niven {

namespace {

using zp::u64;
using zp::Vec;

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct ModularImage {
  u64 p = 0;
  std::vector<std::pair<Vec, int>> ddf;
  std::size_t count = 0;
  /// degrees[k] != 0 iff some sub-multiset of modular factors has degree k.
  std::vector<char> degrees;
};

std::vector<char> subset_degrees(const std::vector<std::pair<Vec, int>>& ddf, int n) {
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (const auto& [g, d] : ddf)
    for (int copies = zp::deg(g) / d; copies > 0; --copies)
      for (int k = n; k >= d; --k)
        if (reach[k - d]) reach[k] = 1;
  return reach;
}

// ---- arithmetic in (Z/MZ)[x], coefficients kept in [0, M) ------------------

IntPoly reduce_mod(const IntPoly& a, const mpz_class& M) {
  std::vector<mpz_class> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(v[i].get_mpz_t(), a[i].get_mpz_t(), M.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const mpz_class& M) { return reduce_mod(a * b, M); }

// Division by a monic b modulo M.
std::pair<IntPoly, IntPoly> divmod_mod(const IntPoly& a, const IntPoly& b, const mpz_class& M) {
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  const std::size_t db = b.degree();
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<mpz_class> q(a.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_fdiv_r(q[k].get_mpz_t(), r[k + db].get_mpz_t(), M.get_mpz_t());
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q[k] * b[j];
  }
  r.resize(db);
  return {reduce_mod(IntPoly(std::move(q)), M), reduce_mod(IntPoly(std::move(r)), M)};
}

IntPoly to_int_poly(const Vec& v) {
  std::vector<mpz_class> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = static_cast<unsigned long>(v[i]);
  return IntPoly(std::move(c));
}

IntPoly symmetric(const IntPoly& a, const mpz_class& M) {
  const mpz_class half = M / 2;
  std::vector<mpz_class> v(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : v)
    if (c > half) c -= M;
  return IntPoly(std::move(v));
}

// ---- Hensel lifting over a balanced factor tree ----------------------------

struct HenselTree {
  struct Node {
    IntPoly g;
    IntPoly s, t;
    int left = -1, right = -1;
  };
  std::vector<Node> nodes;
  std::vector<int> leaf_of;

  int build(const std::vector<Vec>& leaves, std::size_t lo, std::size_t hi, const zp::Field& F) {
    if (hi - lo == 1) {
      nodes.push_back(Node{to_int_poly(leaves[lo]), {}, {}, -1, -1});
      leaf_of[lo] = static_cast<int>(nodes.size()) - 1;
      return leaf_of[lo];
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const int l = build(leaves, lo, mid, F);
    const int r = build(leaves, mid, hi, F);
    const Vec gl = zp::from_int(nodes[l].g, F), gr = zp::from_int(nodes[r].g, F);
    auto [s, t] = zp::xgcd(gl, gr, F);
    nodes.push_back(Node{to_int_poly(zp::mul(gl, gr, F)), to_int_poly(s), to_int_poly(t), l, r});
    return static_cast<int>(nodes.size()) - 1;
  }

  // One quadratic step at every internal node below `id`, lifting to modulus M.
  void step(int id, const IntPoly& target, const mpz_class& M) {
    Node& nd = nodes[id];
    nd.g = target;
    if (nd.left < 0) return;
    const IntPoly g = nodes[nd.left].g, h = nodes[nd.right].g;
    const IntPoly e = reduce_mod(target - g * h, M);
    auto [q, r] = divmod_mod(mul_mod(nd.s, e, M), h, M);
    const IntPoly g2 = reduce_mod(g + nd.t * e + q * g, M);
    const IntPoly h2 = reduce_mod(h + r, M);
    const IntPoly b = reduce_mod(nd.s * g2 + nd.t * h2 - IntPoly{1}, M);
    auto [c, d] = divmod_mod(mul_mod(nd.s, b, M), h2, M);
    nd.s = reduce_mod(nd.s - d, M);
    nd.t = reduce_mod(nd.t - nd.t * b - c * g2, M);
    const int l = nd.left, rr = nd.right;
    step(l, g2, M);
    step(rr, h2, M);
  }
};

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<Vec>& leaves, u64 p, unsigned k) {
  const zp::Field F{p};
  HenselTree tree;
  tree.leaf_of.assign(leaves.size(), -1);
  const int root = tree.build(leaves, 0, leaves.size(), F);

  std::vector<unsigned> exps;
  for (unsigned e = k; e > 1; e = (e + 1) / 2) exps.push_back(e);
  std::reverse(exps.begin(), exps.end());
  const mpz_class P = static_cast<unsigned long>(p);
  for (unsigned e : exps) {
    mpz_class M;
    mpz_pow_ui(M.get_mpz_t(), P.get_mpz_t(), e);
    mpz_class inv_lc;
    mpz_invert(inv_lc.get_mpz_t(), f.leading().get_mpz_t(), M.get_mpz_t());
    tree.step(root, reduce_mod(f * inv_lc, M), M);
  }
  std::vector<IntPoly> out;
  out.reserve(leaves.size());
  for (int id : tree.leaf_of) out.push_back(tree.nodes[id].g);
  return out;
}

// ---- Zassenhaus --------------------------------------------------------------

std::vector<ModularImage> modular_images(const IntPoly& f, unsigned trials) {
  std::vector<u64> primes;
  const IntPoly df = derivative(f);
  for (u64 p = 3; primes.size() < trials; p += 2) {
    if (p > 100000) break;
    if (!is_small_prime(p)) continue;
    const zp::Field F{p};
    if (F.reduce(f.leading()) == 0) continue;
    const Vec fp = zp::from_int(f, F);
    if (zp::deg(zp::gcd(fp, zp::from_int(df, F), F)) != 0) continue;
    primes.push_back(p);
  }
  if (primes.empty()) throw ArithmeticError("factor: no good prime below 100000");

  std::vector<ModularImage> images(primes.size());
  const int n = f.degree();
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const zp::Field F{primes[i]};
    ModularImage& im = images[i];
    im.p = primes[i];
    im.ddf = zp::distinct_degree(zp::monic(zp::from_int(f, F), F), F);
    for (const auto& [g, d] : im.ddf) im.count += zp::deg(g) / d;
    im.degrees = subset_degrees(im.ddf, n);
  }
  return images;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f, const FactorConfig& config) {
  const int n = f.degree();
  const auto images = modular_images(f, std::max(1u, config.prime_trials));

  std::vector<char> allowed(n + 1, 1);
  const ModularImage* best = &images.front();
  for (const auto& im : images) {
    for (int k = 0; k <= n; ++k) allowed[k] &= im.degrees[k];
    if (im.count < best->count) best = &im;
  }
  int max_proper = 0;
  for (int k = 1; k < n; ++k)
    if (allowed[k]) max_proper = k;
  if (best->count == 1 || max_proper == 0) return {f};

  const zp::Field F{best->p};
  std::mt19937_64 rng(config.seed ^ (best->p * 0x9e3779b97f4a7c15ULL));
  std::vector<Vec> leaves;
  for (const auto& [g, d] : best->ddf)
    for (auto& u : zp::equal_degree(g, d, F, rng)) leaves.push_back(std::move(u));

  // Any factor of degree m has sup-norm at most binom(m, m/2) * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), max_proper, max_proper / 2);
  bound *= binom * abs(f.leading()) * 2;
  unsigned k = 1;
  mpz_class M = static_cast<unsigned long>(best->p);
  const mpz_class P = M;
  while (M <= bound) {
    M *= P;
    ++k;
  }
  const std::vector<IntPoly> lifted = hensel_lift(f, leaves, best->p, k);

  std::vector<IntPoly> found;
  IntPoly cur = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    const mpz_class lc = cur.leading();
    const mpz_class c0 = lc * cur[0];
    while (true) {
      int degree = 0;
      for (auto i : pick) degree += lifted[alive[i]].degree();
      if (allowed[degree]) {
        mpz_class t = lc;
        for (auto i : pick) t = t * lifted[alive[i]][0] % M;
        if (t > M / 2) t -= M;
        if (t != 0 && c0 % t == 0) {
          IntPoly g = IntPoly::constant(lc);
          for (auto i : pick) g = mul_mod(g, lifted[alive[i]], M);
          g = primitive_part(symmetric(g, M));
          IntPoly q;
          if (divides(g, cur, &q)) {
            found.push_back(std::move(g));
            cur = std::move(q);
            std::vector<std::size_t> rest;
            std::size_t j = 0;
            for (std::size_t i = 0; i < alive.size(); ++i) {
              if (j < pick.size() && pick[j] == i)
                ++j;
              else
                rest.push_back(alive[i]);
            }
            alive = std::move(rest);
            hit = true;
            break;
          }
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == alive.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (cur.degree() > 0) found.push_back(primitive_part(cur));
  return found;
}

}  // namespace

IntPoly IntFactorization::product() const {
  IntPoly acc = IntPoly::constant(content * unit);
  for (const auto& [f, m] : factors)
    for (unsigned i = 0; i < m; ++i) acc *= f;
  return acc;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decompose(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree_decompose: zero polynomial");
  std::vector<std::pair<IntPoly, unsigned>> out;
  const IntPoly f = primitive_part(p);
  if (f.degree() <= 0) return out;
  const IntPoly df = derivative(f);
  IntPoly a = gcd_subresultant(f, df);
  IntPoly b = divide_exact(f, a);
  IntPoly d = divide_exact(df, a) - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    a = gcd_subresultant(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divide_exact(b, a);
    d = divide_exact(d, a) - derivative(b);
  }
  return out;
}

std::vector<IntPoly> factor_squarefree(const IntPoly& f, const FactorConfig& config) {
  if (f.degree() <= 0) return {};
  std::vector<IntPoly> out;
  IntPoly g = f;
  if (g[0] == 0) {
    out.push_back(IntPoly::x());
    g = divide_exact(g, IntPoly::x());
  }
  if (g.degree() == 1)
    out.push_back(g);
  else if (g.degree() > 1)
    for (auto& h : zassenhaus(g, config)) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

IntFactorization factor_over_integers(const IntPoly& p, const FactorConfig& config) {
  if (p.is_zero()) throw DomainError("factor_over_integers: zero polynomial");
  if (p.degree() > config.max_degree)
    throw CapExceeded("factor_over_integers: degree " + std::to_string(p.degree()) + " exceeds the cap " +
                      std::to_string(config.max_degree));
  IntFactorization out;
  out.unit = sgn(p.leading());
  out.content = content(p);
  for (const auto& [part, mult] : squarefree_decompose(p))
    for (auto& g : factor_squarefree(part, config)) out.factors.emplace_back(std::move(g), mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const IntPoly& p, const FactorConfig& config) {
  const IntFactorization fac = factor_over_integers(p, config);
  return fac.content == 1 && fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace niven
