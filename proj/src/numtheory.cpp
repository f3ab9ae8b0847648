#include "niven/numtheory.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "niven/error.hpp"

namespace niven {

mpz_class FactoredInteger::value() const {
  mpz_class v = 1, t;
  for (const auto& [p, e] : factors) {
    mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e);
    v *= t;
  }
  return v;
}

namespace {

constexpr unsigned kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_round(const mpz_class& n, const mpz_class& d, unsigned s, const mpz_class& base) {
  const mpz_class nm1 = n - 1;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

const mpz_class& deterministic_mr_limit() {
  static const mpz_class limit("3317044064679887385961981", 10);
  return limit;
}

}  // namespace

bool is_prime(const mpz_class& n, std::uint64_t seed) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  if (n < deterministic_mr_limit()) {
    for (unsigned p : kSmallPrimes)
      if (!miller_rabin_round(n, d, s, mpz_class(p))) return false;
    return true;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const mpz_class span = n - 3;
  for (int round = 0; round < 64; ++round) {
    mpz_class base = rng.get_z_range(span) + 2;
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

namespace {

// One nontrivial factor of composite odd n, or 0 when the budget runs out.
mpz_class brent_rho(const mpz_class& n, std::mt19937_64& rng, std::uint64_t budget) {
  std::uniform_int_distribution<unsigned long> dist(1, 1ul << 30);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const mpz_class c = mpz_class(dist(rng)) % n;
    mpz_class y = mpz_class(dist(rng)) % n, x, ys, q = 1, g = 1, t;
    const std::uint64_t m = 128;
    std::uint64_t r = 1, spent = 0;
    auto step = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          t = x - y;
          q = (q * abs(t)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        spent += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && spent < budget);
    if (g == 1) return 0;
    if (g == n) {
      do {
        step(ys);
        t = x - ys;
        t = abs(t);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out, std::mt19937_64& rng,
                 const FactorOptions& opts) {
  if (n == 1) return;
  if (is_prime(n, opts.seed)) {
    ++out[n];
    return;
  }
  mpz_class d = brent_rho(n, rng, opts.rho_budget);
  if (d == 0)
    throw CapExceeded("factorisation budget exhausted on a cofactor of " +
                      std::to_string(mpz_sizeinbase(n.get_mpz_t(), 2)) + " bits");
  factor_into(d, out, rng, opts);
  factor_into(n / d, out, rng, opts);
}

}  // namespace

FactoredInteger factorize(const mpz_class& n_in, const FactorOptions& opts) {
  if (n_in <= 1) throw DomainError("factorize needs n > 1");
  if (n_in > opts.cap) throw CapExceeded("integer exceeds the factorisation cap; lower the degree");
  mpz_class n = n_in;
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (n == 1) break;
    if (static_cast<unsigned long>(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++found[mpz_class(p)];
    }
  }
  if (n > 1) {
    std::mt19937_64 rng(opts.seed);
    factor_into(n, found, rng, opts);
  }
  FactoredInteger f;
  for (auto& [p, e] : found) f.factors.emplace_back(p, e);
  return f;
}

std::vector<mpz_class> divisors(const FactoredInteger& f) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors of 0");
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

namespace {

// Small-integer factorisation for the 64-bit helpers.
std::vector<std::pair<std::uint64_t, unsigned>> small_factor(std::uint64_t n) {
  if (n == 0) throw DomainError("argument must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (n == 1) return out;
  if (n > (1ull << 40)) {
    for (const auto& [p, e] : factorize(mpz_class(static_cast<unsigned long>(n))).factors)
      out.emplace_back(p.get_ui(), e);
    return out;
  }
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : small_factor(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, e] : small_factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

unsigned p_adic_valuation(const mpz_class& p, const mpz_class& s) {
  if (s == 0) throw DomainError("valuation of 0 is undefined");
  if (p < 2) throw DomainError("valuation base must be a prime");
  mpz_class t = s;
  return static_cast<unsigned>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t()));
}

mpz_class mult_order(const mpz_class& a, const mpz_class& n) {
  if (n <= 1) throw DomainError("mult_order needs n > 1");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw DomainError("mult_order needs gcd(a, n) = 1");
  // phi(n) from the factorisation of n, then strip primes of phi(n).
  mpz_class phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    phi *= pe * (p - 1);
  }
  mpz_class order = phi, am = a % n, t;
  if (am < 0) am += n;
  if (phi == 1) return 1;
  for (const auto& [q, e] : factorize(phi).factors) {
    for (unsigned i = 0; i < e; ++i) {
      mpz_class cand = order / q;
      mpz_powm(t.get_mpz_t(), am.get_mpz_t(), cand.get_mpz_t(), n.get_mpz_t());
      if (t != 1) break;
      order = cand;
    }
  }
  return order;
}

mpz_class totient_summatory_serial(std::uint64_t m) {
  mpz_class total = 0;
  for (std::uint64_t k = 1; k <= m; ++k) total += static_cast<unsigned long>(euler_phi(k));
  return total;
}

mpz_class totient_summatory(std::uint64_t m) {
  if (m > (1ull << 32)) throw CapExceeded("totient_summatory argument too large");
  unsigned long long total = 0;
  const long long mm = static_cast<long long>(m);
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 64)
  for (long long k = 1; k <= mm; ++k) total += euler_phi(static_cast<std::uint64_t>(k));
  return mpz_class(std::to_string(total), 10);
}

}  // namespace niven
