#include <doctest.h>

#include <numeric>

#include "niven/error.hpp"
#include "niven/numtheory.hpp"
#include "support.hpp"

using namespace niven;
using niven::test::kSeed;

namespace {

std::uint64_t phi_by_counting(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

int moebius_by_trial(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

bool prime_by_trial(const mpz_class& n) {
  if (n < 2) return false;
  for (mpz_class d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("totient and Moebius examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK_THROWS_AS(euler_phi(0), DomainError);
  CHECK_THROWS_AS(moebius(0), DomainError);
}

TEST_CASE("totient and Moebius against brute force") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    REQUIRE(euler_phi(n) == phi_by_counting(n));
    REQUIRE(moebius(n) == moebius_by_trial(n));
  }
}

TEST_CASE("factorize examples") {
  CHECK(factorize(15) == FactoredInteger{{{3, 1}, {5, 1}}});
  CHECK(factorize(33) == FactoredInteger{{{3, 1}, {11, 1}}});
  CHECK(factorize(257) == FactoredInteger{{{257, 1}}});
  CHECK_THROWS_AS(factorize(1), DomainError);
  FactorOptions small;
  small.cap = 1000;
  CHECK_THROWS_AS(factorize(1001, small), CapExceeded);
  // 2^64 + 1 = 274177 * 67280421310721
  const mpz_class f6 = (mpz_class(1) << 64) + 1;
  CHECK(factorize(f6) == FactoredInteger{{{274177, 1}, {mpz_class("67280421310721"), 1}}});
  // 2^67 - 1 = 193707721 * 761838257287
  const mpz_class m67 = (mpz_class(1) << 67) - 1;
  CHECK(factorize(m67) == FactoredInteger{{{193707721, 1}, {mpz_class("761838257287"), 1}}});
}

TEST_CASE("factorize reconstructs and lists primes") {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<unsigned long> d(2, 1ul << 40);
  for (int t = 0; t < 300; ++t) {
    const mpz_class n = d(rng);
    const FactoredInteger f = factorize(n);
    REQUIRE(f.value() == n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      REQUIRE(is_prime(f.factors[i].first));
      if (i) REQUIRE(f.factors[i - 1].first < f.factors[i].first);
    }
  }
}

TEST_CASE("primality against trial division") {
  for (long n = 0; n < 5000; ++n) REQUIRE(is_prime(n) == prime_by_trial(n));
  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime(mpz_class("3215031751")));
  CHECK_FALSE(is_prime(mpz_class("3825123056546413051")));
  CHECK(is_prime((mpz_class(1) << 89) - 1));
  CHECK(is_prime((mpz_class(1) << 127) - 1));
}

TEST_CASE("valuation and order examples") {
  CHECK(p_adic_valuation(3, 513) == 3);
  CHECK(p_adic_valuation(3, (mpz_class(1) << 25) + 1) == 1);
  CHECK(p_adic_valuation(2, 8) == 3);
  CHECK_THROWS_AS(p_adic_valuation(3, 0), DomainError);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(2, 3) == 2);
  CHECK(mult_order(1, 10) == 1);
  CHECK_THROWS_AS(mult_order(2, 6), DomainError);
}

TEST_CASE("divisors") {
  CHECK(divisors(std::uint64_t{12}) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(std::uint64_t{1}) == std::vector<std::uint64_t>{1});
  const auto big = divisors(factorize(255));
  CHECK(big.size() == 8);
  CHECK(big.front() == 1);
  CHECK(big.back() == 255);
}

TEST_CASE("totient summatory") {
  CHECK(totient_summatory(1) == 1);
  CHECK(totient_summatory(8) == 22);
  CHECK(totient_summatory(32) == 324);
  mpz_class acc = 0;
  for (std::uint64_t k = 1; k <= 3000; ++k) acc += phi_by_counting(k);
  CHECK(totient_summatory(3000) == acc);
  for (std::uint64_t m : {1ull, 7ull, 100ull, 12345ull, 200000ull})
    CHECK(totient_summatory(m) == totient_summatory_serial(m));
}

TEST_CASE("property: multiplicativity of phi") {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<std::uint64_t> d(1, 10000);
  int checked = 0;
  while (checked < 1000) {
    const std::uint64_t a = d(rng), b = d(rng);
    if (std::gcd(a, b) != 1) continue;
    REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
    ++checked;
  }
}

TEST_CASE("property: Moebius sums over divisors") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    int s = 0;
    for (auto d : divisors(n)) s += moebius(d);
    REQUIRE(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("property: order divides phi") {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<std::uint64_t> d(2, 100000);
  int checked = 0;
  while (checked < 1000) {
    const std::uint64_t n = d(rng), a = d(rng) % n;
    if (a == 0 || std::gcd(a, n) != 1) continue;
    const mpz_class r = mult_order(a, n);
    REQUIRE(mpz_class(euler_phi(n)) % r == 0);
    mpz_class pw;
    mpz_powm(pw.get_mpz_t(), mpz_class(a).get_mpz_t(), r.get_mpz_t(), mpz_class(n).get_mpz_t());
    REQUIRE(pw == 1 % n);
    ++checked;
  }
}

TEST_CASE("prime divisors of 2^(2^k) + 1") {
  for (unsigned k = 2; k <= 4; ++k) {
    const mpz_class v = (mpz_class(1) << (1u << k)) + 1;
    for (const auto& [q, e] : factorize(v).factors) CHECK(q % (mpz_class(1) << (k + 2)) == 1);
  }
}

TEST_CASE("new prime divisors of 2^(p^k) -+ 1") {
  for (unsigned long p : {3ul, 5ul, 7ul})
    for (unsigned k : {1u, 2u}) {
      const unsigned long pk = k == 1 ? p : p * p, prev = pk / p;
      for (int sign : {-1, 1}) {
        const mpz_class v = (mpz_class(1) << pk) + sign;
        const mpz_class w = (mpz_class(1) << prev) + sign;
        for (const auto& [q, e] : factorize(v).factors) {
          if (w != 0 && w % q == 0) continue;
          CHECK(q % (2 * pk) == 1);
        }
      }
    }
}

TEST_CASE("3-adic valuations of 2^(p^k) -+ 1") {
  CHECK(p_adic_valuation(3, (mpz_class(1) << 3) + 1) == 2);
  CHECK(p_adic_valuation(3, (mpz_class(1) << 9) + 1) == 3);
  CHECK(p_adic_valuation(3, (mpz_class(1) << 27) + 1) == 4);
  for (unsigned long p : {5ul, 7ul, 11ul})
    for (unsigned long pk : {p, p * p}) {
      CHECK(p_adic_valuation(3, (mpz_class(1) << pk) + 1) == 1);
      CHECK(p_adic_valuation(3, (mpz_class(1) << pk) - 1) == 0);
    }
  for (unsigned long pk : {3ul, 9ul, 27ul}) CHECK(p_adic_valuation(3, (mpz_class(1) << pk) - 1) == 0);
}
