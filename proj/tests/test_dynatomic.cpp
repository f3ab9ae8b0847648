#include <doctest.h>

#include "niven/dynatomic.hpp"
#include "niven/error.hpp"
#include "niven/factor.hpp"
#include "support.hpp"

using namespace niven;

namespace {

RatPoly f_c(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c, 0, 1}); }

RatPoly iterate_by_composition(unsigned k, const mpq_class& c) {
  RatPoly p = RatPoly::x();
  for (unsigned i = 0; i < k; ++i) p = compose(f_c(c), p);
  return p;
}

// Printed sextic for period 3 with parameter c.
RatPoly period3_formula(const mpq_class& c) {
  return RatPoly(std::vector<mpq_class>{c * c * c + 2 * c * c + c + 1, c * c + 2 * c + 1, 3 * c * c + 3 * c + 1,
                                        2 * c + 1, 3 * c + 1, 1, 1});
}

}  // namespace

TEST_CASE("iterate examples") {
  CHECK(iterate_f(1, -2) == to_rat(IntPoly{-2, 0, 1}));
  CHECK(iterate_f(2, -2) == to_rat(IntPoly{2, 0, -4, 0, 1}));
  CHECK(iterate_f(0, mpq_class(3, 7)) == RatPoly::x());
  CHECK_THROWS_AS(iterate_f(21, -2), CapExceeded);
  CHECK_NOTHROW(iterate_f(3, -2, DynamicsLimits{3, 12}));
  CHECK_THROWS_AS(iterate_f(4, -2, DynamicsLimits{3, 12}), CapExceeded);
}

TEST_CASE("iterates agree with repeated composition") {
  for (const mpq_class& c : {mpq_class(-2), mpq_class(0), mpq_class(1, 4), mpq_class(-3, 5)})
    for (unsigned k = 0; k <= 5; ++k) CHECK(iterate_f(k, c) == iterate_by_composition(k, c));
  for (unsigned k = 0; k <= 6; ++k) CHECK(to_rat(iterate_f_int(k, -2)) == iterate_by_composition(k, -2));
}

TEST_CASE("dynatomic formulas for small periods") {
  for (const mpq_class& c : {mpq_class(0), mpq_class(-1), mpq_class(-2), mpq_class(1, 4), mpq_class(7, 3)}) {
    CHECK(dynatomic_poly(1, c) == RatPoly(std::vector<mpq_class>{c, -1, 1}));
    CHECK(dynatomic_poly(2, c) == RatPoly(std::vector<mpq_class>{c + 1, 1, 1}));
    CHECK(dynatomic_poly(3, c) == period3_formula(c));
  }
  CHECK(dynatomic_poly_int(3, -2) == IntPoly{-1, -2, 1, 1} * IntPoly{1, -3, 0, 1});
  CHECK_THROWS_AS(dynatomic_poly(13, -2), CapExceeded);
}

TEST_CASE("closed form examples") {
  CHECK(vh_factorization(1).exponents == std::map<std::uint64_t, long>{{1, 2}, {3, 1}});
  CHECK(vh_factorization(2).exponents == std::map<std::uint64_t, long>{{5, 1}});
  CHECK(vh_factorization(4).exponents == std::map<std::uint64_t, long>{{15, 1}, {17, 1}});
  CHECK(vh_factorization(1).materialize() == IntPoly{-2, -1, 1});
  const auto d5 = factor_iterate_minus_x(5);
  std::vector<int> degrees;
  for (const auto& f : d5.factors()) degrees.push_back(f.degree);
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 5, 10, 15});
}

TEST_CASE("closed form equals the Moebius product, n = 1..8") {
  for (unsigned n = 1; n <= 8; ++n) REQUIRE(vh_factorization(n).materialize() == dynatomic_poly_int(n, -2));
}

TEST_CASE("telescoping product, n = 1..8") {
  for (unsigned n = 1; n <= 8; ++n) {
    IntPoly prod{1};
    for (auto d : divisors(static_cast<std::uint64_t>(n))) prod *= dynatomic_poly_int(static_cast<unsigned>(d), -2);
    REQUIRE(prod == iterate_f_int(n, -2) - IntPoly::x());
  }
  for (unsigned D = 1; D <= 6; ++D)
    REQUIRE(factor_iterate_minus_x(D).materialize() == iterate_f_int(D, -2) - IntPoly::x());
}

TEST_CASE("period divides the Psi degree, n = 1..8") {
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& [m, e] : vh_factorization(n).exponents)
      if (m > 2) CHECK(euler_phi(m) / 2 % n == 0);
}

TEST_CASE("exponent-space rules") {
  PsiFactorization odd;
  odd.exponents = {{1, 1}};
  CHECK_THROWS_AS(odd.materialize(), ArithmeticError);
  PsiFactorization neg;
  neg.exponents = {{5, -1}};
  CHECK_THROWS_AS(neg.factors(), ArithmeticError);
  PsiFactorization sq;
  sq.exponents = {{2, 4}, {5, 0}};
  CHECK(sq.materialize() == IntPoly{4, 4, 1});
  CHECK(sq.degree() == 2);
}

TEST_CASE("factoring agrees with the closed form, D = 1..5") {
  FactorConfig cfg;
  for (unsigned D = 1; D <= 5; ++D) {
    const PsiFactorization closed = factor_iterate_minus_x(D);
    const IntFactorization fac = factor_over_integers(closed.materialize(), cfg);
    std::vector<IntPoly> a, b;
    for (const auto& [p, m] : fac.factors) {
      CHECK(m == 1);
      a.push_back(p);
    }
    for (const auto& f : closed.factors()) b.push_back(f.poly);
    auto key = [](const IntPoly& x, const IntPoly& y) { return to_coeff_string(x) < to_coeff_string(y); };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    CHECK(a == b);
  }
}
