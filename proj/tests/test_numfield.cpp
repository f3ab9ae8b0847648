#include <doctest.h>

#include <set>

#include "niven/classify.hpp"
#include "niven/error.hpp"
#include "niven/numfield.hpp"
#include "niven/numtheory.hpp"
#include "support.hpp"

using namespace niven;
using niven::test::kSeed;

namespace {

RatPoly rp(std::initializer_list<long> c) { return to_rat(IntPoly(c)); }

std::set<std::string> element_strings(const std::vector<FieldElement>& v) {
  std::set<std::string> out;
  for (const auto& e : v) out.insert(to_coeff_string(e.value()));
  return out;
}

void check_cosine_invariants(const NumberField& K) {
  const CosineValues cv = cosine_values_in_field(K);
  const int D = K.degree();
  CHECK(mpz_class(cv.values.size()) <= preper_bound(static_cast<unsigned>(D)));
  std::map<std::uint64_t, int> per_n;
  for (const auto& [a, e] : cv.values) {
    const AlgebraicValue v = min_poly_of(a);
    CHECK(evaluate(v.min_poly, e).is_zero());
    const IntPoly mp = elem_minpoly(e);
    CHECK(mp.is_monic());
    CHECK(D % mp.degree() == 0);
    CHECK(mp == v.min_poly);
    ++per_n[a.n];
  }
  // All conjugates or none.
  for (const auto& [n, count] : per_n) CHECK(count == std::max<int>(1, static_cast<int>(euler_phi(n) / 2)));
  for (const auto& cyc : periodic_cycles(cv.digraph)) CHECK(D % static_cast<int>(cyc.size()) == 0);
}

}  // namespace

TEST_CASE("field construction and validation") {
  const NumberField K(IntPoly{-1, -1, 1});
  CHECK(K.degree() == 2);
  CHECK_THROWS_AS(NumberField(IntPoly{-1, 0, 1}), DomainError);
  CHECK_THROWS_AS(NumberField(IntPoly{-1, 0, 2}), DomainError);
  CHECK_THROWS_AS(NumberField(IntPoly{3}), DomainError);
  try {
    NumberField bad(IntPoly{-2, -1, 1});
    FAIL("reducible modulus accepted");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK((msg.find("y - 2") != std::string::npos || msg.find("y + 1") != std::string::npos));
  }
}

TEST_CASE("field arithmetic examples") {
  const NumberField K(IntPoly{-1, -1, 1});
  const FieldElement y = K.generator();
  CHECK(y.inverse().value() == rp({-1, 1}));
  CHECK(y * K.from_rational(1) == y);
  CHECK((y * y).value() == rp({1, 1}));
  CHECK_THROWS_AS(K.from_rational(0).inverse(), DomainError);
  const NumberField L(IntPoly{-2, 0, 1});
  CHECK_THROWS_AS(y + L.generator(), DomainError);
  CHECK(y.coeffs().size() == 2);
  CHECK(K.from_rational(mpq_class(3, 4)).coeffs() == std::vector<mpq_class>{mpq_class(3, 4), 0});
}

TEST_CASE("property: field axioms and inverses") {
  std::mt19937_64 rng(kSeed);
  const NumberField K(IntPoly{1, -3, 0, 1});
  for (int t = 0; t < 300; ++t) {
    const FieldElement a = K.element(test::random_rat_poly(rng, 4, 20));
    const FieldElement b = K.element(test::random_rat_poly(rng, 4, 20));
    const FieldElement c = K.element(test::random_rat_poly(rng, 4, 20));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == K.from_rational(1));
  }
}

TEST_CASE("element minimal polynomials") {
  const NumberField K(IntPoly{-1, -1, 1});
  CHECK(elem_minpoly(K.generator()) == IntPoly{-1, -1, 1});
  CHECK(elem_minpoly(K.from_rational(mpq_class(5, 3))) == IntPoly{-5, 3});
  CHECK(elem_minpoly(-K.generator()) == IntPoly{-1, 1, 1});
  const NumberField C(IntPoly{1, -3, 0, 1});
  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < 50; ++t) {
    const FieldElement a = C.element(test::random_rat_poly(rng, 2, 9));
    const IntPoly mp = elem_minpoly(a);
    CHECK(evaluate(mp, a).is_zero());
    CHECK((mp.degree() == 1 || mp.degree() == 3));
    CHECK(mp.degree() == (a.is_rational() ? 1 : 3));
  }
}

TEST_CASE("roots in a field") {
  const NumberField K(IntPoly{-1, -1, 1});
  CHECK(element_strings(roots_in_field(IntPoly{-1, 1, 1}, K)) ==
        std::set<std::string>{to_coeff_string(rp({-1, 1})), to_coeff_string(rp({0, -1}))});
  CHECK(roots_in_field(IntPoly{-3, 0, 1}, K).empty());
  const auto r = roots_in_field(IntPoly{-2, 1}, K);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == K.from_rational(2));
  const NumberField Q(IntPoly{0, 1});
  CHECK(roots_in_field(IntPoly{-2, -1, 1}, Q).size() == 2);
  // Cyclic cubic field: all three conjugates of 2cos(2 pi/9).
  const NumberField C(IntPoly{1, -3, 0, 1});
  for (const auto& root : roots_in_field(IntPoly{1, -3, 0, 1}, C)) CHECK(evaluate(IntPoly{1, -3, 0, 1}, root).is_zero());
  CHECK(roots_in_field(IntPoly{1, -3, 0, 1}, C).size() == 3);
  // Non-Galois cubic: only one root lies in the field.
  const NumberField N(IntPoly{-2, 0, 0, 1});
  CHECK(roots_in_field(IntPoly{-2, 0, 0, 1}, N).size() == 1);
}

TEST_CASE("cosine values in small fields") {
  const NumberField Q(IntPoly{0, 1});
  const CosineValues q = cosine_values_in_field(Q);
  REQUIRE(q.values.size() == 5);
  std::set<std::string> rationals;
  for (const auto& [a, e] : q.values) rationals.insert(to_coeff_string(e.value()));
  CHECK(rationals == std::set<std::string>{"2", "-2", "-1", "0", "1"});

  const NumberField G(IntPoly{-1, -1, 1});
  const CosineValues g = cosine_values_in_field(G);
  CHECK(g.values.size() == 9);
  std::set<std::string> golden;
  for (const auto& [a, e] : g.values)
    if (!e.is_rational()) golden.insert(to_coeff_string(e.value()));
  CHECK(golden == std::set<std::string>{"0,1", "-1,1", "0,-1", "1,-1"});
  for (const auto& [a, e] : g.values)
    CHECK(e.is_zero() ? a == AngleClass{1, 4} : true);
  // Pairing with angles follows y -> (1 + sqrt5)/2.
  for (const auto& [a, e] : g.values)
    if (a == AngleClass{1, 10}) CHECK(e == G.generator());

  const NumberField S(IntPoly{-2, 0, 1});
  const CosineValues s = cosine_values_in_field(S);
  CHECK(s.values.size() == 7);
}

TEST_CASE("cosine invariants across fields") {
  for (const IntPoly& g : {IntPoly{0, 1}, IntPoly{-1, -1, 1}, IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}, IntPoly{1, 0, 1},
                           IntPoly{1, -3, 0, 1}, IntPoly{-1, -2, 1, 1}, IntPoly{-2, 0, 0, 1}, IntPoly{1, 4, -4, -1, 1},
                           IntPoly{1, 0, -4, 0, 1}, IntPoly{1, 0, 0, 0, 1}})
    check_cosine_invariants(NumberField(g));
}

TEST_CASE("cyclotomic field of conductor 24 has the expected cosine set") {
  // Q(sqrt2, sqrt3) = Q(2cos(2 pi/24)), degree 4.
  const NumberField K(IntPoly{1, 0, -4, 0, 1});
  const CosineValues cv = cosine_values_in_field(K);
  std::set<std::uint64_t> ns;
  for (const auto& [a, e] : cv.values) ns.insert(a.n);
  CHECK(ns == std::set<std::uint64_t>{1, 2, 3, 4, 6, 8, 12, 24});
  CHECK(cv.values.size() == 5 + 2 + 2 + 4);
}
