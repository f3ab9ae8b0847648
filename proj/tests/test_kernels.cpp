#include <doctest.h>

#include "niven/kernels.hpp"
#include "niven/numtheory.hpp"
#include "niven/poly.hpp"
#include "support.hpp"

using namespace niven;
using niven::test::kSeed;

namespace {

template <class T>
std::vector<T> convolve(const std::vector<T>& a, const std::vector<T>& b, bool parallel) {
  std::vector<T> out(a.size() + b.size() - 1);
  if (parallel)
    kernels::mul_parallel(a, b, out);
  else
    kernels::mul_serial(a, b, out);
  return out;
}

}  // namespace

TEST_CASE("integer kernels agree") {
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < 200; ++t) {
    const IntPoly a = test::random_nonzero_poly(rng, 200, 1000000);
    const IntPoly b = test::random_nonzero_poly(rng, 200, 1000000);
    std::vector<mpz_class> av(a.coeffs().begin(), a.coeffs().end()), bv(b.coeffs().begin(), b.coeffs().end());
    REQUIRE(convolve(av, bv, false) == convolve(av, bv, true));
  }
}

TEST_CASE("rational kernels agree") {
  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < 100; ++t) {
    const RatPoly a = test::random_rat_poly(rng, 80, 1000);
    const RatPoly b = test::random_rat_poly(rng, 80, 1000);
    if (a.is_zero() || b.is_zero()) continue;
    std::vector<mpq_class> av(a.coeffs().begin(), a.coeffs().end()), bv(b.coeffs().begin(), b.coeffs().end());
    REQUIRE(convolve(av, bv, false) == convolve(av, bv, true));
  }
}

TEST_CASE("threshold switch does not change products") {
  std::mt19937_64 rng(kSeed + 2);
  const std::size_t saved = kernels::parallel_threshold();
  const IntPoly a = test::random_nonzero_poly(rng, 300, 1000), b = test::random_nonzero_poly(rng, 300, 1000);
  kernels::set_parallel_threshold(0);
  const IntPoly par = a * b;
  kernels::set_parallel_threshold(1u << 30);
  const IntPoly ser = a * b;
  kernels::set_parallel_threshold(saved);
  CHECK(par == ser);
  CHECK(kernels::max_threads() >= 1);
}

TEST_CASE("totient reduction agrees with the serial loop") {
  for (std::uint64_t m : {1ull, 2ull, 50ull, 1000ull, 65536ull, 500000ull})
    CHECK(totient_summatory(m) == totient_summatory_serial(m));
}
