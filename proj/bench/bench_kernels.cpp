// Serial reference kernels against their OpenMP counterparts.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "niven/dynatomic.hpp"
#include "niven/factor.hpp"
#include "niven/kernels.hpp"
#include "niven/numtheory.hpp"

namespace {

std::vector<mpz_class> operand(std::size_t len, unsigned bits, std::uint64_t seed) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  std::vector<mpz_class> v(len);
  for (auto& x : v) x = rng.get_z_bits(bits) - (mpz_class(1) << (bits - 1));
  return v;
}

template <bool Parallel>
void BM_mul(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto bits = static_cast<unsigned>(state.range(1));
  const auto a = operand(len, bits, 1), b = operand(len, bits, 2);
  std::vector<mpz_class> out(2 * len - 1);
  for (auto _ : state) {
    for (auto& x : out) x = 0;
    if constexpr (Parallel)
      niven::kernels::mul_parallel(a, b, out);
    else
      niven::kernels::mul_serial(a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}

void mul_args(benchmark::internal::Benchmark* b) {
  for (long len : {64, 256, 1024, 4096})
    for (long bits : {64, 1024}) b->Args({len, bits});
}

void BM_totient_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(niven::totient_summatory_serial(state.range(0)));
}

void BM_totient_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(niven::totient_summatory(state.range(0)));
}

void BM_factor_dynatomic(benchmark::State& state) {
  const auto p = niven::dynatomic_poly_int(static_cast<unsigned>(state.range(0)), -2);
  niven::FactorConfig cfg;
  cfg.max_degree = 512;
  for (auto _ : state) benchmark::DoNotOptimize(niven::factor_over_integers(p, cfg));
}

}  // namespace

BENCHMARK(BM_mul<false>)->Name("mul/serial")->Apply(mul_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_mul<true>)->Name("mul/parallel")->Apply(mul_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_totient_serial)->Name("totient_summatory/serial")->Arg(100000)->Arg(2000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_totient_parallel)->Name("totient_summatory/parallel")->Arg(100000)->Arg(2000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_factor_dynatomic)->Name("factor/dynatomic")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
