#include "niven/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace niven::kernels {

namespace {
std::atomic<std::size_t> g_threshold{48};
}

std::size_t parallel_threshold() { return g_threshold.load(std::memory_order_relaxed); }
void set_parallel_threshold(std::size_t len) { g_threshold.store(len, std::memory_order_relaxed); }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Serial reference: accumulate one row a[i]*b per step.
void mul_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                std::span<mpz_class> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

// One output coefficient per iteration; iterations touch disjoint outputs
// and only read the operands, so no synchronisation is needed. The work per
// index is triangular, hence the dynamic schedule.
void mul_parallel(std::span<const mpz_class> a, std::span<const mpz_class> b,
                  std::span<mpz_class> out) {
  const long na = static_cast<long>(a.size());
  const long nb = static_cast<long>(b.size());
  const long nout = na + nb - 1;
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < nout; ++k) {
    const long lo = std::max(0L, k - nb + 1);
    const long hi = std::min(k, na - 1);
    mpz_ptr acc = out[k].get_mpz_t();
    for (long i = lo; i <= hi; ++i)
      mpz_addmul(acc, a[i].get_mpz_t(), b[k - i].get_mpz_t());
  }
}

void mul_serial(std::span<const mpq_class> a, std::span<const mpq_class> b,
                std::span<mpq_class> out) {
  mpq_class t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      out[i + j] += t;
    }
  }
}

void mul_parallel(std::span<const mpq_class> a, std::span<const mpq_class> b,
                  std::span<mpq_class> out) {
  const long na = static_cast<long>(a.size());
  const long nb = static_cast<long>(b.size());
  const long nout = na + nb - 1;
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < nout; ++k) {
    const long lo = std::max(0L, k - nb + 1);
    const long hi = std::min(k, na - 1);
    mpq_class t;
    for (long i = lo; i <= hi; ++i) {
      mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[k - i].get_mpq_t());
      out[k] += t;
    }
  }
}

}  // namespace niven::kernels
