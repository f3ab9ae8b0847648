#pragma once

// Dense coefficient-convolution kernels behind polynomial multiplication.
//
// Each kernel exists in two forms: a serial reference (row-by-row
// accumulation, kept for testing and benchmarking) and an OpenMP version
// that assigns one output coefficient per loop iteration. Both write into
// a zero-initialised output of length a.size() + b.size() - 1.

#include <cstddef>
#include <span>

#include <gmpxx.h>

namespace niven::kernels {

void mul_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                std::span<mpz_class> out);
void mul_parallel(std::span<const mpz_class> a, std::span<const mpz_class> b,
                  std::span<mpz_class> out);

void mul_serial(std::span<const mpq_class> a, std::span<const mpq_class> b,
                std::span<mpq_class> out);
void mul_parallel(std::span<const mpq_class> a, std::span<const mpq_class> b,
                  std::span<mpq_class> out);

/// Shorter-operand length from which Poly multiplication switches to the
/// parallel kernel. Tunable at runtime; 0 forces the parallel kernel always.
std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t len);

/// Number of worker threads OpenMP would use (1 when built without OpenMP).
int max_threads();

}  // namespace niven::kernels
