#pragma once

#include <complex>
#include <cstddef>

namespace adelic::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };
const char* to_string(Backend b);

// out[j] = start[j] * sum_{k<n} coeffs[k] * ratio[j]^k  for j < m  (Horner).
// This is the trapezoid sum of an inverse Mellin integral on a uniform grid,
// with ratio = x^(-i dt) and start = x^(-c - i t0).
void geometric_sums_scalar(const cplx* coeffs, std::size_t n, const cplx* start, const cplx* ratio, cplx* out,
                           std::size_t m);
#if defined(ADELIC_HAVE_AVX2_KERNEL)
void geometric_sums_avx2(const cplx* coeffs, std::size_t n, const cplx* start, const cplx* ratio, cplx* out,
                         std::size_t m);
#endif

// Backend picked once per process: AVX2+FMA when the CPU has it, unless the
// environment sets ADELIC_ZETA_SIMD=scalar.
Backend active_backend();
bool avx2_available();
void geometric_sums(const cplx* coeffs, std::size_t n, const cplx* start, const cplx* ratio, cplx* out, std::size_t m);

} // namespace adelic::kernels
