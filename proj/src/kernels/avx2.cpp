#include <immintrin.h>

#include "adelic/kernels.hpp"

namespace adelic::kernels {

namespace {

// (a * b) for two packed complex numbers per register; bre/bim hold the
// duplicated real and imaginary parts of b.
inline __m256d cmul(__m256d a, __m256d bre, __m256d bim) {
  const __m256d swapped = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, bre, _mm256_mul_pd(swapped, bim));
}

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

} // namespace

void geometric_sums_avx2(const cplx* coeffs, std::size_t n, const cplx* start, const cplx* ratio, cplx* out,
                         std::size_t m) {
  std::size_t j = 0;
  // Four independent Horner chains (eight abscissae) per pass.
  for (; j + 8 <= m; j += 8) {
    __m256d re[4], im[4], acc[4];
    for (int u = 0; u < 4; ++u) {
      const __m256d r = load2(ratio + j + 2 * u);
      re[u] = _mm256_movedup_pd(r);
      im[u] = _mm256_permute_pd(r, 0xF);
      acc[u] = _mm256_setzero_pd();
    }
    for (std::size_t k = n; k-- > 0;) {
      const __m256d a = _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(coeffs + k));
      for (int u = 0; u < 4; ++u) acc[u] = _mm256_add_pd(cmul(acc[u], re[u], im[u]), a);
    }
    for (int u = 0; u < 4; ++u) {
      const __m256d s = load2(start + j + 2 * u);
      const __m256d res = cmul(acc[u], _mm256_movedup_pd(s), _mm256_permute_pd(s, 0xF));
      _mm256_storeu_pd(reinterpret_cast<double*>(out + j + 2 * u), res);
    }
  }
  for (; j + 2 <= m; j += 2) {
    const __m256d r = load2(ratio + j);
    const __m256d re = _mm256_movedup_pd(r), im = _mm256_permute_pd(r, 0xF);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = n; k-- > 0;) {
      const __m256d a = _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(coeffs + k));
      acc = _mm256_add_pd(cmul(acc, re, im), a);
    }
    const __m256d s = load2(start + j);
    _mm256_storeu_pd(reinterpret_cast<double*>(out + j), cmul(acc, _mm256_movedup_pd(s), _mm256_permute_pd(s, 0xF)));
  }
  if (j < m) geometric_sums_scalar(coeffs, n, start + j, ratio + j, out + j, m - j);
}

} // namespace adelic::kernels
