#include <cstdlib>
#include <string>

#include "adelic/kernels.hpp"

namespace adelic::kernels {

const char* to_string(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(ADELIC_HAVE_AVX2_KERNEL)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend chosen = [] {
    const char* env = std::getenv("ADELIC_ZETA_SIMD");
    if (env && std::string(env) == "scalar") return Backend::scalar;
    return avx2_available() ? Backend::avx2 : Backend::scalar;
  }();
  return chosen;
}

void geometric_sums(const cplx* coeffs, std::size_t n, const cplx* start, const cplx* ratio, cplx* out, std::size_t m) {
#if defined(ADELIC_HAVE_AVX2_KERNEL)
  if (active_backend() == Backend::avx2) {
    geometric_sums_avx2(coeffs, n, start, ratio, out, m);
    return;
  }
#endif
  geometric_sums_scalar(coeffs, n, start, ratio, out, m);
}

} // namespace adelic::kernels
