#include "adelic/kernels.hpp"

namespace adelic::kernels {

void geometric_sums_scalar(const cplx* coeffs, std::size_t n, const cplx* start, const cplx* ratio, cplx* out,
                           std::size_t m) {
  for (std::size_t j = 0; j < m; ++j) {
    const double rr = ratio[j].real(), ri = ratio[j].imag();
    double ar = 0.0, ai = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      const double tr = ar * rr - ai * ri;
      const double ti = ar * ri + ai * rr;
      ar = tr + coeffs[k].real();
      ai = ti + coeffs[k].imag();
    }
    out[j] = start[j] * cplx(ar, ai);
  }
}

} // namespace adelic::kernels
