#pragma once

#include <complex>

namespace adelic {

using cplx = std::complex<double>;

// log Gamma(z) up to a multiple of 2 pi i (only exp of it is meaningful).
// Throws PoleError within 1e-8 of a nonpositive integer.
cplx log_gamma(cplx z);
cplx gamma_c(cplx z);

// Upper incomplete gamma Gamma(a, x) for complex a and real x > 0.
cplx upper_gamma(cplx a, double x);

// Riemann zeta by Euler-Maclaurin, with the functional equation for Re s < -1.
cplx riemann_zeta(cplx s);
// Hurwitz zeta(s, a) for 0 < a <= 1 and Re s > -1 (s != 1).
cplx hurwitz_zeta(cplx s, double a);

inline constexpr double kPi = 3.14159265358979323846264338327950288;

} // namespace adelic
