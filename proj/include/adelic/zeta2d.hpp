#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "adelic/local2d.hpp"
#include "adelic/qsexpr.hpp"
#include "adelic/surface.hpp"

namespace adelic {

// (1 - q_x^-s)^-1 q_x^(d (1 - s)) with q_x = q^deg, the X direction set to 1.
QSExpr local_factor_smooth(const PointData& pd);

// Two-copy fibre factor zeta(S_p,s)^2 p^(n_p (1-s)) p^(2(2-2g)(1-s)).
// Throws ValidationError when the fibre does not have arithmetic genus g.
QSExpr fibre_integral_sq(const FibreDesc& fd, long g);

// Two-copy P^1 fibre factor zeta(P_p,s)^2 p^(4(1-s)).
QSExpr renormalizer_sq(std::int64_t p);

// xi(k, s/2)^2
std::complex<double> horizontal_factor(const NumberFieldDesc& k, std::complex<double> s,
                                       const CompletedOptions& opt = {});

// One prime's contribution to the two-copy integral. Weights are exponents
// of p^(1-s).
struct FactorRow {
  std::int64_t p = 0;
  bool good = true;
  QSExpr fibre;
  QSExpr renorm;
  long renorm_power = 0; // g - 1
  QSExpr combined;       // renorm^(g-1) * fibre
  long fibre_weight = 0; // n_p + 2(2-2g)
  long renorm_weight = 0; // 4(g-1)
  long net_weight = 0;   // read back from `combined`
  bool cancellation_ok = false; // net_weight == n_p, checked on the symbolic product
};

std::vector<FactorRow> factor_table(const SurfaceModel& m, long P_max);

enum class XiP1Mode {
  truncated, // Gamma(P^1) |d|^(s-1/2) prod_{p <= P_max} zeta(P_p, s)
  full,      // xi(k, s) xi(k, s-1)
};

struct AssembleOptions {
  long m = 1;       // number of copy pairs; the integral uses 2m copies
  long P_max = 0;   // 0 means the model's p_max
  XiP1Mode xi_p1 = XiP1Mode::truncated;
  CompletedOptions completed;
};

// prod_p [renorm^(g-1) fibre]^m * prod_i xi(k_i, s/2)^(2m) * xi(P^1, s)^(2m(1-g)).
// Requires Re s > 2.
std::complex<double> assemble_zeta2(const SurfaceModel& m, std::complex<double> s, const AssembleOptions& opt = {});

// xi(P^1(O_k), s) in the requested mode.
std::complex<double> xi_p1(const SurfaceModel& m, std::complex<double> s, long P_max, XiP1Mode mode);

} // namespace adelic
