#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "adelic/numberfield.hpp"

namespace adelic {

using cplx = std::complex<double>;
using ZFunction = std::function<cplx(cplx)>;

// L(s, chi_D) for the Kronecker character of a fundamental discriminant.
cplx dirichlet_L(long D, cplx s);
cplx dedekind_zeta(const NumberFieldDesc& k, cplx s);
// |d_k|^(s/2) Gamma_R(s)^r1 Gamma_C(s)^r2 zeta_k(s); PoleError at s = 0, 1.
cplx dedekind_xi(const NumberFieldDesc& k, cplx s);

// Theta-tail integral over [1, inf) for the rational field:
// eta(s) = sum_n (pi n^2)^(-s/2) Gamma(s/2, pi n^2).
cplx tate_eta(cplx s);
// -1/s - 1/(1 - s)
cplx tate_omega(cplx s);

struct TateDecomposition {
  cplx eta;     // eta(s)
  cplx eta_hat; // eta(1 - s), the dual tail (f is self-dual)
  cplx omega;
  cplx xi;
  double residual; // |eta + eta_hat + omega - xi|
};
TateDecomposition tate_decompose(cplx s);

struct MellinOptions {
  double c = 3.0;
  double step = 0.05;
  double T_start = 10.0;
  double T_max = 200.0;
  double decay = 1e-12; // stop doubling T once |Z(c+iT)| < decay |Z(c)|
};

// f(x) = (1/2 pi i) int_{(c)} Z(s) x^-s ds by the trapezoid rule on [-T, T].
// Z must satisfy Z(conj s) = conj Z(s); samples of Z are computed once and
// reused for every x.
class InverseMellin {
public:
  InverseMellin(ZFunction Z, MellinOptions opt = {});

  double operator()(double x) const;
  std::vector<double> eval(const std::vector<double>& xs) const;
  // |f_h - f_2h| plus a tail bound at each x.
  std::vector<double> error_estimate(const std::vector<double>& xs) const;

  double height() const { return T_; }
  std::size_t nodes() const { return coeffs_.size(); }
  bool truncation_warning() const { return warning_; }
  const MellinOptions& options() const { return opt_; }
  // x^c f(x), computed without forming x^-c.
  std::vector<double> eval_scaled(const std::vector<double>& xs) const;

private:
  std::vector<double> sums(const std::vector<double>& xs, bool coarse, bool scaled) const;
  MellinOptions opt_;
  double T_ = 0.0;
  double tail_ = 0.0;
  bool warning_ = false;
  std::vector<cplx> coeffs_;        // step/(2 pi) * w_k * Z(c + i t_k)
  std::vector<cplx> coarse_coeffs_; // every other node, doubled weights
};

// (1/2 pi i) on a circle of the given radius, trapezoid with `nodes` points.
cplx contour_residue(const ZFunction& F, cplx center, double radius, int nodes = 256);

// h(x) = f(x) - x^-1 f(1/x) and its normalized form x^-1/2 h(x).
class BoundaryFunction {
public:
  BoundaryFunction(ZFunction Z, MellinOptions opt = {});

  double f(double x) const { return f_(x); }
  double h(double x) const;
  std::vector<double> h(const std::vector<double>& xs) const;
  double frak_h(double x) const;
  // The same normalized function from the inverse Mellin transform g of
  // Z(s - 1/2) on the line c + 1/2: g(x) - x^-2 g(1/x).
  double frak_h_shifted(double x) const;
  const InverseMellin& inverse() const { return f_; }

private:
  ZFunction Z_;
  InverseMellin f_;
  InverseMellin shifted_;
};

// Forward transform int_0^inf f(x) x^c dx/x on u = ln x in [u_min, u_max].
double mellin_round_trip(const InverseMellin& f, double u_min = -40.0, double u_max = 4.0, double du = 0.02);

struct MeanPeriodicityReport {
  double antisymmetry_max = 0.0;    // max |h(x) + x^-1 h(1/x)|
  double growth_slope = 0.0;        // least-squares slope of log|h(e^-u)| in u
  double growth_intercept = 0.0;
  std::vector<double> singular_values; // of [h(x_i / x_j)], divided by the largest
  std::string note = "heuristic: singular-value tail indicates span deficiency only";
};
MeanPeriodicityReport meanper_diagnostic(const std::function<std::vector<double>(const std::vector<double>&)>& h,
                                          const std::vector<double>& grid);
std::vector<double> log_grid(double lo, double hi, int points);

} // namespace adelic
