#include "adelic/analytic.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "adelic/errors.hpp"
#include "adelic/kernels.hpp"
#include "adelic/parallel.hpp"
#include "adelic/special.hpp"

namespace adelic {

namespace {

bool near(cplx a, cplx b) { return std::abs(a - b) < 1e-8; }

// Distance from z to the nearest nonpositive integer (infinity when Re z > 0.5).
double gamma_pole_distance(cplx z) {
  const double n = std::round(z.real());
  if (n > 0) return INFINITY;
  return std::abs(z - cplx(n, 0.0));
}

// L via Hurwitz sums: |D|^-s sum_a chi(a) zeta(s, a/|D|).
cplx dirichlet_L_hurwitz(long D, cplx s) {
  const long k = std::labs(D);
  cplx sum(0.0, 0.0);
  for (long a = 1; a <= k; ++a) {
    const int chi = kronecker(D, a);
    if (chi != 0) sum += static_cast<double>(chi) * hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(k));
  }
  return std::exp(-s * std::log(static_cast<double>(k))) * sum;
}

} // namespace

cplx dirichlet_L(long D, cplx s) {
  if (!is_fundamental_discriminant(D)) throw DomainError("L-function needs a fundamental discriminant");
  if (s.real() >= -1.0 && std::abs(s - 1.0) > 0.25) return dirichlet_L_hurwitz(D, s);
  // Lambda(s) = (k/pi)^((s+a)/2) Gamma((s+a)/2) L(s) is invariant under s -> 1-s.
  const double k = static_cast<double>(std::labs(D));
  const double a = D > 0 ? 0.0 : 1.0;
  const cplx z = 0.5 * (s + a);
  if (gamma_pole_distance(z) < 1e-8) return 0.0; // trivial zero
  const cplx zr = 0.5 * (1.0 - s + a);
  const cplx log_ratio = (zr - z) * std::log(k / kPi) + log_gamma(zr) - log_gamma(z);
  return std::exp(log_ratio) * dirichlet_L_hurwitz(D, 1.0 - s);
}

cplx dedekind_zeta(const NumberFieldDesc& k, cplx s) {
  switch (k.tag) {
  case DedekindTag::rational:
    return riemann_zeta(s);
  case DedekindTag::quadratic:
    return riemann_zeta(s) * dirichlet_L(k.D, s);
  case DedekindTag::none:
    break;
  }
  throw UnsupportedError("no builtin Dedekind zeta for field '" + k.label + "'");
}

cplx dedekind_xi(const NumberFieldDesc& k, cplx s) {
  if (near(s, 0.0) || near(s, 1.0)) throw PoleError("completed zeta of " + k.label + " has a pole at s = " + (near(s, 0.0) ? "0" : "1"));
  if (k.tag == DedekindTag::none) throw UnsupportedError("no builtin Dedekind zeta for field '" + k.label + "'");
  // At trivial zeros the gamma factor has a pole; use the functional equation.
  if (s.real() < 0.0 && (gamma_pole_distance(0.5 * s) < 1e-6 || (k.r2 > 0 && gamma_pole_distance(s) < 1e-6)))
    return dedekind_xi(k, 1.0 - s);
  cplx log_g = 0.5 * s * std::log(static_cast<double>(k.abs_disc));
  if (k.r1) log_g += static_cast<double>(k.r1) * (-0.5 * s * std::log(kPi) + log_gamma(0.5 * s));
  if (k.r2) log_g += static_cast<double>(k.r2) * (-s * std::log(2.0 * kPi) + log_gamma(s));
  return std::exp(log_g) * dedekind_zeta(k, s);
}

cplx tate_eta(cplx s) {
  const cplx a = 0.5 * s;
  cplx sum(0.0, 0.0);
  for (int n = 1; n <= 60; ++n) {
    const double x = kPi * n * n;
    const cplx term = std::exp(-a * std::log(x)) * upper_gamma(a, x);
    sum += term;
    if (std::abs(term) < 1e-20 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

cplx tate_omega(cplx s) {
  if (near(s, 0.0) || near(s, 1.0)) throw PoleError("omega has poles at s = 0 and s = 1");
  return -1.0 / s - 1.0 / (1.0 - s);
}

TateDecomposition tate_decompose(cplx s) {
  TateDecomposition d;
  d.omega = tate_omega(s);
  d.eta = tate_eta(s);
  d.eta_hat = tate_eta(1.0 - s);
  d.xi = dedekind_xi(NumberFieldDesc::rational(), s);
  d.residual = std::abs(d.eta + d.eta_hat + d.omega - d.xi);
  return d;
}

// ------------------------------------------------------------ inverse Mellin

InverseMellin::InverseMellin(ZFunction Z, MellinOptions opt) : opt_(opt) {
  if (!(opt_.step > 0) || !(opt_.T_start > 0)) throw DomainError("contour step and height must be positive");
  const double z0 = std::abs(Z(cplx(opt_.c, 0.0)));
  double T = opt_.T_start;
  auto decayed = [&](double t) {
    const double zt = std::abs(Z(cplx(opt_.c, t)));
    return z0 == 0.0 ? zt == 0.0 : zt < opt_.decay * z0;
  };
  while (!decayed(T) && T < opt_.T_max) T *= 2.0;
  if (T > opt_.T_max) T = opt_.T_max;
  warning_ = !decayed(T);
  // Even number of intervals so the coarse rule reuses every other node.
  long K = static_cast<long>(std::ceil(2.0 * T / opt_.step));
  if (K % 2) ++K;
  const double dt = 2.0 * T / static_cast<double>(K);
  T_ = T;
  // Z(c - it) = conj Z(c + it): sample t >= 0 only.
  const long half = K / 2;
  std::vector<cplx> upper(static_cast<std::size_t>(half + 1));
  parallel_for(upper.size(), [&](std::size_t k) { upper[k] = Z(cplx(opt_.c, static_cast<double>(k) * dt)); });
  auto sample = [&](long k) {
    const long m = k - half;
    return m >= 0 ? upper[static_cast<std::size_t>(m)] : std::conj(upper[static_cast<std::size_t>(-m)]);
  };
  const double scale = dt / (2.0 * kPi);
  coeffs_.resize(static_cast<std::size_t>(K + 1));
  for (long k = 0; k <= K; ++k) {
    const double w = (k == 0 || k == K) ? 0.5 : 1.0;
    coeffs_[static_cast<std::size_t>(k)] = scale * w * sample(k);
  }
  coarse_coeffs_.resize(static_cast<std::size_t>(half + 1));
  for (long k = 0; k <= half; ++k) {
    const double w = (k == 0 || k == half) ? 0.5 : 1.0;
    coarse_coeffs_[static_cast<std::size_t>(k)] = 2.0 * scale * w * sample(2 * k);
  }
  tail_ = std::abs(Z(cplx(opt_.c, T_))) / kPi;
}

std::vector<double> InverseMellin::sums(const std::vector<double>& xs, bool coarse, bool scaled) const {
  const auto& a = coarse ? coarse_coeffs_ : coeffs_;
  const std::size_t K = coeffs_.size() - 1;
  const double dt = 2.0 * T_ / static_cast<double>(K);
  const double step = coarse ? 2.0 * dt : dt;
  std::vector<cplx> start(xs.size()), ratio(xs.size()), out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (!(xs[j] > 0)) throw DomainError("inverse Mellin transform needs x > 0");
    const double lx = std::log(xs[j]);
    // x^(-c - i t0) with t0 = -T
    const double mag = scaled ? 1.0 : std::exp(-opt_.c * lx);
    start[j] = std::polar(mag, T_ * lx);
    ratio[j] = std::polar(1.0, -step * lx);
  }
  kernels::geometric_sums(a.data(), a.size(), start.data(), ratio.data(), out.data(), xs.size());
  std::vector<double> res(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) res[j] = out[j].real();
  return res;
}

double InverseMellin::operator()(double x) const { return sums({x}, false, false)[0]; }

std::vector<double> InverseMellin::eval(const std::vector<double>& xs) const { return sums(xs, false, false); }

std::vector<double> InverseMellin::eval_scaled(const std::vector<double>& xs) const { return sums(xs, false, true); }

std::vector<double> InverseMellin::error_estimate(const std::vector<double>& xs) const {
  auto fine = sums(xs, false, false);
  auto coarse = sums(xs, true, false);
  std::vector<double> err(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j)
    err[j] = std::abs(fine[j] - coarse[j]) + tail_ * std::pow(xs[j], -opt_.c);
  return err;
}

cplx contour_residue(const ZFunction& F, cplx center, double radius, int nodes) {
  cplx sum(0.0, 0.0);
  for (int k = 0; k < nodes; ++k) {
    const cplx e = std::polar(radius, 2.0 * kPi * k / nodes);
    sum += F(center + e) * e;
  }
  return sum / static_cast<double>(nodes);
}

BoundaryFunction::BoundaryFunction(ZFunction Z, MellinOptions opt)
    : Z_(Z), f_(Z, opt), shifted_([Z](cplx s) { return Z(s - 0.5); }, [opt] {
        MellinOptions o = opt;
        o.c += 0.5;
        return o;
      }()) {}

double BoundaryFunction::h(double x) const { return h(std::vector<double>{x})[0]; }

std::vector<double> BoundaryFunction::h(const std::vector<double>& xs) const {
  std::vector<double> all(xs);
  for (double x : xs) all.push_back(1.0 / x);
  auto fv = f_.eval(all);
  std::vector<double> out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) out[j] = fv[j] - fv[j + xs.size()] / xs[j];
  return out;
}

double BoundaryFunction::frak_h(double x) const { return h(x) / std::sqrt(x); }

double BoundaryFunction::frak_h_shifted(double x) const {
  auto g = shifted_.eval({x, 1.0 / x});
  return g[0] - g[1] / (x * x);
}

double mellin_round_trip(const InverseMellin& f, double u_min, double u_max, double du) {
  const long n = static_cast<long>(std::llround((u_max - u_min) / du));
  std::vector<double> xs(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) xs[static_cast<std::size_t>(k)] = std::exp(u_min + (u_max - u_min) * k / n);
  auto g = f.eval_scaled(xs);
  const double h = (u_max - u_min) / static_cast<double>(n);
  double sum = 0.0;
  for (long k = 0; k <= n; ++k) sum += ((k == 0 || k == n) ? 0.5 : 1.0) * g[static_cast<std::size_t>(k)];
  return sum * h;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0) || !(hi > lo) || points < 2) throw DomainError("log grid needs 0 < lo < hi and at least two points");
  std::vector<double> g(static_cast<std::size_t>(points));
  const double a = std::log(lo), b = std::log(hi);
  for (int k = 0; k < points; ++k) g[static_cast<std::size_t>(k)] = std::exp(a + (b - a) * k / (points - 1));
  return g;
}

MeanPeriodicityReport meanper_diagnostic(const std::function<std::vector<double>(const std::vector<double>&)>& h,
                                          const std::vector<double>& grid) {
  MeanPeriodicityReport r;
  const std::size_t n = grid.size();
  std::vector<double> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = 1.0 / grid[i];
  const auto hv = h(grid);
  const auto hi = h(inv);
  for (std::size_t i = 0; i < n; ++i) r.antisymmetry_max = std::max(r.antisymmetry_max, std::abs(hv[i] + hi[i] / grid[i]));

  double su = 0, sy = 0, suu = 0, suy = 0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(hv[i]) < 1e-300) continue;
    const double u = -std::log(grid[i]);
    const double y = std::log(std::abs(hv[i]));
    su += u;
    sy += y;
    suu += u * u;
    suy += u * y;
    ++used;
  }
  if (used >= 2) {
    const double m = static_cast<double>(used);
    const double den = m * suu - su * su;
    if (den != 0.0) {
      r.growth_slope = (m * suy - su * sy) / den;
      r.growth_intercept = (sy - r.growth_slope * su) / m;
    }
  }

  std::vector<double> ratios;
  ratios.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ratios.push_back(grid[i] / grid[j]);
  const auto tv = h(ratios);
  Eigen::MatrixXd M(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = tv[i * n + j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) r.singular_values.push_back(top > 0 ? sv(k) / top : 0.0);
  return r;
}

} // namespace adelic
