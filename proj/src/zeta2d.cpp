#include "adelic/zeta2d.hpp"

#include <cmath>

#include "adelic/analytic.hpp"
#include "adelic/errors.hpp"
#include "adelic/gammafactor.hpp"

namespace adelic {

namespace {

QSExpr weight(std::int64_t p, long w) { return QSExpr::power(p, LinExp{Rat(-w), Rat(w)}); }

QSExpr p1_fibre(std::int64_t p) { return QSExpr::euler(p, Rat(0), -1) * QSExpr::euler(p, Rat(1), -1); }

} // namespace

QSExpr local_factor_smooth(const PointData& pd) {
  if (pd.field.kind != FieldKind::eqchar) throw UnsupportedError("local factor needs an equal-characteristic point");
  const std::int64_t qx = checked_ipow(pd.field.q, static_cast<int>(pd.deg));
  return QSExpr::euler(qx, Rat(0), -1) * weight(qx, pd.field.d);
}

QSExpr fibre_integral_sq(const FibreDesc& fd, long g) {
  validate_fibre(fd, g);
  return fibre_zeta_symbolic(fd).pow(2) * weight(fd.p, fd.node_weight()) * weight(fd.p, 2 * (2 - 2 * g));
}

QSExpr renormalizer_sq(std::int64_t p) { return p1_fibre(p).pow(2) * weight(p, 4); }

cplx horizontal_factor(const NumberFieldDesc& k, cplx s, const CompletedOptions& opt) {
  const cplx x = horizontal_xi(k, 0.5 * s, opt);
  return x * x;
}

std::vector<FactorRow> factor_table(const SurfaceModel& m, long P_max) {
  std::vector<FactorRow> rows;
  for (const auto& fd : m.fibres) {
    if (fd.p > P_max) break;
    FactorRow r;
    r.p = fd.p;
    r.good = fd.good;
    r.fibre = fibre_integral_sq(fd, m.g);
    r.renorm = renormalizer_sq(fd.p);
    r.renorm_power = m.g - 1;
    r.combined = r.renorm.pow(r.renorm_power) * r.fibre;
    r.fibre_weight = fd.node_weight() + 2 * (2 - 2 * m.g);
    r.renorm_weight = 4 * (m.g - 1);
    const LinExp e = r.combined.power_exponent_of(fd.p);
    // Integer parts of constant exponents are folded into the prefactor, so
    // the s coefficient carries the weight.
    if (!is_integer(e.a)) throw ConventionError("non-integral weight at p = " + std::to_string(fd.p));
    r.net_weight = -e.a.get_num().get_si();
    r.cancellation_ok = r.net_weight == fd.node_weight() && r.fibre_weight + r.renorm_weight == fd.node_weight();
    rows.push_back(std::move(r));
  }
  return rows;
}

cplx xi_p1(const SurfaceModel& m, cplx s, long P_max, XiP1Mode mode) {
  if (mode == XiP1Mode::full) return dedekind_xi(m.base, s) * dedekind_xi(m.base, s - 1.0);
  cplx z = eval_gamma(gamma_p1(m.base.r1, m.base.r2), s);
  z *= std::exp((s - 0.5) * std::log(static_cast<double>(m.base.abs_disc)));
  for (const auto& fd : m.fibres) {
    if (fd.p > P_max) break;
    z *= p1_fibre(fd.p).eval(s);
  }
  return z;
}

cplx assemble_zeta2(const SurfaceModel& m, cplx s, const AssembleOptions& opt) {
  if (s.real() <= 2.0) throw DomainError("two-dimensional zeta integral converges only for Re(s) > 2");
  if (opt.m < 1) throw DomainError("copy count must be positive");
  const long P = opt.P_max > 0 ? opt.P_max : m.p_max;
  if (m.base.tag == DedekindTag::rational)
    for (long p = 2; p <= P; ++p)
      if (is_prime(p) && !m.fibre(p)) throw DomainError("missing fibre data at p = " + std::to_string(p));

  // Products are accumulated in log form per prime to avoid overflow of the
  // high powers used for large m.
  cplx log_total(0.0, 0.0);
  for (const auto& row : factor_table(m, P)) log_total += static_cast<double>(opt.m) * std::log(row.combined.eval(s));
  for (const auto& k : m.horizontals)
    log_total += static_cast<double>(opt.m) * std::log(horizontal_factor(k, s, opt.completed));
  if (m.g != 1) log_total += static_cast<double>(2 * opt.m * (1 - m.g)) * std::log(xi_p1(m, s, P, opt.xi_p1));
  return std::exp(log_total);
}

} // namespace adelic
