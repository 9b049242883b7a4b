#include "adelic/surface.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "adelic/analytic.hpp"
#include "adelic/errors.hpp"
#include "adelic/gammafactor.hpp"
#include "adelic/special.hpp"

namespace adelic {

using cplx = std::complex<double>;

const char* to_string(ZetaSource z) { return z == ZetaSource::euler ? "euler" : "p1_closed_form"; }

ZetaSource parse_zeta_source(const std::string& s) {
  if (s == "euler") return ZetaSource::euler;
  if (s == "p1_closed_form") return ZetaSource::p1_closed_form;
  throw ValidationError("unknown zeta_source '" + s + "'");
}

long FibreDesc::node_weight() const {
  long n = 0;
  for (long d : nodes) n += d;
  return n;
}

namespace {

// k with q = p^k, or 0 when q is not a power of p.
int degree_over(std::int64_t q, std::int64_t p) {
  auto qp = prime_power(q);
  auto pp = prime_power(p);
  if (!qp || !pp || qp->first != pp->first || qp->second % pp->second != 0) return 0;
  return qp->second / pp->second;
}

} // namespace

void validate_fibre(const FibreDesc& fd, long g) {
  const std::string where = "fibre over p = " + std::to_string(fd.p) + ": ";
  if (fd.p < 2 || !prime_power(fd.p)) throw ValidationError(where + "p must be a prime power");
  if (fd.components.empty()) throw ValidationError(where + "no components");
  long genus_sum = 0;
  for (const auto& c : fd.components) {
    if (degree_over(c.q, fd.p) == 0)
      throw ValidationError(where + "component field size " + std::to_string(c.q) + " is not a power of p");
    if (!c.functional_equation_holds()) throw ValidationError(where + "component numerator fails the functional equation");
    genus_sum += c.g;
  }
  for (long d : fd.nodes)
    if (d < 1) throw ValidationError(where + "node degree must be at least 1");
  if (fd.good) {
    if (fd.components.size() != 1 || !fd.nodes.empty())
      throw ValidationError(where + "good fibre must have one component and no nodes");
    if (fd.components[0].g != g)
      throw ValidationError(where + "good fibre has genus " + std::to_string(fd.components[0].g) + ", expected " +
                            std::to_string(g));
    return;
  }
  const long arithmetic = genus_sum + fd.node_weight() - static_cast<long>(fd.components.size()) + 1;
  if (arithmetic != g)
    throw ValidationError(where + "arithmetic genus " + std::to_string(arithmetic) + " does not match g = " +
                          std::to_string(g));
}

void SurfaceModel::validate() {
  if (g < 0) throw ValidationError("genus must be nonnegative");
  base.validate();
  for (const auto& k : horizontals) k.validate();
  if (p_max < 1) throw ValidationError("p_max must be at least 1");
  std::sort(fibres.begin(), fibres.end(), [](const FibreDesc& a, const FibreDesc& b) { return a.p < b.p; });
  for (std::size_t i = 1; i < fibres.size(); ++i)
    if (fibres[i].p == fibres[i - 1].p) throw ValidationError("duplicate fibre over p = " + std::to_string(fibres[i].p));
  for (const auto& fd : fibres) {
    validate_fibre(fd, g);
    if (base.tag == DedekindTag::rational && !is_prime(fd.p))
      throw ValidationError("fibre over " + std::to_string(fd.p) + ": base Q has prime residue fields only");
  }
  if (zeta_source == ZetaSource::p1_closed_form) {
    if (g != 0) throw ValidationError("p1_closed_form requires genus 0");
    for (const auto& fd : fibres)
      if (!fd.good || fd.components[0].q != fd.p)
        throw ValidationError("p1_closed_form requires every fibre to be P^1 over its residue field");
  }
}

const FibreDesc* SurfaceModel::fibre(std::int64_t p) const {
  auto it = std::lower_bound(fibres.begin(), fibres.end(), p, [](const FibreDesc& f, std::int64_t v) { return f.p < v; });
  return it != fibres.end() && it->p == p ? &*it : nullptr;
}

SurfaceModel make_p1_model(long p_max) {
  SurfaceModel m;
  m.g = 0;
  m.base = NumberFieldDesc::rational();
  m.p_max = p_max;
  m.zeta_source = ZetaSource::p1_closed_form;
  for (long p = 2; p <= p_max; ++p)
    if (is_prime(p)) m.fibres.push_back(FibreDesc{p, {CurveFF::projective_line(p)}, {}, true});
  m.validate();
  return m;
}

BigInt conductor(const SurfaceModel& m) {
  BigInt A = 1;
  for (const auto& fd : m.fibres) A *= ipow(fd.p, static_cast<unsigned>(fd.node_weight()));
  return A;
}

QSExpr fibre_zeta_symbolic(const FibreDesc& fd) {
  QSExpr z;
  for (const auto& c : fd.components)
    z *= QSExpr::numerator(c.q, c.P) * QSExpr::euler(c.q, Rat(0), -1) * QSExpr::euler(c.q, Rat(1), -1);
  for (long d : fd.nodes) z *= QSExpr::euler(checked_ipow(fd.p, static_cast<int>(d)), Rat(0), 1);
  return z;
}

std::vector<BigInt> fibre_point_counts(const FibreDesc& fd, int nmax) {
  std::vector<BigInt> N(static_cast<std::size_t>(nmax), 0);
  for (const auto& c : fd.components) {
    const int k = degree_over(c.q, fd.p);
    if (nmax / k < 1) continue;
    auto Nc = point_counts(c, nmax / k);
    for (int n = k; n <= nmax; n += k) N[static_cast<std::size_t>(n - 1)] += k * Nc[static_cast<std::size_t>(n / k - 1)];
  }
  for (long d : fd.nodes)
    for (long n = d; n <= nmax; n += d) N[static_cast<std::size_t>(n - 1)] -= d;
  return N;
}

std::vector<BigInt> fibre_closed_point_counts(const FibreDesc& fd, int nmax) {
  auto N = fibre_point_counts(fd, nmax);
  std::vector<BigInt> a(static_cast<std::size_t>(nmax));
  for (int n = 1; n <= nmax; ++n) {
    BigInt acc = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) acc += moebius(n / d) * N[static_cast<std::size_t>(d - 1)];
    if (acc % n != 0 || acc < 0)
      throw ValidationError("fibre over p = " + std::to_string(fd.p) + " has an invalid closed point count in degree " +
                            std::to_string(n));
    a[static_cast<std::size_t>(n - 1)] = acc / n;
  }
  return a;
}

cplx fibre_zeta(const FibreDesc& fd, cplx s, int deg_max) {
  if (s.real() <= 1.0) throw DomainError("fibre zeta needs Re(s) > 1");
  if (deg_max <= 0) return fibre_zeta_symbolic(fd).eval(s);
  auto a = fibre_closed_point_counts(fd, deg_max);
  const double lp = std::log(static_cast<double>(fd.p));
  cplx log_sum(0.0, 0.0);
  for (int n = 1; n <= deg_max; ++n) {
    const cplx w = -std::exp(-static_cast<double>(n) * s * lp);
    const cplx l(0.5 * std::log1p(2.0 * w.real() + std::norm(w)), std::atan2(w.imag(), 1.0 + w.real()));
    log_sum -= a[static_cast<std::size_t>(n - 1)].get_d() * l;
  }
  return std::exp(log_sum);
}

TruncatedProduct surface_zeta(const SurfaceModel& m, cplx s, long P_max) {
  if (s.real() <= 2.0) throw DomainError("surface Euler product needs Re(s) > 2");
  if (m.base.tag == DedekindTag::rational) {
    for (long p = 2; p <= P_max; ++p)
      if (is_prime(p) && !m.fibre(p)) throw DomainError("missing fibre data at p = " + std::to_string(p));
  }
  TruncatedProduct out{cplx(1.0, 0.0), 0.0, 0};
  for (const auto& fd : m.fibres) {
    if (fd.p > P_max) break;
    out.value *= fibre_zeta(fd, s);
    ++out.primes_used;
  }
  const double sigma = s.real();
  const double P = std::max<double>(static_cast<double>(P_max), 2.0);
  out.rel_error_estimate = (2.0 * m.g + 2.0) * std::pow(P, 2.0 - sigma) / ((sigma - 2.0) * std::log(P));
  return out;
}

cplx surface_zeta_value(const SurfaceModel& m, cplx s) {
  if (m.zeta_source == ZetaSource::p1_closed_form) return dedekind_zeta(m.base, s) * dedekind_zeta(m.base, s - 1.0);
  return surface_zeta(m, s, m.p_max).value;
}

cplx horizontal_xi(const NumberFieldDesc& k, cplx s, const CompletedOptions& opt) {
  auto it = opt.custom_xi.find(k.label);
  if (it != opt.custom_xi.end()) return it->second(s);
  return dedekind_xi(k, s);
}

cplx completed_Z(const SurfaceModel& m, cplx s, const CompletedOptions& opt) {
  cplx z = surface_zeta_value(m, s);
  const double logA = std::log(conductor(m).get_d());
  z *= std::exp(0.5 * (1.0 - s) * logA);
  z *= eval_gamma(gamma_surface(m.g, m.base.r1, m.base.r2), s);
  if (opt.include_Q) z *= eval_gamma(compute_Q(m.g, m.base.r1, m.base.r2).as_product(), s);
  z *= std::exp(static_cast<double>(1 - m.g) * (s - 0.5) * std::log(static_cast<double>(m.base.abs_disc)));
  for (const auto& k : m.horizontals) z *= horizontal_xi(k, 0.5 * s, opt);
  return z;
}

} // namespace adelic
