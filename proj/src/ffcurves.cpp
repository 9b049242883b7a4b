#include "adelic/ffcurves.hpp"

#include <cmath>

#include "adelic/errors.hpp"

namespace adelic {

using cplx = std::complex<double>;

const char* to_string(CurveFamily f) {
  switch (f) {
  case CurveFamily::projective_line:
    return "projective_line";
  case CurveFamily::elliptic:
    return "elliptic";
  case CurveFamily::generic:
    return "generic";
  }
  return "generic";
}

CurveFamily parse_family(const std::string& s) {
  if (s == "projective_line") return CurveFamily::projective_line;
  if (s == "elliptic") return CurveFamily::elliptic;
  if (s == "generic") return CurveFamily::generic;
  throw ValidationError("unknown curve family '" + s + "'");
}

CurveFF CurveFF::make(std::int64_t q, int g, std::vector<std::int64_t> P, CurveFamily family) {
  if (q < 2 || !prime_power(q)) throw ValidationError("curve field size must be a prime power, got " + std::to_string(q));
  if (g < 0) throw ValidationError("genus must be nonnegative");
  while (P.size() > 1 && P.back() == 0) P.pop_back();
  if (static_cast<int>(P.size()) != 2 * g + 1)
    throw ValidationError("zeta numerator must have degree 2g = " + std::to_string(2 * g) + ", got " + std::to_string(P.size() - 1));
  if (P[0] != 1) throw ValidationError("zeta numerator must satisfy P(0) = 1");
  if (family == CurveFamily::projective_line && g != 0) throw ValidationError("projective line must have genus 0");
  if (family == CurveFamily::elliptic && g != 1) throw ValidationError("elliptic curve must have genus 1");
  return CurveFF{q, g, std::move(P), family};
}

CurveFF CurveFF::projective_line(std::int64_t q) { return make(q, 0, {1}, CurveFamily::projective_line); }

CurveFF CurveFF::elliptic(std::int64_t q, std::int64_t trace) { return make(q, 1, {1, -trace, q}, CurveFamily::elliptic); }

CurveFF CurveFF::from_point_counts(std::int64_t q, int g, const std::vector<BigInt>& counts, CurveFamily family) {
  if (static_cast<int>(counts.size()) < g) throw ValidationError("need N_1..N_g to recover the zeta numerator");
  std::vector<BigInt> p(g + 1), c(2 * g + 1);
  c[0] = 1;
  for (int n = 1; n <= g; ++n) p[n] = ipow(q, n) + 1 - counts[n - 1];
  for (int n = 1; n <= g; ++n) {
    BigInt acc = p[n];
    for (int k = 1; k < n; ++k) acc += c[k] * p[n - k];
    if (acc % n != 0) throw ValidationError("point counts are not those of a curve (non-integral numerator)");
    c[n] = -acc / n;
  }
  for (int k = 0; k < g; ++k) c[2 * g - k] = ipow(q, g - k) * c[k];
  std::vector<std::int64_t> P;
  for (const auto& x : c) {
    if (!x.fits_slong_p()) throw ValidationError("zeta numerator coefficient exceeds 64 bits");
    P.push_back(x.get_si());
  }
  return make(q, g, std::move(P), family);
}

bool CurveFF::functional_equation_holds() const {
  const int n = 2 * g;
  for (int k = 0; k <= n; ++k) {
    BigInt lhs = BigInt(std::to_string(P[n - k])) * ipow(q, k);
    BigInt rhs = BigInt(std::to_string(P[k])) * ipow(q, g);
    if (lhs != rhs) return false;
  }
  return true;
}

cplx CurveFF::eval_P(cplx t) const {
  cplx v(0.0, 0.0);
  for (auto it = P.rbegin(); it != P.rend(); ++it) v = v * t + static_cast<double>(*it);
  return v;
}

std::vector<BigInt> point_counts(const CurveFF& c, int nmax) {
  if (nmax < 1) throw DomainError("nmax must be at least 1");
  if (!c.functional_equation_holds()) throw ValidationError("zeta numerator violates the functional equation");
  std::vector<BigInt> coeff(nmax + 1, 0);
  for (std::size_t k = 0; k < c.P.size() && static_cast<int>(k) <= nmax; ++k) coeff[k] = BigInt(std::to_string(c.P[k]));
  std::vector<BigInt> p(nmax + 1, 0), N(nmax);
  for (int n = 1; n <= nmax; ++n) {
    BigInt acc = -n * coeff[n];
    for (int k = 1; k < n; ++k) acc -= coeff[k] * p[n - k];
    p[n] = acc;
    N[n - 1] = ipow(c.q, n) + 1 - p[n];
  }
  return N;
}

std::vector<BigInt> closed_point_counts(const CurveFF& c, int nmax) {
  auto N = point_counts(c, nmax);
  std::vector<BigInt> a(nmax);
  for (int n = 1; n <= nmax; ++n) {
    BigInt acc = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) acc += moebius(n / d) * N[d - 1];
    if (acc % n != 0 || acc < 0)
      throw ValidationError("invalid curve data: closed point count of degree " + std::to_string(n) + " is " +
                            Rat(acc, n).get_str());
    a[n - 1] = acc / n;
  }
  return a;
}

ZetaClosedForm zeta_closed_form(const CurveFF& c) {
  LaurentValue num;
  for (std::size_t k = 0; k < c.P.size(); ++k)
    num += LaurentValue::monomial(QHalfCoeff(Rat(BigInt(std::to_string(c.P[k])))), static_cast<int>(k));
  LaurentValue one(Rat(1));
  LaurentValue den = (one - LaurentValue::x_power(1)) * (one - LaurentValue::monomial(QHalfCoeff(Rat(c.q)), 1));
  return {RatFuncX(num, den), c.functional_equation_holds()};
}

cplx zeta_value(const CurveFF& c, cplx s) {
  const cplx t = std::exp(-s * std::log(static_cast<double>(c.q)));
  const cplx den = (1.0 - t) * (1.0 - static_cast<double>(c.q) * t);
  if (std::abs(den) < 1e-14) throw PoleError("pole of curve zeta function");
  return c.eval_P(t) / den;
}

namespace {

// log(1 + w) accurate for small |w|.
cplx log1p_c(cplx w) {
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  const double im = std::atan2(w.imag(), 1.0 + w.real());
  return {re, im};
}

} // namespace

cplx euler_truncated(const CurveFF& c, cplx s, int deg_max) {
  if (s.real() <= 1.0) throw DomainError("Euler product needs Re(s) > 1");
  if (deg_max < 1) throw DomainError("deg_max must be at least 1");
  auto a = closed_point_counts(c, deg_max);
  const double lq = std::log(static_cast<double>(c.q));
  cplx log_sum(0.0, 0.0);
  for (int n = 1; n <= deg_max; ++n) {
    const cplx w = -std::exp(-static_cast<double>(n) * s * lq);
    log_sum -= a[n - 1].get_d() * log1p_c(w);
  }
  return std::exp(log_sum);
}

long rr_dim(const CurveFF& c, const DivisorFF& D) {
  switch (c.family) {
  case CurveFamily::projective_line:
    return std::max(D.degree + 1, 0L);
  case CurveFamily::elliptic:
    if (D.degree >= 1) return D.degree;
    if (D.degree == 0) return D.principal ? 1 : 0;
    return 0;
  case CurveFamily::generic:
    break;
  }
  throw UnsupportedError("Riemann-Roch dimensions are implemented for the projective line and elliptic curves only");
}

SummationReport summation_check(const CurveFF& c, const DivisorFF& D, long i) {
  SummationReport r;
  r.deg_K = 2L * c.g - 2;
  // K = 0 on an elliptic curve, so K - D is principal exactly when D is.
  DivisorFF KD{r.deg_K - D.degree, D.principal};
  r.l_D = rr_dim(c, D);
  r.l_KD = rr_dim(c, KD);
  const int xi = static_cast<int>(i);
  r.lhs = LaurentValue::monomial(QHalfCoeff::q_power(static_cast<int>(2 * r.l_D)), xi);
  r.rhs = LaurentValue::monomial(QHalfCoeff::q_power(static_cast<int>(2 * (D.degree + 1 - c.g))), xi) *
          LaurentValue(QHalfCoeff::q_power(static_cast<int>(2 * r.l_KD)));
  r.equal = r.lhs == r.rhs;
  return r;
}

} // namespace adelic
