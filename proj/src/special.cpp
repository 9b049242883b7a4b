#include "adelic/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "adelic/errors.hpp"
#include "adelic/rational.hpp"

namespace adelic {

namespace {

constexpr int kBernoulliTerms = 40;

// B_{2k} / (2k)! for k = 1..kBernoulliTerms, from the exact recurrence.
const std::vector<double>& bernoulli_over_factorial() {
  static const std::vector<double> table = [] {
    const int top = 2 * kBernoulliTerms;
    std::vector<Rat> B(top + 1);
    B[0] = 1;
    for (int m = 1; m <= top; ++m) {
      Rat acc(0);
      BigInt binom = 1; // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        acc += Rat(binom) * B[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      B[m] = -acc / Rat(m + 1);
    }
    std::vector<double> out(kBernoulliTerms + 1, 0.0);
    BigInt fact = 1;
    for (int n = 1; n <= top; ++n) {
      fact *= n;
      if (n % 2 == 0) out[n / 2] = Rat(B[n] / Rat(fact)).get_d();
    }
    return out;
  }();
  return table;
}

void check_gamma_pole(cplx z) {
  if (z.real() <= 0.5) {
    const double n = std::round(z.real());
    if (n <= 0 && std::abs(z - cplx(n, 0.0)) < 1e-8) throw PoleError("Gamma has a pole at " + std::to_string(n));
  }
}

// Stirling series after shifting Re z past 15.
cplx log_gamma_right(cplx z) {
  cplx prod(1.0, 0.0);
  cplx log_shift(0.0, 0.0);
  cplx w = z;
  int steps = 0;
  while (std::abs(w) < 17.0 || w.real() < 10.0) {
    prod *= w;
    w += 1.0;
    if (++steps % 8 == 0) {
      log_shift += std::log(prod);
      prod = 1.0;
    }
  }
  log_shift += std::log(prod);
  const auto& bf = bernoulli_over_factorial();
  cplx series(0.0, 0.0);
  const cplx inv = 1.0 / w;
  const cplx inv2 = inv * inv;
  cplx p = inv;
  for (int k = 1; k <= 12; ++k) {
    // B_2k / (2k (2k-1) w^(2k-1)) = B_2k/(2k)! * (2k-2)! / w^(2k-1)
    double fact = 1.0;
    for (int j = 2; j <= 2 * k - 2; ++j) fact *= j;
    series += bf[k] * fact * p;
    p *= inv2;
  }
  const double half_log_2pi = 0.91893853320467274178032973640562;
  return (w - 0.5) * std::log(w) - w + half_log_2pi + series - log_shift;
}

} // namespace

cplx log_gamma(cplx z) {
  check_gamma_pole(z);
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi / std::sin(kPi * z)) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

cplx gamma_c(cplx z) { return std::exp(log_gamma(z)); }

cplx upper_gamma(cplx a, double x) {
  if (!(x > 0)) throw DomainError("upper incomplete gamma needs x > 0");
  const double tiny = 1e-300;
  if (x < std::max(1.0, a.real() + 1.0) && std::abs(a) < 30.0) {
    // Gamma(a) - gamma(a, x) with the lower series.
    cplx term = 1.0 / a;
    cplx sum = term;
    for (int n = 1; n < 1000; ++n) {
      term *= x / (a + static_cast<double>(n));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return gamma_c(a) - std::exp(a * std::log(x) - x) * sum;
  }
  // Modified Lentz on the Legendre continued fraction.
  cplx b = x + 1.0 - a;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / (std::abs(b) < tiny ? cplx(tiny) : b);
  cplx h = d;
  for (int i = 1; i < 20000; ++i) {
    const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cplx delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(a * std::log(x) - x) * h;
}

cplx hurwitz_zeta(cplx s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("Hurwitz zeta parameter must lie in (0, 1]");
  if (std::abs(s - 1.0) < 1e-8) throw PoleError("zeta has a pole at s = 1");
  const int N = 25 + static_cast<int>(std::abs(s));
  cplx sum(0.0, 0.0);
  for (int n = 0; n < N; ++n) sum += std::exp(-s * std::log(n + a));
  const double Na = N + a;
  const cplx logNa(std::log(Na), 0.0);
  const cplx head = std::exp(-s * logNa);
  sum += Na * head / (s - 1.0) + 0.5 * head;
  const auto& bf = bernoulli_over_factorial();
  cplx rising = s;        // s (s+1) ... (s+2k-2)
  cplx power = head / Na; // Na^(-s-2k+1)
  const double inv2 = 1.0 / (Na * Na);
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    const cplx term = bf[k] * rising * power;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    power *= inv2;
  }
  return sum;
}

cplx riemann_zeta(cplx s) {
  if (s.real() < -1.0) {
    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const cplx one_minus = 1.0 - s;
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(one_minus)) * std::sin(kPi * s / 2.0) *
           hurwitz_zeta(one_minus, 1.0);
  }
  return hurwitz_zeta(s, 1.0);
}

} // namespace adelic
