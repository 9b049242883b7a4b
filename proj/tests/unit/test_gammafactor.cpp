#include <doctest.h>

#include <cmath>
#include <random>

#include "adelic/errors.hpp"
#include "adelic/gammafactor.hpp"
#include "adelic/special.hpp"

using namespace adelic;

namespace {

double gamma_R(double s) { return std::pow(kPi, -s / 2) * std::tgamma(s / 2); }
double gamma_C(double s) { return std::pow(2 * kPi, -s) * std::tgamma(s); }

// Direct product from the raw definitions, for real s.
double direct(const GammaProduct& g, double s) {
  double v = g.c.get_d() * std::pow(kPi, g.pi_pow.get_d());
  for (const auto& [k, e] : g.linear) v *= std::pow(s + static_cast<double>(k), static_cast<double>(e));
  for (const auto& [key, e] : g.factors) {
    const double x = s + static_cast<double>(key.second);
    v *= std::pow(key.first == GammaKind::R ? gamma_R(x) : gamma_C(x), static_cast<double>(e));
  }
  return v;
}

} // namespace

TEST_CASE("duplication identity in the chosen normalization") {
  for (double s : {0.3, 1.7, 4.2})
    CHECK(gamma_R(s) * gamma_R(s + 1) == doctest::Approx(2 * gamma_C(s)).epsilon(1e-13));
  const auto lhs = normal_form(GammaProduct::gamma(GammaKind::R, 0) * GammaProduct::gamma(GammaKind::R, 1));
  CHECK(lhs == GammaProduct::constant(Rat(2)) * GammaProduct::gamma(GammaKind::C, 0));
}

TEST_CASE("normal forms are reached from scrambled products regardless of rule order") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    GammaProduct g = GammaProduct::gamma(GammaKind::R, 0, 1 + trial % 3) * GammaProduct::gamma(GammaKind::C, 0, trial % 4 - 1);
    const GammaProduct ref = normal_form(g);
    for (int k = 0; k < 6; ++k) expand_step(g, rng);
    CHECK(normal_form(g) == ref);
    CHECK(normal_form_random(g, rng) == ref);
    for (double s : {2.3, 3.7}) CHECK(direct(g, s) == doctest::Approx(direct(ref, s)).epsilon(1e-10));
  }
}

TEST_CASE("surface gamma factor and Q for small cases") {
  CHECK(gamma_surface(1, 1, 0).to_string() == "4 * pi * (s - 1)^-1");
  const QFactor Q = compute_Q(2, 1, 0);
  CHECK(Q.m == 2);
  CHECK(Q.c == Rat(1, 16));
  CHECK(Q.pi_pow == Rat(-2));
  CHECK(check_Q_symmetry(Q) == 1);
  CHECK(check_Q_symmetry(compute_Q(1, 1, 0)) == -1);
  // Q Gamma(S) = Gamma(P^1)^(1-g) at real points
  for (long g = 0; g <= 3; ++g)
    for (double s : {2.5, 3.25}) {
      const double lhs = direct(compute_Q(g, 1, 1).as_product(), s) * direct(gamma_surface(g, 1, 1), s);
      const double rhs = std::pow(direct(gamma_p1(1, 1), s), static_cast<double>(1 - g));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  CHECK_THROWS_AS(GammaProduct::gamma(GammaKind::C, 0).reflected(), ConventionError);
  CHECK_THROWS_AS(eval_gamma(GammaProduct::linear_factor(-1, -1), cplx(1.0, 0.0)), PoleError);
}

TEST_CASE("eval_gamma agrees with the raw definitions") {
  const GammaProduct g = GammaProduct::gamma(GammaKind::R, 3, 2) * GammaProduct::gamma(GammaKind::C, -1, -1) *
                         GammaProduct::linear_factor(2, 1) * GammaProduct::constant(Rat(3, 5));
  for (double s : {2.2, 3.9, 5.5}) CHECK(eval_gamma(g, s).real() == doctest::Approx(direct(g, s)).epsilon(1e-12));
}
