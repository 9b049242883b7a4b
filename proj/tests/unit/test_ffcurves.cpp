#include <doctest.h>

#include <cmath>

#include "adelic/errors.hpp"
#include "adelic/ffcurves.hpp"
#include "oracles.hpp"

using namespace adelic;
using cplx = std::complex<double>;

namespace {

const oracle::FiniteField F5(5, {0, 1});           // F_5
const oracle::FiniteField F25(5, {-2, 0, 1});      // F_5[z]/(z^2 - 2)
const oracle::FiniteField F125(5, {1, 1, 0, 1});   // F_5[z]/(z^3 + z + 1)
const std::vector<long> kCubic = {1, 1, 0, 1};     // x^3 + x + 1
const std::vector<long> kQuintic = {1, 1, 0, 0, 0, 1};

} // namespace

TEST_CASE("elliptic curve over F_5 matches brute-force counts over F_5, F_25, F_125") {
  const long n1 = F5.count_odd_hyperelliptic(kCubic);
  CHECK(n1 == 9);
  const auto E = CurveFF::elliptic(5, 5 + 1 - n1);
  CHECK(E.P == std::vector<std::int64_t>{1, 3, 5});
  const auto N = point_counts(E, 3);
  CHECK(N[0] == n1);
  CHECK(N[1] == F25.count_odd_hyperelliptic(kCubic));
  CHECK(N[2] == F125.count_odd_hyperelliptic(kCubic));
}

TEST_CASE("genus-2 numerator from two counts predicts the third") {
  std::vector<BigInt> counts = {F5.count_odd_hyperelliptic(kQuintic), F25.count_odd_hyperelliptic(kQuintic)};
  const auto C = CurveFF::from_point_counts(5, 2, counts);
  CHECK(C.functional_equation_holds());
  CHECK(point_counts(C, 3)[2] == F125.count_odd_hyperelliptic(kQuintic));
}

TEST_CASE("projective line") {
  for (std::int64_t q : {2, 3, 4, 5, 9}) {
    const auto P1 = CurveFF::projective_line(q);
    const auto N = point_counts(P1, 6);
    for (int n = 1; n <= 6; ++n) CHECK(N[n - 1] == ipow(q, n) + 1);
    // closed points of degree n on P^1 = monic irreducibles of degree n, plus infinity in degree 1
    CHECK(closed_point_counts(P1, 2)[1] == (q * q - q) / 2);
  }
  const auto P = CurveFF::projective_line(2);
  CHECK(std::abs(zeta_value(P, cplx(3.0, 0.0)) - 32.0 / 21.0) < 1e-14);
  CHECK(zeta_closed_form(P).certificate);
}

TEST_CASE("Euler product at degree 20 matches the closed form") {
  for (const auto& c : {CurveFF::projective_line(2), CurveFF::projective_line(3), CurveFF::elliptic(5, -3)}) {
    for (double s : {2.0, 3.0}) {
      const cplx z = zeta_value(c, s);
      const cplx e = euler_truncated(c, s, 20);
      // The omitted factors, from closed-point counts in degrees 21..90.
      const auto a = closed_point_counts(c, 90);
      double tail = 0.0;
      for (int n = 21; n <= 90; ++n) tail -= a[n - 1].get_d() * std::log1p(-std::pow(static_cast<double>(c.q), -n * s));
      CHECK(std::abs(std::log(z / e) - tail) < 1e-14);
      if (!(c.q == 2 && s == 2.0)) CHECK(std::abs(e / z - 1.0) < 1e-9);
    }
  }
  // q = 2, s = 2 is the slow case: the degree-21 points alone contribute 99864 * 2^-42.
  const cplx e = euler_truncated(CurveFF::projective_line(2), 2.0, 20);
  CHECK(std::abs(e / zeta_value(CurveFF::projective_line(2), 2.0) - 1.0) > 2e-8);
  CHECK_THROWS_AS(euler_truncated(CurveFF::projective_line(2), cplx(1.0, 0.0), 5), DomainError);
}

TEST_CASE("numerator validation") {
  CHECK_THROWS_AS(CurveFF::make(6, 0, {1}), ValidationError);
  CHECK_THROWS_AS(CurveFF::make(5, 1, {1, 3}), ValidationError);
  CHECK_THROWS_AS(CurveFF::make(5, 1, {2, 3, 5}), ValidationError);
  const auto bad = CurveFF::make(5, 1, {1, 3, 4});
  CHECK_FALSE(bad.functional_equation_holds());
  CHECK_FALSE(zeta_closed_form(bad).certificate);
  CHECK_THROWS_AS(point_counts(bad, 3), ValidationError);
}

TEST_CASE("Riemann-Roch dimensions and the summation identity") {
  const auto P1 = CurveFF::projective_line(3);
  CHECK(rr_dim(P1, {-1, false}) == 0);
  CHECK(rr_dim(P1, {4, false}) == 5);
  const auto E = CurveFF::elliptic(5, -3);
  CHECK(rr_dim(E, {0, true}) == 1);
  CHECK(rr_dim(E, {0, false}) == 0);
  CHECK(rr_dim(E, {3, false}) == 3);
  const auto rep = summation_check(E, {0, false}, 1);
  CHECK(rep.equal);
  CHECK(rep.lhs == LaurentValue::x_power(1));
  CHECK_THROWS_AS(rr_dim(CurveFF::make(5, 2, {1, 0, 0, 0, 25}), {1, false}), UnsupportedError);
}
