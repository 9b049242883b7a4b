#include <doctest.h>

#include <cmath>

#include "adelic/analytic.hpp"
#include "adelic/errors.hpp"
#include "adelic/model_io.hpp"
#include "adelic/special.hpp"
#include "adelic/zeta2d.hpp"

using namespace adelic;

namespace {

const std::string kData = ADELIC_DATA_DIR;

QSExpr w(std::int64_t p, long k) { return QSExpr::power(p, {Rat(-k), Rat(k)}); }

} // namespace

TEST_CASE("smooth local factors") {
  CHECK(local_factor_smooth(PointData(Local2DField::eqchar(2, 0), 1)).eval_exact(Rat(2)) == make_rat(4, 3));
  CHECK(local_factor_smooth(PointData(Local2DField::eqchar(3, -1), 1)).eval_exact(Rat(1)) == make_rat(3, 2));
  CHECK(local_factor_smooth(PointData(Local2DField::eqchar(2, 2), 1)).eval_exact(Rat(1)) == Rat(2));
  // q_x = q^deg
  CHECK(local_factor_smooth(PointData(Local2DField::eqchar(2, 1), 3)) == QSExpr::euler(8, Rat(0), -1) * w(8, 1));
  CHECK_THROWS_AS(local_factor_smooth(PointData(Local2DField::arch_real(), 1)), UnsupportedError);
}

TEST_CASE("renormalizer") {
  CHECK(renormalizer_sq(2).eval_exact(Rat(2)) == make_rat(4, 9));
  const auto r = renormalizer_sq(7);
  CHECK(r / w(7, 4) == (QSExpr::euler(7, Rat(0), -1) * QSExpr::euler(7, Rat(1), -1)).pow(2));
}

TEST_CASE("two-copy fibre factors") {
  const FibreDesc e5{5, {CurveFF::make(5, 1, {1, 3, 5}, CurveFamily::elliptic)}, {}, true};
  const QSExpr Z5 = QSExpr::numerator(5, {1, 3, 5}) * QSExpr::euler(5, Rat(0), -1) * QSExpr::euler(5, Rat(1), -1);
  CHECK(fibre_integral_sq(e5, 1) == Z5.pow(2));

  const FibreDesc g3{3, {CurveFF::make(3, 2, {1, 0, 6, 0, 9})}, {}, true};
  CHECK(fibre_integral_sq(g3, 2) == fibre_zeta_symbolic(g3).pow(2) * w(3, -4));

  const FibreDesc nodal2{2, {CurveFF::projective_line(2)}, {1}, false};
  CHECK(fibre_integral_sq(nodal2, 1) == QSExpr::euler(2, Rat(1), -2) * w(2, 1));
  CHECK_THROWS_AS(fibre_integral_sq(nodal2, 2), ValidationError);

  // every weight vanishes at s = 1
  for (const auto& [fd, g] : {std::pair{e5, 1L}, std::pair{g3, 2L}, std::pair{nodal2, 1L}})
    CHECK((fibre_integral_sq(fd, g) / fibre_zeta_symbolic(fd).pow(2)).eval_exact(Rat(1)) == Rat(1));
}

TEST_CASE("exponent cancellation for good fibres of every genus") {
  for (long g = 0; g <= 5; ++g) {
    std::vector<std::int64_t> P(static_cast<std::size_t>(2 * g + 1), 0);
    P[0] = 1;
    P[static_cast<std::size_t>(2 * g)] = 1;
    for (long k = 0; k < g; ++k) P[static_cast<std::size_t>(2 * g)] *= 7;
    const FibreDesc fd{7, {CurveFF::make(7, static_cast<int>(g), P)}, {}, true};
    const QSExpr combined = renormalizer_sq(7).pow(g - 1) * fibre_integral_sq(fd, g);
    CHECK(combined.power_exponent_of(7) == LinExp{});
    CHECK(combined == fibre_zeta_symbolic(fd).pow(2) * renormalizer_sq(7).pow(g - 1) / w(7, 4 * (g - 1)));
  }
}

TEST_CASE("horizontal factors") {
  const auto Q = NumberFieldDesc::rational();
  CHECK(std::abs(horizontal_factor(Q, cplx(4.0, 0.0)) - kPi * kPi / 36.0) < 1e-14);
  CHECK(horizontal_factor(Q, cplx(4.0, 0.0)).real() == doctest::Approx(0.27416).epsilon(1e-4));
  CHECK_THROWS_AS(horizontal_factor(Q, cplx(2.0, 0.0)), PoleError);
  // Q(i): zeta_K(2) = sum_n a_n n^-2 with a_n = sum_{d | n} chi_-4(d), summed directly.
  const long N = 400000;
  std::vector<double> a(N + 1, 0.0);
  for (long d = 1; d <= N; ++d) {
    const double chi = d % 2 == 0 ? 0.0 : (d % 4 == 1 ? 1.0 : -1.0);
    if (chi == 0.0) continue;
    for (long n = d; n <= N; n += d) a[n] += chi;
  }
  double zk = 0.0;
  for (long n = N; n >= 1; --n) zk += a[n] / (static_cast<double>(n) * n);
  zk += (kPi / 4.0) / static_cast<double>(N); // mean of a_n is pi/4
  const double xi = 4.0 * std::pow(2.0 * kPi, -2.0) * zk;
  CHECK(std::abs(horizontal_factor(NumberFieldDesc::quadratic(-4), cplx(4.0, 0.0)).real() / (xi * xi) - 1.0) < 1e-5);
}

TEST_CASE("assembled integral equals the squared completed zeta") {
  for (const char* name : {"/genus2_synthetic.json", "/elliptic_synthetic.json"}) {
    const auto m = load_model_file(kData + name);
    for (cplx s : {cplx(2.5, 0.0), cplx(3.0, 0.0), cplx(2.2, 0.5)}) {
      const cplx z = completed_Z(m, s);
      CHECK(std::abs(assemble_zeta2(m, s) / (z * z) - 1.0) < 1e-10);
      AssembleOptions two;
      two.m = 2;
      CHECK(std::abs(assemble_zeta2(m, s, two) / std::pow(z, 4) - 1.0) < 1e-10);
    }
    CHECK_THROWS_AS(assemble_zeta2(m, cplx(2.0, 3.0)), DomainError);
  }
}

TEST_CASE("projective line: the renormalizer inverts the fibre factor") {
  const auto m = make_p1_model(60);
  for (const auto& row : factor_table(m, 60)) {
    CHECK(row.renorm_power == -1);
    CHECK(row.combined == QSExpr());
  }
  AssembleOptions full;
  full.xi_p1 = XiP1Mode::full;
  const cplx s(3.0, 0.0);
  const cplx x = dedekind_xi(m.base, s) * dedekind_xi(m.base, s - 1.0);
  CHECK(std::abs(assemble_zeta2(m, s, full) / (x * x) - 1.0) < 1e-12);
  // truncated mode converges to the full one
  const double e60 = std::abs(assemble_zeta2(m, s) / (x * x) - 1.0);
  AssembleOptions wide;
  wide.P_max = 10;
  const double e10 = std::abs(assemble_zeta2(m, s, wide) / (x * x) - 1.0);
  CHECK(e60 < e10);
  CHECK(e60 < 1e-2);
}

TEST_CASE("genus-1 factor rows have no renormalizer") {
  const auto m = load_model_file(kData + "/elliptic_synthetic.json");
  for (const auto& row : factor_table(m, m.p_max)) {
    CHECK(row.renorm_power == 0);
    CHECK(row.combined == row.fibre);
    CHECK(row.cancellation_ok);
    CHECK(row.net_weight == (row.p == 31 ? 1 : 0));
  }
}
