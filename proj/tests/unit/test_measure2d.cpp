#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "adelic/errors.hpp"
#include "adelic/local2d.hpp"
#include "adelic/measure2d.hpp"
#include "adelic/qsexpr.hpp"

using namespace adelic;

namespace {

// Brute-force Fourier transform on the finite group G = t^-N O / t^M O of
// F_p((t)), with psi(x) = exp(2 pi i c_{d-1}(x) / p) trivial on t^d O and
// Haar mass p^(d/2) p^-M per element (so mu(O) = p^(d/2)). Returns fhat on G
// for f = char(t^j O), as values indexed like the elements.
struct FiniteLaurentGroup {
  long p, N, M;
  long size() const {
    long s = 1;
    for (long k = 0; k < N + M; ++k) s *= p;
    return s;
  }
  // coefficient of t^e (e in [-N, M)) of element number idx
  long coeff(long idx, long e) const {
    for (long k = -N; k < e; ++k) idx /= p;
    return idx % p;
  }
  long valuation(long idx) const {
    for (long e = -N; e < M; ++e)
      if (coeff(idx, e)) return e;
    return M;
  }
  // coefficient of t^e in x*y
  long product_coeff(long x, long y, long e) const {
    long acc = 0;
    for (long a = -N; a < M; ++a) {
      const long b = e - a;
      if (b < -N || b >= M) continue;
      acc += coeff(x, a) * coeff(y, b);
    }
    return acc % p;
  }
};

} // namespace

TEST_CASE("box measures: normalization and scaling") {
  const auto F = Local2DField::eqchar(3, 0);
  CHECK(measure_additive(MeasSet::box(F, 0, 0)) == LaurentValue(Rat(1)));
  for (long i = -3; i <= 3; ++i)
    for (long j = -3; j <= 3; ++j) {
      const auto mu = box_measure(F, i, j);
      CHECK(box_measure(F, i + 1, j) == mu * LaurentValue::x_power(1));
      CHECK(box_measure(F, i, j + 1) == mu * LaurentValue(QHalfCoeff::q_power(-2)));
    }
  const auto G = Local2DField::eqchar(4, 3);
  CHECK(box_measure(G, 0, 0).to_string() == "q^(3/2)");
}

TEST_CASE("unit cosets and the multiplicative measure") {
  const auto F = Local2DField::eqchar(5, 2);
  const auto U = MeasSet::unit_coset(F, 1, 0);
  // (1 - q^-1) q^(d/2) X for the additive measure
  CHECK(measure_additive(U) == LaurentValue::monomial(QHalfCoeff::q_power(2) - QHalfCoeff::q_power(0), 1));
  CHECK(measure_multiplicative(U) == LaurentValue(QHalfCoeff::q_power(2)));
  MeasSet layer = MeasSet::box(F, 0, -2);
  layer.subtract(MeasSet::box(F, 0, 3));
  CHECK(measure_multiplicative(layer) == LaurentValue(QHalfCoeff::monomial(Rat(5), 2)));
  MeasSet whole = MeasSet::box(F, 0, 0);
  CHECK_THROWS_AS(measure_multiplicative(whole), SetAlgebraError);
}

TEST_CASE("finite additivity on random nested partitions") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> step(0, 3), qd(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto F = Local2DField::eqchar(trial % 2 ? 2 : 9, qd(rng));
    // increasing chain of corners in the rank-2 order = shrinking boxes
    std::vector<std::pair<long, long>> corners{{qd(rng), qd(rng)}};
    const int parts = 1 + static_cast<int>(step(rng));
    for (int k = 0; k < parts; ++k) {
      auto [i, j] = corners.back();
      if (step(rng) == 0) corners.push_back({i + 1, j - static_cast<long>(step(rng))});
      else corners.push_back({i, j + 1 + step(rng)});
    }
    LaurentValue sum_parts;
    MeasSet union_set;
    for (std::size_t k = 0; k + 1 < corners.size(); ++k) {
      MeasSet layer = MeasSet::box(F, corners[k].first, corners[k].second);
      layer.subtract(MeasSet::box(F, corners[k + 1].first, corners[k + 1].second));
      sum_parts += measure_additive(layer);
      union_set.add(layer);
    }
    const MeasSet tail = MeasSet::box(F, corners.back().first, corners.back().second);
    sum_parts += measure_additive(tail);
    union_set.add(tail);
    const auto whole = box_measure(F, corners.front().first, corners.front().second);
    CHECK(sum_parts == whole);
    CHECK(measure_additive(union_set) == whole);
    // Adding a part twice breaks disjointness.
    union_set.add(tail);
    CHECK_THROWS_AS(normalize(union_set), SetAlgebraError);
  }
}

TEST_CASE("shifted boxes") {
  const auto F = Local2DField::eqchar(7, 0);
  const auto S = MeasSet::shifted_box(F, 2, 1, "a");
  CHECK(measure_additive(S) == box_measure(F, 2, 1));
  MeasSet T = S;
  T.add(MeasSet::box(F, 0, 0));
  CHECK_THROWS_AS(measure_additive(T), SetAlgebraError);
  SimpleFunction f;
  f.add(LaurentValue(Rat(1)), S);
  CHECK_THROWS_AS(fourier_box(f), UnsupportedError);
  CHECK_THROWS_AS(box_measure(Local2DField::arch_real(), 0, 0), UnsupportedError);
}

TEST_CASE("Fourier transform on boxes is an involution") {
  for (long d : {-1L, 0L, 1L, 2L}) {
    const auto F = Local2DField::eqchar(3, d);
    SimpleFunction f;
    f.add(LaurentValue::parse("2*q - X"), MeasSet::box(F, 1, 0));
    f.add(LaurentValue(make_rat(1, 2)), MeasSet::unit_coset(F, -2, 3));
    const auto twice = fourier_box(fourier_box(f));
    CHECK(box_expansion(twice) == box_expansion(f));
  }
}

TEST_CASE("Fourier transform of boxes matches a brute-force character sum") {
  // Residue-level check: i = 0, q = p prime, X = 1.
  for (long p : {2L, 3L}) {
    for (long d : {-1L, 0L, 1L}) {
      const long N = 2;
      FiniteLaurentGroup G{p, N, N + std::max(d, 0L) + 1};
      const long n = G.size();
      const double mass = std::pow(static_cast<double>(p), 0.5 * static_cast<double>(d) - static_cast<double>(G.M));
      const auto F = Local2DField::eqchar(p, d);
      for (long j = -1; j <= 1; ++j) {
        if (d - j < -N || d - j >= G.M) continue;
        SimpleFunction f;
        f.add(LaurentValue(Rat(1)), MeasSet::box(F, 0, j));
        const auto expansion = box_expansion(fourier_box(f));
        for (long y = 0; y < n; ++y) {
          std::complex<double> acc(0.0, 0.0);
          for (long x = 0; x < n; ++x) {
            if (G.valuation(x) < j) continue;
            const double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(G.product_coeff(x, y, d - 1)) / p;
            acc += std::polar(mass, ang);
          }
          double predicted = 0.0;
          for (const auto& [ij, c] : expansion)
            if (G.valuation(y) >= ij.second) predicted += c.eval(1.0, static_cast<double>(p));
          CHECK(std::abs(acc - predicted) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("simple-function integrals") {
  const auto F = Local2DField::eqchar(2, 0);
  SimpleFunction f;
  f.add(LaurentValue(Rat(3)), MeasSet::box(F, 0, 1));
  f.add(LaurentValue::x_power(-1), MeasSet::unit_coset(F, 1, 0));
  CHECK(integrate_simple(f, MeasureMode::additive) == LaurentValue::parse("3*q^-1 + 1 - q^-1"));
}

TEST_CASE("module values and rank-2 valuations") {
  const auto F = Local2DField::eqchar(9, 0);
  const Element2D e{2, -3, "u"};
  CHECK(rank2_valuation(e) == Rank2Val{-3, 2});
  CHECK(module_value(F, e) == LaurentValue::monomial(QHalfCoeff::q_power(6), 2));
  const Element2D f{-1, 1, "v"};
  CHECK(module_value(F, e * f) == module_value(F, e) * module_value(F, f));
  CHECK_THROWS_AS(module_value(F, Element2D::zero_element()), DomainError);
  CHECK_THROWS_AS(module_value(Local2DField::arch_complex(), e), UnsupportedError);
  CHECK(module_power_symbolic(F, e) == QSExpr::power(9, {Rat(3), Rat(0)}) * QSExpr::x_power({Rat(2), Rat(0)}));
  CHECK_THROWS_AS(Local2DField::eqchar(6, 0), ValidationError);
  CHECK_THROWS_AS(PointData(F, 0), ValidationError);
}
