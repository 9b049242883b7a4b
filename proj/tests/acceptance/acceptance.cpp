// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [N ...]   (default: all criteria)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adelic/analytic.hpp"
#include "adelic/errors.hpp"
#include "adelic/ffcurves.hpp"
#include "adelic/gammafactor.hpp"
#include "adelic/measure2d.hpp"
#include "adelic/model_io.hpp"
#include "adelic/qsexpr.hpp"
#include "adelic/special.hpp"
#include "adelic/surface.hpp"
#include "adelic/zeta2d.hpp"

using namespace adelic;

namespace {

const std::string kData = ADELIC_DATA_DIR;

// Collects failed sub-checks with a short description.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------- 1

Outcome measures() {
  Outcome o;
  const auto F0 = Local2DField::eqchar(5, 0);
  o.require(measure_additive(MeasSet::box(F0, 0, 0)) == LaurentValue(Rat(1)), "mu(O_F) != 1");
  for (long q : {2L, 3L, 4L, 9L})
    for (long d = -2; d <= 2; ++d) {
      const auto F = Local2DField::eqchar(q, d);
      for (long i = -3; i <= 3; ++i)
        for (long j = -3; j <= 3; ++j) {
          const auto mu = measure_additive(MeasSet::box(F, i, j));
          o.require(measure_additive(MeasSet::box(F, i + 1, j)) == mu * LaurentValue::x_power(1), "t2 scaling");
          o.require(measure_additive(MeasSet::box(F, i, j + 1)) == mu * LaurentValue(QHalfCoeff::q_power(-2)), "t1 scaling");
          SimpleFunction f;
          f.add(LaurentValue::parse("1 - 2/3*q^(1/2)*X^2"), MeasSet::box(F, i, j));
          o.require(box_expansion(fourier_box(fourier_box(f))) == box_expansion(f), "Fourier involution");
        }
    }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> small(-3, 3), step(1, 3), coin(0, 3), parts(1, 6);
  int partitions = 0;
  for (; partitions < 200; ++partitions) {
    const auto F = Local2DField::eqchar(partitions % 3 == 0 ? 2 : 7, small(rng));
    std::vector<std::pair<long, long>> chain{{small(rng), small(rng)}};
    for (long k = parts(rng); k > 0; --k) {
      auto [i, j] = chain.back();
      chain.push_back(coin(rng) == 0 ? std::pair{i + 1, j - step(rng)} : std::pair{i, j + step(rng)});
    }
    // Pieces listed in random order; the union must have the outer box's measure.
    std::vector<MeasSet> pieces;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      MeasSet layer = MeasSet::box(F, chain[k].first, chain[k].second);
      layer.subtract(MeasSet::box(F, chain[k + 1].first, chain[k + 1].second));
      pieces.push_back(layer);
    }
    pieces.push_back(MeasSet::box(F, chain.back().first, chain.back().second));
    std::shuffle(pieces.begin(), pieces.end(), rng);
    LaurentValue sum;
    MeasSet all;
    for (const auto& p : pieces) {
      sum += measure_additive(p);
      all.add(p);
    }
    const auto whole = measure_additive(MeasSet::box(F, chain.front().first, chain.front().second));
    o.require(sum == whole && measure_additive(all) == whole, "additivity on partition " + std::to_string(partitions));
  }
  o.summary = std::to_string(partitions) + " random partitions, scaling and involution on 980 boxes";
  return o;
}

// ---------------------------------------------------------------- 2

Outcome finite_field_zeta() {
  Outcome o;
  double worst_other = 0.0, worst_q2s2 = 0.0;
  std::vector<CurveFF> curves = {CurveFF::projective_line(2), CurveFF::projective_line(3), CurveFF::projective_line(5),
                                 CurveFF::elliptic(5, -3)};
  for (const auto& c : curves) {
    o.require(zeta_closed_form(c).certificate, "functional equation certificate, q = " + std::to_string(c.q));
    for (double s : {2.0, 3.0}) {
      const double dev = std::abs(euler_truncated(c, s, 20) / zeta_value(c, s) - 1.0);
      if (c.q == 2 && s == 2.0) worst_q2s2 = dev;
      else worst_other = std::max(worst_other, dev);
      o.require(dev < 1e-9, "Euler product (q = " + std::to_string(c.q) + ", s = " + sci(s) + ") off by " + sci(dev));
    }
    const auto N = point_counts(c, 20);
    const auto a = closed_point_counts(c, 20);
    for (int n = 1; n <= 20; ++n) {
      BigInt acc = 0;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) acc += d * a[d - 1];
      o.require(acc == N[n - 1], "Moebius identity at n = " + std::to_string(n));
    }
  }
  o.summary = "max Euler deviation " + sci(worst_other) + " (q=2,s=2: " + sci(worst_q2s2) +
              ", the omitted degree >= 21 factors alone exceed 1e-9)";
  return o;
}

// ---------------------------------------------------------------- 3

// Coefficients of P(t)/((1-t)(1-qt)): numbers of effective divisors by degree.
std::vector<BigInt> effective_divisor_counts(const CurveFF& c, int nmax) {
  std::vector<BigInt> num(static_cast<std::size_t>(nmax + 1), 0), out(static_cast<std::size_t>(nmax + 1), 0);
  for (std::size_t k = 0; k < c.P.size() && k <= static_cast<std::size_t>(nmax); ++k) num[k] = BigInt(std::to_string(c.P[k]));
  // multiply by 1/(1-t) then 1/(1-qt)
  BigInt run = 0;
  for (int n = 0; n <= nmax; ++n) out[n] = run += num[n];
  for (int n = 1; n <= nmax; ++n) out[n] += c.q * out[n - 1];
  return out;
}

Outcome summation() {
  Outcome o;
  int checks = 0;
  std::vector<CurveFF> curves;
  for (std::int64_t q : {2, 3, 4, 5}) curves.push_back(CurveFF::projective_line(q));
  curves.push_back(CurveFF::elliptic(5, -3));
  curves.push_back(CurveFF::elliptic(3, 1));
  curves.push_back(CurveFF::elliptic(4, -4));
  for (const auto& c : curves) {
    const BigInt h = point_counts(c, 1)[0] - (c.g == 0 ? c.q : 0); // class number; 1 for P^1
    const auto b = effective_divisor_counts(c, 6);
    for (long deg = -6; deg <= 6; ++deg) {
      // independent check of l(D): effective divisors of degree deg counted through all classes
      if (deg >= 0) {
        BigInt total = 0;
        const BigInt classes = c.g == 0 ? BigInt(1) : h;
        for (BigInt k = 0; k < classes; ++k) {
          const bool principal = c.g == 1 && deg == 0 && k == 0;
          total += (ipow(c.q, static_cast<unsigned>(rr_dim(c, {deg, principal}))) - 1) / (c.q - 1);
        }
        o.require(total == b[static_cast<std::size_t>(deg)], "l(D) vs zeta coefficients, deg " + std::to_string(deg));
      }
      for (bool principal : {false, true}) {
        if (principal && (c.g != 1 || deg != 0)) continue;
        for (long i = -2; i <= 2; ++i) {
          const auto rep = summation_check(c, {deg, principal}, i);
          const bool rr = rep.l_D - rep.l_KD == deg + 1 - c.g;
          o.require(rep.equal && rr && rep.lhs.min_x_exp() == i, "summation check q = " + std::to_string(c.q) +
                                                                      " deg " + std::to_string(deg));
          ++checks;
        }
      }
    }
  }
  o.summary = std::to_string(checks) + " summation checks over " + std::to_string(curves.size()) + " curves";
  return o;
}

// ---------------------------------------------------------------- 4

cplx raw_gamma_R(cplx s) { return std::exp(-0.5 * s * std::log(kPi)) * gamma_c(0.5 * s); }
cplx raw_gamma_C(cplx s) { return std::exp(-s * std::log(2.0 * kPi)) * gamma_c(s); }

Outcome gamma_q() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> re(2.1, 6.0), im(-8.0, 8.0);
  int cases = 0;
  double worst = 0.0;
  for (long g = 0; g <= 6; ++g)
    for (long r1 = 0; r1 <= 6; ++r1)
      for (long r2 = 0; r1 + 2 * r2 <= 6; ++r2) {
        if (r1 + r2 == 0) continue;
        ++cases;
        QFactor Q;
        try {
          Q = compute_Q(g, r1, r2);
        } catch (const ConventionError& e) {
          o.require(false, e.what());
          continue;
        }
        const GammaProduct q = Q.as_product();
        o.require(q.gamma_free(), "Q not gamma-free");
        o.require(q.reflected().pow(2) == q.pow(2), "Q(2-s)^2 != Q(s)^2");
        const GammaProduct gs = gamma_surface(g, r1, r2);
        for (int k = 0; k < 20; ++k) {
          const cplx s(re(rng), im(rng));
          // unreduced definition: Gamma(P^1)^(1-g) / Gamma(S) from raw gamma values
          const cplx p1 = std::pow(raw_gamma_R(s) * raw_gamma_R(s - 1.0), static_cast<double>(r1)) *
                          std::pow(raw_gamma_C(s) * raw_gamma_C(s - 1.0), static_cast<double>(r2));
          const cplx surface = p1 / std::pow(raw_gamma_C(s), static_cast<double>(g * (r1 + 2 * r2)));
          const cplx expect = std::pow(p1, static_cast<double>(1 - g)) / surface;
          const double e1 = std::abs(eval_gamma(q, s) / expect - 1.0);
          const double e2 = std::abs(eval_gamma(gs, s) / surface - 1.0);
          worst = std::max({worst, e1, e2});
          o.require(e1 < 1e-10 && e2 < 1e-10, "numeric normal-form check g=" + std::to_string(g));
        }
      }
  o.summary = std::to_string(cases) + " (g, r1, r2) cases, max relative error " + sci(worst);
  return o;
}

// ---------------------------------------------------------------- 5

Outcome theorem_identity() {
  Outcome o;
  const SurfaceModel m = load_model_file(kData + "/genus2_synthetic.json");
  o.require(m.g == 2 && m.horizontals.size() == 1 && m.fibre(11) && !m.fibre(11)->good, "fixture shape");
  double worst = 0.0;
  for (cplx s : {cplx(2.5, 0.0), cplx(3.0, 0.0), cplx(2.2, 0.5)}) {
    const cplx z = completed_Z(m, s);
    const double dev = std::abs(assemble_zeta2(m, s) / (z * z) - 1.0);
    worst = std::max(worst, dev);
    o.require(dev < 1e-4, "assembly vs completed zeta squared at s = " + sci(s.real()));
  }
  int rows = 0;
  for (const auto& row : factor_table(m, m.p_max)) {
    ++rows;
    const FibreDesc& fd = *m.fibre(row.p);
    const QSExpr zeta_sq = fibre_zeta_symbolic(fd).pow(2);
    const QSExpr p1_sq = (QSExpr::euler(row.p, Rat(0), -1) * QSExpr::euler(row.p, Rat(1), -1)).pow(2);
    const QSExpr conductor_weight = QSExpr::power(row.p, {Rat(-fd.node_weight()), Rat(fd.node_weight())});
    o.require(row.combined == zeta_sq * p1_sq.pow(m.g - 1) * conductor_weight,
              "exponent cancellation at p = " + std::to_string(row.p));
    o.require(row.cancellation_ok, "weight bookkeeping at p = " + std::to_string(row.p));
  }
  o.summary = std::to_string(rows) + " primes, max |ratio - 1| = " + sci(worst);
  return o;
}

// ---------------------------------------------------------------- 6

Outcome tate() {
  Outcome o;
  double worst = 0.0;
  for (cplx s : {cplx(2.0, 0.0), cplx(3.0, 0.0), cplx(0.5, 0.0), cplx(0.3, 2.0)}) {
    const auto d = tate_decompose(s);
    worst = std::max(worst, d.residual);
    o.require(d.residual < 1e-9, "Tate identity at s = " + sci(s.real()));
  }
  const auto Q = NumberFieldDesc::rational();
  const double xi2 = std::abs(dedekind_xi(Q, 2.0) - kPi / 6.0);
  o.require(xi2 < 1e-12, "xi(2) = pi/6");
  double refl = 0.0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 10; ++b) {
      const cplx s(-3.0 + 1.6 * a + 0.05, -22.5 + 5.0 * b);
      refl = std::max(refl, std::abs(dedekind_xi(Q, s) - dedekind_xi(Q, 1.0 - s)));
    }
  o.require(refl < 1e-10, "reflection on the 50-point window: " + sci(refl));
  o.summary = "max Tate residual " + sci(worst) + ", |xi(2) - pi/6| = " + sci(xi2) + ", reflection " + sci(refl);
  return o;
}

// ---------------------------------------------------------------- 7

Outcome boundary() {
  Outcome o;
  const SurfaceModel m = load_model_file(kData + "/p1_over_q.json");
  const ZFunction Z = [&m](cplx s) { return completed_Z(m, s); };
  BoundaryFunction B(Z);
  const double zc = Z(cplx(B.inverse().options().c, 0.0)).real();
  const double rt = std::abs(mellin_round_trip(B.inverse()) / zc - 1.0);
  o.require(rt < 1e-5, "Mellin round trip " + sci(rt));
  const auto grid = log_grid(0.125, 8.0, 33);
  std::vector<double> inv;
  for (double x : grid) inv.push_back(1.0 / x);
  const auto h = B.h(grid), hi = B.h(inv);
  double anti = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) anti = std::max(anti, std::abs(h[k] + hi[k] / grid[k]));
  o.require(anti < 1e-6, "antisymmetry " + sci(anti));
  bool composition = true;
  for (double x : grid) composition = composition && B.frak_h(x) == B.h(x) / std::sqrt(x);
  o.require(composition, "frak_h != x^-1/2 h");
  double fe = 0.0;
  for (cplx s : {cplx(1.3, 0.0), cplx(1.7, 1.0), cplx(2.4, 0.0)}) fe = std::max(fe, std::abs(Z(s) - Z(2.0 - s)));
  o.require(fe < 1e-8, "functional-equation probe " + sci(fe));
  o.require(!B.inverse().truncation_warning(), "contour truncation warning");
  o.summary = "round trip " + sci(rt) + ", antisymmetry " + sci(anti) + ", FE probe " + sci(fe);
  return o;
}

// ---------------------------------------------------------------- 8

Outcome elliptic_reduction() {
  Outcome o;
  const SurfaceModel m = load_model_file(kData + "/elliptic_synthetic.json");
  o.require(m.g == 1, "fixture genus");
  int rows = 0;
  for (const auto& row : factor_table(m, m.p_max)) {
    ++rows;
    o.require(row.renorm_power == 0, "renormalizer power");
    const FibreDesc& fd = *m.fibre(row.p);
    // Hand-assembled elliptic-case factor: Z(p^-s)^2 times the conductor weight.
    QSExpr expect = QSExpr::euler(row.p, Rat(0), -2) * QSExpr::euler(row.p, Rat(1), -2);
    if (fd.good) {
      expect *= QSExpr::numerator(row.p, fd.components[0].P, 2);
    } else {
      expect *= QSExpr::euler(row.p, Rat(0), 2) * QSExpr::power(row.p, {Rat(-1), Rat(1)});
    }
    o.require(row.combined == expect, "factor row at p = " + std::to_string(row.p) + ": " + row.combined.to_string());
    o.require(row.net_weight == (fd.good ? 0 : 1), "net weight at p = " + std::to_string(row.p));
  }
  // With g = 1 the assembled product has no P^1 completion factor.
  const cplx s(3.0, 0.0);
  cplx hand(1.0, 0.0);
  for (const auto& row : factor_table(m, m.p_max)) hand *= row.combined.eval(s);
  for (const auto& k : m.horizontals) hand *= horizontal_factor(k, s);
  o.require(std::abs(assemble_zeta2(m, s) / hand - 1.0) < 1e-12, "assembled value vs hand product");
  o.summary = std::to_string(rows) + " factor rows equal the hand-built elliptic factors";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "measure suite", 1.0, measures},
      {2, "finite-field zeta", 1.0, finite_field_zeta},
      {3, "summation / Riemann-Roch", 1.0, summation},
      {4, "gamma and Q factors", 5.0, gamma_q},
      {5, "assembled integral vs completed zeta", 30.0, theorem_identity},
      {6, "Tate decomposition", 5.0, tate},
      {7, "boundary functions", 60.0, boundary},
      {8, "elliptic reduction", 1.0, elliptic_reduction},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) out.failures.push_back("took " + sci(secs) + " s, budget " + sci(c.budget_s) + " s");
    const bool ok = out.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s (%.2fs) %s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs, out.summary.c_str());
    for (std::size_t k = 0; k < out.failures.size() && k < 5; ++k) std::printf("    - %s\n", out.failures[k].c_str());
    if (out.failures.size() > 5) std::printf("    - ... %zu more\n", out.failures.size() - 5);
  }
  return failed == 0 ? 0 : 1;
}
