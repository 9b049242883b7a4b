#pragma once

#include <complex>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "adelic/rational.hpp"

namespace adelic {

// Gamma_R(s) = pi^(-s/2) Gamma(s/2), Gamma_C(s) = (2 pi)^(-s) Gamma(s).
// With these, Gamma_R(s) Gamma_R(s+1) = 2 Gamma_C(s).
enum class GammaKind { R, C };

// c * pi^a * prod (s + k)^e_k * prod Gamma_kind(s + shift)^e
struct GammaProduct {
  Rat c{1};
  Rat pi_pow{0};
  std::map<long, long> linear;
  std::map<std::pair<GammaKind, long>, long> factors;

  static GammaProduct constant(const Rat& c);
  static GammaProduct gamma(GammaKind kind, long shift, long exp = 1);
  static GammaProduct linear_factor(long k, long exp = 1); // (s + k)^exp

  GammaProduct& operator*=(const GammaProduct& o);
  friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }
  GammaProduct inverse() const;
  friend GammaProduct operator/(const GammaProduct& a, const GammaProduct& b) { return a * b.inverse(); }
  GammaProduct pow(long k) const;
  friend bool operator==(const GammaProduct&, const GammaProduct&) = default;

  bool gamma_free() const { return factors.empty(); }
  // Substitutes s -> 2 - s; only for gamma-free products.
  GammaProduct reflected() const;

  std::string to_string() const;
};

// Rewrite rules; each replaces one factor by an equal expression.
enum class GammaRule {
  shift_c, // Gamma_C(s+a) <-> ((s+a-1)/2pi) Gamma_C(s+a-1), moving a toward 0
  shift_r, // Gamma_R(s+a) <-> ((s+a-2)/2pi) Gamma_R(s+a-2), moving a into {0, 1}
  dup,     // Gamma_R(s+1) -> 2 Gamma_C(s) / Gamma_R(s)
};

// Applies `rule` to the factor with the given kind/shift if it is reducible.
// Returns false when the rule does not apply.
bool apply_rule(GammaProduct& g, GammaRule rule, GammaKind kind, long shift);
// Applies the inverse of a reduction step: raises (or lowers) the shift of
// one factor, or splits Gamma_C(s). Used to scramble products in tests.
void expand_step(GammaProduct& g, std::mt19937_64& rng);

// Canonical form over the basis {Gamma_R(s), Gamma_C(s)}.
GammaProduct normal_form(GammaProduct g);
// Same result reached by applying applicable rules in random order.
GammaProduct normal_form_random(GammaProduct g, std::mt19937_64& rng);

// Gamma(k, s) Gamma(k, s-1) / Gamma_C(s)^(g (r1 + 2 r2)), in normal form.
GammaProduct gamma_surface(long g, long r1, long r2);
// Gamma(k, s) Gamma(k, s-1), in normal form.
GammaProduct gamma_p1(long r1, long r2);

struct QFactor {
  Rat c{1};
  Rat pi_pow{0};
  long m = 0; // Q(s) = c pi^pi_pow (s - 1)^m
  GammaProduct as_product() const;
};
// Q = normal_form(Gamma(P^1)^(1-g) / Gamma(S)); throws ConventionError when a
// gamma factor survives.
QFactor compute_Q(long g, long r1, long r2);
int check_Q_symmetry(const QFactor& Q);

std::complex<double> eval_gamma(const GammaProduct& g, std::complex<double> s);

const char* to_string(GammaKind k);

} // namespace adelic
