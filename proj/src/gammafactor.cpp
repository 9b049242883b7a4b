#include "adelic/gammafactor.hpp"

#include <cmath>
#include <vector>

#include "adelic/errors.hpp"
#include "adelic/special.hpp"

namespace adelic {

const char* to_string(GammaKind k) { return k == GammaKind::R ? "Gamma_R" : "Gamma_C"; }

GammaProduct GammaProduct::constant(const Rat& c) {
  GammaProduct g;
  g.c = c;
  return g;
}

GammaProduct GammaProduct::gamma(GammaKind kind, long shift, long exp) {
  GammaProduct g;
  if (exp != 0) g.factors[{kind, shift}] = exp;
  return g;
}

GammaProduct GammaProduct::linear_factor(long k, long exp) {
  GammaProduct g;
  if (exp != 0) g.linear[k] = exp;
  return g;
}

namespace {

template <class Map, class Key>
void bump(Map& m, const Key& k, long e) {
  if (e == 0) return;
  long& slot = m[k];
  slot += e;
  if (slot == 0) m.erase(k);
}

long take(GammaProduct& g, GammaKind kind, long a) {
  auto it = g.factors.find({kind, a});
  if (it == g.factors.end()) return 0;
  long e = it->second;
  g.factors.erase(it);
  return e;
}

// Gamma_C(s+a) = ((s+a-1)/(2 pi)) Gamma_C(s+a-1)
void move_c_down(GammaProduct& g, long a) {
  long e = take(g, GammaKind::C, a);
  bump(g.linear, a - 1, e);
  g.pi_pow -= e;
  g.c *= pow(Rat(2), -e);
  bump(g.factors, std::make_pair(GammaKind::C, a - 1), e);
}

void move_c_up(GammaProduct& g, long a) {
  long e = take(g, GammaKind::C, a);
  bump(g.linear, a, -e);
  g.pi_pow += e;
  g.c *= pow(Rat(2), e);
  bump(g.factors, std::make_pair(GammaKind::C, a + 1), e);
}

// Gamma_R(s+a) = ((s+a-2)/(2 pi)) Gamma_R(s+a-2)
void move_r_down(GammaProduct& g, long a) {
  long e = take(g, GammaKind::R, a);
  bump(g.linear, a - 2, e);
  g.pi_pow -= e;
  g.c *= pow(Rat(2), -e);
  bump(g.factors, std::make_pair(GammaKind::R, a - 2), e);
}

void move_r_up(GammaProduct& g, long a) {
  long e = take(g, GammaKind::R, a);
  bump(g.linear, a, -e);
  g.pi_pow += e;
  g.c *= pow(Rat(2), e);
  bump(g.factors, std::make_pair(GammaKind::R, a + 2), e);
}

// Gamma_R(s+b) = 2 Gamma_C(s+b-1) / Gamma_R(s+b-1)
void dup_down(GammaProduct& g, long b) {
  long e = take(g, GammaKind::R, b);
  g.c *= pow(Rat(2), e);
  bump(g.factors, std::make_pair(GammaKind::C, b - 1), e);
  bump(g.factors, std::make_pair(GammaKind::R, b - 1), -e);
}

// Gamma_C(s+a) = Gamma_R(s+a) Gamma_R(s+a+1) / 2
void split_c(GammaProduct& g, long a) {
  long e = take(g, GammaKind::C, a);
  g.c *= pow(Rat(2), -e);
  bump(g.factors, std::make_pair(GammaKind::R, a), e);
  bump(g.factors, std::make_pair(GammaKind::R, a + 1), e);
}

struct Step {
  GammaRule rule;
  GammaKind kind;
  long shift;
};

std::vector<Step> applicable(const GammaProduct& g) {
  std::vector<Step> out;
  for (const auto& [key, e] : g.factors) {
    const auto [kind, a] = key;
    if (kind == GammaKind::C) {
      if (a != 0) out.push_back({GammaRule::shift_c, kind, a});
    } else {
      if (a >= 2 || a < 0) out.push_back({GammaRule::shift_r, kind, a});
      if (a >= 1) out.push_back({GammaRule::dup, kind, a});
    }
  }
  return out;
}

std::string linear_text(long k) {
  if (k == 0) return "s";
  return k > 0 ? "(s + " + std::to_string(k) + ")" : "(s - " + std::to_string(-k) + ")";
}

std::string arg_text(long a) {
  if (a == 0) return "s";
  return a > 0 ? "s + " + std::to_string(a) : "s - " + std::to_string(-a);
}

} // namespace

GammaProduct& GammaProduct::operator*=(const GammaProduct& o) {
  c *= o.c;
  pi_pow += o.pi_pow;
  for (const auto& [k, e] : o.linear) bump(linear, k, e);
  for (const auto& [k, e] : o.factors) bump(factors, k, e);
  return *this;
}

GammaProduct GammaProduct::inverse() const {
  if (c == 0) throw DomainError("inverse of zero gamma product");
  GammaProduct g;
  g.c = 1 / c;
  g.pi_pow = -pi_pow;
  for (const auto& [k, e] : linear) g.linear[k] = -e;
  for (const auto& [k, e] : factors) g.factors[k] = -e;
  return g;
}

GammaProduct GammaProduct::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  GammaProduct g;
  g.c = adelic::pow(c, k);
  g.pi_pow = pi_pow * k;
  if (k == 0) return g;
  for (const auto& [key, e] : linear) g.linear[key] = e * k;
  for (const auto& [key, e] : factors) g.factors[key] = e * k;
  return g;
}

GammaProduct GammaProduct::reflected() const {
  if (!gamma_free()) throw ConventionError("s -> 2 - s substitution is only defined for gamma-free products");
  GammaProduct g;
  g.c = c;
  g.pi_pow = pi_pow;
  // (2 - s + k)^e = (-1)^e (s - 2 - k)^e
  for (const auto& [k, e] : linear) {
    g.linear[-2 - k] = e;
    if (e % 2 != 0) g.c = -g.c;
  }
  return g;
}

std::string GammaProduct::to_string() const {
  std::vector<std::string> parts;
  if (pi_pow != 0) parts.push_back(pi_pow == 1 ? "pi" : "pi^" + adelic::to_string(pi_pow));
  for (const auto& [k, e] : linear) parts.push_back(e == 1 ? linear_text(k) : linear_text(k) + "^" + std::to_string(e));
  for (const auto& [key, e] : factors) {
    std::string f = std::string(adelic::to_string(key.first)) + "(" + arg_text(key.second) + ")";
    parts.push_back(e == 1 ? f : f + "^" + std::to_string(e));
  }
  std::string out;
  if (c != 1 || parts.empty()) out = adelic::to_string(c);
  for (const auto& p : parts) out += (out.empty() ? "" : " * ") + p;
  return out;
}

bool apply_rule(GammaProduct& g, GammaRule rule, GammaKind kind, long shift) {
  if (!g.factors.count({kind, shift})) return false;
  switch (rule) {
  case GammaRule::shift_c:
    if (kind != GammaKind::C || shift == 0) return false;
    shift > 0 ? move_c_down(g, shift) : move_c_up(g, shift);
    return true;
  case GammaRule::shift_r:
    if (kind != GammaKind::R || (shift >= 0 && shift <= 1)) return false;
    shift >= 2 ? move_r_down(g, shift) : move_r_up(g, shift);
    return true;
  case GammaRule::dup:
    if (kind != GammaKind::R || shift < 1) return false;
    dup_down(g, shift);
    return true;
  }
  return false;
}

void expand_step(GammaProduct& g, std::mt19937_64& rng) {
  if (g.factors.empty()) return;
  std::uniform_int_distribution<std::size_t> pick(0, g.factors.size() - 1);
  auto it = g.factors.begin();
  std::advance(it, static_cast<long>(pick(rng)));
  const auto [kind, a] = it->first;
  std::uniform_int_distribution<int> choice(0, 2);
  const int r = choice(rng);
  if (kind == GammaKind::C) {
    if (r == 0) move_c_down(g, a);
    else if (r == 1) move_c_up(g, a);
    else split_c(g, a);
  } else {
    if (r == 0) move_r_down(g, a);
    else move_r_up(g, a);
  }
}

GammaProduct normal_form(GammaProduct g) {
  for (;;) {
    auto steps = applicable(g);
    if (steps.empty()) return g;
    const auto& s = steps.front();
    apply_rule(g, s.rule, s.kind, s.shift);
  }
}

GammaProduct normal_form_random(GammaProduct g, std::mt19937_64& rng) {
  for (;;) {
    auto steps = applicable(g);
    if (steps.empty()) return g;
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    const auto& s = steps[pick(rng)];
    apply_rule(g, s.rule, s.kind, s.shift);
  }
}

GammaProduct gamma_p1(long r1, long r2) {
  using K = GammaKind;
  return normal_form(GammaProduct::gamma(K::R, 0, r1) * GammaProduct::gamma(K::R, -1, r1) *
                     GammaProduct::gamma(K::C, 0, r2) * GammaProduct::gamma(K::C, -1, r2));
}

GammaProduct gamma_surface(long g, long r1, long r2) {
  if (g < 0 || r1 < 0 || r2 < 0) throw DomainError("genus and place counts must be nonnegative");
  return normal_form(gamma_p1(r1, r2) / GammaProduct::gamma(GammaKind::C, 0, g * (r1 + 2 * r2)));
}

GammaProduct QFactor::as_product() const {
  GammaProduct g = GammaProduct::constant(c) * GammaProduct::linear_factor(-1, m);
  g.pi_pow = pi_pow;
  return g;
}

QFactor compute_Q(long g, long r1, long r2) {
  GammaProduct q = normal_form(gamma_p1(r1, r2).pow(1 - g) / gamma_surface(g, r1, r2));
  if (!q.gamma_free()) throw ConventionError("Q(s) is not gamma-free: " + q.to_string());
  for (const auto& [k, e] : q.linear)
    if (k != -1) throw ConventionError("Q(s) has a linear factor other than (s - 1): " + q.to_string());
  QFactor out;
  out.c = q.c;
  out.pi_pow = q.pi_pow;
  out.m = q.linear.count(-1) ? q.linear.at(-1) : 0;
  return out;
}

int check_Q_symmetry(const QFactor& Q) {
  const int sign = Q.m % 2 == 0 ? 1 : -1;
  GammaProduct lhs = Q.as_product().reflected();
  GammaProduct rhs = GammaProduct::constant(Rat(sign)) * Q.as_product();
  if (!(lhs == rhs)) throw ConventionError("Q(2 - s) is not a sign multiple of Q(s)");
  return sign;
}

std::complex<double> eval_gamma(const GammaProduct& g, std::complex<double> s) {
  cplx log_v = std::log(kPi) * g.pi_pow.get_d();
  cplx v(g.c.get_d(), 0.0);
  for (const auto& [k, e] : g.linear) {
    const cplx z = s + static_cast<double>(k);
    if (std::abs(z) < 1e-8 && e < 0) throw PoleError("pole of linear factor at s = " + std::to_string(-k));
    for (long i = 0; i < std::abs(e); ++i) v = e > 0 ? v * z : v / z;
  }
  for (const auto& [key, e] : g.factors) {
    const cplx z = s + static_cast<double>(key.second);
    cplx lg = key.first == GammaKind::R ? -0.5 * z * std::log(kPi) + log_gamma(0.5 * z)
                                        : -z * std::log(2.0 * kPi) + log_gamma(z);
    log_v += static_cast<double>(e) * lg;
  }
  return v * std::exp(log_v);
}

} // namespace adelic
