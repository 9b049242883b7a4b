#include "adelic/qsexpr.hpp"

#include <cmath>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

BigInt floor_rat(const Rat& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

cplx ipow(cplx z, int k) {
  if (k < 0) return 1.0 / ipow(z, -k);
  cplx out(1.0, 0.0);
  while (k) {
    if (k & 1) out *= z;
    z *= z;
    k >>= 1;
  }
  return out;
}

cplx cexp_lin(const LinExp& e, cplx s, double log_base) {
  return std::exp((e.a.get_d() * s + e.b.get_d()) * log_base);
}

std::string rat_times(const Rat& r, const std::string& sym) {
  if (r == 1) return sym;
  if (r == -1) return "-" + sym;
  return to_string(r) + "*" + sym;
}

} // namespace

std::string to_string(const LinExp& e) {
  if (e.a == 0) return to_string(e.b);
  std::string out = rat_times(e.a, "s");
  if (e.b > 0) out += " + " + to_string(e.b);
  if (e.b < 0) out += " - " + to_string(Rat(-e.b));
  return out;
}

QSExpr::QSExpr(const Rat& c) : c_(c) {}

QSExpr QSExpr::power(std::int64_t q, const LinExp& e) {
  if (q < 1) throw DomainError("power base must be a positive integer");
  QSExpr out;
  for (const auto& [p, k] : factor(q)) out.add_power(p, e * Rat(k));
  return out;
}

QSExpr QSExpr::euler(std::int64_t q, const Rat& t, int e) {
  if (q < 2) throw DomainError("Euler factor base must be at least 2");
  QSExpr out;
  if (e != 0) out.euler_[{q, t}] = e;
  return out;
}

QSExpr QSExpr::numerator(std::int64_t q, std::vector<std::int64_t> coeffs, int e) {
  if (q < 2) throw DomainError("numerator base must be at least 2");
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw DomainError("zero numerator polynomial");
  QSExpr out;
  if (coeffs.size() == 1) {
    out.c_ = adelic::pow(Rat(coeffs[0]), e);
    return out;
  }
  if (e != 0) out.num_[{q, std::move(coeffs)}] = e;
  return out;
}

QSExpr QSExpr::x_power(const LinExp& e) {
  QSExpr out;
  out.xexp_ = e;
  return out;
}

void QSExpr::add_power(std::int64_t p, const LinExp& e) {
  auto& slot = powers_[p];
  slot = slot + e;
  normalize_power(p);
}

void QSExpr::normalize_power(std::int64_t p) {
  auto it = powers_.find(p);
  if (it == powers_.end()) return;
  BigInt fl = floor_rat(it->second.b);
  if (fl != 0) {
    c_ *= adelic::pow(Rat(p), fl.get_si());
    it->second.b -= Rat(fl);
  }
  if (it->second.is_zero()) powers_.erase(it);
}

LinExp QSExpr::power_exponent_of(std::int64_t q) const {
  auto pk = prime_power(q);
  if (!pk) throw DomainError("power_exponent_of needs a prime power");
  auto it = powers_.find(pk->first);
  if (it == powers_.end()) return {};
  return it->second * Rat(1, pk->second);
}

QSExpr& QSExpr::operator*=(const QSExpr& o) {
  c_ *= o.c_;
  for (const auto& [p, e] : o.powers_) add_power(p, e);
  for (const auto& [k, e] : o.euler_) {
    int& slot = euler_[k];
    slot += e;
    if (slot == 0) euler_.erase(k);
  }
  for (const auto& [k, e] : o.num_) {
    int& slot = num_[k];
    slot += e;
    if (slot == 0) num_.erase(k);
  }
  xexp_ = xexp_ + o.xexp_;
  return *this;
}

QSExpr QSExpr::inverse() const {
  if (c_ == 0) throw DomainError("inverse of a zero expression");
  QSExpr out(1 / c_);
  for (const auto& [p, e] : powers_) out.add_power(p, e * Rat(-1));
  for (const auto& [k, e] : euler_) out.euler_[k] = -e;
  for (const auto& [k, e] : num_) out.num_[k] = -e;
  out.xexp_ = xexp_ * Rat(-1);
  return out;
}

QSExpr QSExpr::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  QSExpr out;
  for (long i = 0; i < k; ++i) out *= *this;
  return out;
}

bool operator==(const QSExpr& a, const QSExpr& b) {
  return a.c_ == b.c_ && a.powers_ == b.powers_ && a.euler_ == b.euler_ && a.num_ == b.num_ &&
         a.xexp_ == b.xexp_;
}

QSExpr QSExpr::without_x() const {
  QSExpr out = *this;
  out.xexp_ = {};
  return out;
}

cplx QSExpr::eval(cplx s, double x0) const {
  cplx v(c_.get_d(), 0.0);
  for (const auto& [p, e] : powers_) v *= cexp_lin(e, s, std::log(static_cast<double>(p)));
  for (const auto& [key, e] : euler_) {
    const double lq = std::log(static_cast<double>(key.first));
    cplx f = 1.0 - std::exp((-s + key.second.get_d()) * lq);
    if (std::abs(f) < 1e-14 && e < 0) throw PoleError("pole of Euler factor (1 - " + std::to_string(key.first) + "^(-s + " + adelic::to_string(key.second) + "))");
    v *= ipow(f, e);
  }
  for (const auto& [key, e] : num_) {
    const cplx t = std::exp(-s * std::log(static_cast<double>(key.first)));
    cplx pv(0.0, 0.0);
    for (auto it = key.second.rbegin(); it != key.second.rend(); ++it) pv = pv * t + static_cast<double>(*it);
    if (std::abs(pv) < 1e-14 && e < 0) throw PoleError("zero of a numerator factor in a denominator");
    v *= ipow(pv, e);
  }
  if (!xexp_.is_zero()) {
    if (x0 <= 0) throw DomainError("X must be specialized to a positive value");
    v *= cexp_lin(xexp_, s, std::log(x0));
  }
  return v;
}

std::optional<Rat> QSExpr::eval_exact(const Rat& s) const {
  Rat v = c_;
  for (const auto& [p, e] : powers_) {
    Rat x = e.a * s + e.b;
    if (!is_integer(x)) return std::nullopt;
    v *= adelic::pow(Rat(p), x.get_num().get_si());
  }
  for (const auto& [key, e] : euler_) {
    Rat x = key.second - s;
    if (!is_integer(x)) return std::nullopt;
    Rat f = 1 - adelic::pow(Rat(key.first), x.get_num().get_si());
    if (f == 0) {
      if (e < 0) throw PoleError("pole of Euler factor at s = " + adelic::to_string(s));
      return Rat(0);
    }
    v *= adelic::pow(f, e);
  }
  for (const auto& [key, e] : num_) {
    Rat x = -s;
    if (!is_integer(x)) return std::nullopt;
    Rat t = adelic::pow(Rat(key.first), x.get_num().get_si());
    Rat pv(0);
    for (auto it = key.second.rbegin(); it != key.second.rend(); ++it) pv = pv * t + Rat(*it);
    if (pv == 0) {
      if (e < 0) throw PoleError("zero of a numerator factor in a denominator");
      return Rat(0);
    }
    v *= adelic::pow(pv, e);
  }
  return v;
}

std::string QSExpr::to_string() const {
  std::vector<std::string> parts;
  auto with_exp = [](std::string base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
  for (const auto& [p, e] : powers_) parts.push_back(std::to_string(p) + "^(" + adelic::to_string(e) + ")");
  for (const auto& [key, e] : euler_) {
    LinExp ex{Rat(-1), key.second};
    parts.push_back(with_exp("(1 - " + std::to_string(key.first) + "^(" + adelic::to_string(ex) + "))", e));
  }
  for (const auto& [key, e] : num_) {
    std::string coeffs;
    for (std::size_t k = 0; k < key.second.size(); ++k) coeffs += (k ? "," : "") + std::to_string(key.second[k]);
    parts.push_back(with_exp("P[" + coeffs + "](" + std::to_string(key.first) + "^(-s))", e));
  }
  if (!xexp_.is_zero()) parts.push_back("X^(" + adelic::to_string(xexp_) + ")");
  std::string out;
  if (c_ != 1 || parts.empty()) out = adelic::to_string(c_);
  for (const auto& part : parts) {
    if (!out.empty()) out += " * ";
    out += part;
  }
  return out;
}

} // namespace adelic
