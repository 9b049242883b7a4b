#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adelic/rational.hpp"

namespace adelic {

using cplx = std::complex<double>;

// a*s + b
struct LinExp {
  Rat a{0};
  Rat b{0};
  bool is_zero() const { return a == 0 && b == 0; }
  friend LinExp operator+(const LinExp& x, const LinExp& y) { return {x.a + y.a, x.b + y.b}; }
  friend LinExp operator*(const LinExp& x, const Rat& k) { return {x.a * k, x.b * k}; }
  friend bool operator==(const LinExp& x, const LinExp& y) { return x.a == y.a && x.b == y.b; }
};

// Symbolic function of s: a product
//   c * prod_p p^(a_p s + b_p) * prod (1 - q^(-s + t))^e * prod P(q^-s)^e * X^(a s + b)
// with prime bases p, 0 <= b_p < 1 (integer parts live in c), and all factor
// maps sorted, so two expressions are equal exactly when their normal forms are.
class QSExpr {
public:
  using EulerKey = std::pair<std::int64_t, Rat>;                  // (q, t)
  using NumKey = std::pair<std::int64_t, std::vector<std::int64_t>>; // (q, coefficients of P)

  QSExpr() = default;
  explicit QSExpr(const Rat& c);

  // q^(a s + b) for an integer q >= 1 (factored into primes).
  static QSExpr power(std::int64_t q, const LinExp& e);
  // (1 - q^(-s + t))^e
  static QSExpr euler(std::int64_t q, const Rat& t, int e = 1);
  // P(q^-s)^e with P given by its coefficient list (constant term first).
  static QSExpr numerator(std::int64_t q, std::vector<std::int64_t> coeffs, int e = 1);
  // X^(a s + b)
  static QSExpr x_power(const LinExp& e);

  const Rat& constant() const { return c_; }
  const std::map<std::int64_t, LinExp>& powers() const { return powers_; }
  const std::map<EulerKey, int>& euler_atoms() const { return euler_; }
  const std::map<NumKey, int>& numerator_atoms() const { return num_; }
  const LinExp& x_exponent() const { return xexp_; }

  // Exponent of q in the power part when q's prime support is {p}: returns
  // the LinExp of p divided by log_p(q). Used for weight bookkeeping.
  LinExp power_exponent_of(std::int64_t q) const;

  QSExpr& operator*=(const QSExpr& o);
  friend QSExpr operator*(QSExpr a, const QSExpr& b) { return a *= b; }
  QSExpr inverse() const;
  friend QSExpr operator/(const QSExpr& a, const QSExpr& b) { return a * b.inverse(); }
  QSExpr pow(long k) const;
  friend bool operator==(const QSExpr& a, const QSExpr& b);

  // Same expression with the X monomial removed (X set to 1).
  QSExpr without_x() const;

  // Numeric value; x0 is the value substituted for the formal X.
  cplx eval(cplx s, double x0 = 1.0) const;
  // Exact value at rational s when every exponent becomes an integer;
  // throws PoleError at a zero of a denominator.
  std::optional<Rat> eval_exact(const Rat& s) const;

  std::string to_string() const;

private:
  void add_power(std::int64_t p, const LinExp& e);
  void normalize_power(std::int64_t p);
  Rat c_{1};
  std::map<std::int64_t, LinExp> powers_;
  std::map<EulerKey, int> euler_;
  std::map<NumKey, int> num_;
  LinExp xexp_;
};

std::string to_string(const LinExp& e);

} // namespace adelic
