#pragma once

#include <optional>
#include <map>
#include <string>
#include <string_view>

#include "adelic/rational.hpp"

namespace adelic {

// Finite sum r_e * q^(e/2) with q a formal positive symbol. Keys are the
// doubled exponents e; zero coefficients are never stored.
class QHalfCoeff {
public:
  QHalfCoeff() = default;
  QHalfCoeff(const Rat& r); // NOLINT: constants promote implicitly
  static QHalfCoeff monomial(const Rat& r, int half_exp);
  static QHalfCoeff q_power(int half_exp) { return monomial(Rat(1), half_exp); }

  const std::map<int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_half_exponents() const;

  QHalfCoeff& operator+=(const QHalfCoeff& o);
  QHalfCoeff& operator-=(const QHalfCoeff& o);
  QHalfCoeff& operator*=(const QHalfCoeff& o);
  friend QHalfCoeff operator+(QHalfCoeff a, const QHalfCoeff& b) { return a += b; }
  friend QHalfCoeff operator-(QHalfCoeff a, const QHalfCoeff& b) { return a -= b; }
  friend QHalfCoeff operator*(QHalfCoeff a, const QHalfCoeff& b) { return a *= b; }
  QHalfCoeff operator-() const;
  friend bool operator==(const QHalfCoeff& a, const QHalfCoeff& b) { return a.terms_ == b.terms_; }

  // Exact value at q = q0 (nullopt when q0 has no rational square root and a
  // half exponent occurs).
  std::optional<Rat> eval_exact(const Rat& q0) const;
  double eval(double q0) const;

private:
  void add_term(int e, const Rat& r);
  std::map<int, Rat> terms_;
};

// Finite sum c_i * X^i with c_i in QHalfCoeff.
class LaurentValue {
public:
  LaurentValue() = default;
  LaurentValue(const Rat& r); // NOLINT
  LaurentValue(const QHalfCoeff& c); // NOLINT
  static LaurentValue monomial(const QHalfCoeff& c, int x_exp);
  static LaurentValue x_power(int x_exp) { return monomial(QHalfCoeff(Rat(1)), x_exp); }

  const std::map<int, QHalfCoeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_half_exponents() const;
  int min_x_exp() const; // requires nonzero
  int max_x_exp() const;
  QHalfCoeff coeff(int x_exp) const;

  LaurentValue& operator+=(const LaurentValue& o);
  LaurentValue& operator-=(const LaurentValue& o);
  LaurentValue& operator*=(const LaurentValue& o);
  friend LaurentValue operator+(LaurentValue a, const LaurentValue& b) { return a += b; }
  friend LaurentValue operator-(LaurentValue a, const LaurentValue& b) { return a -= b; }
  friend LaurentValue operator*(LaurentValue a, const LaurentValue& b) { return a *= b; }
  LaurentValue operator-() const;
  friend bool operator==(const LaurentValue& a, const LaurentValue& b) { return a.terms_ == b.terms_; }

  // Multiplies by X^k.
  LaurentValue shifted(int k) const;

  std::optional<Rat> eval_exact(const Rat& x0, const Rat& q0) const;
  double eval(double x0, double q0) const;

  // Canonical text, e.g. "3/2*q^(1/2)*X^-1 + 1".
  std::string to_string() const;
  static LaurentValue parse(std::string_view text);

private:
  void add_term(int i, const QHalfCoeff& c);
  std::map<int, QHalfCoeff> terms_;
};

enum class Arith { add, mul, neg };
// neg ignores b.
LaurentValue laurent_arith(const LaurentValue& a, const LaurentValue& b, Arith op);

// num/den with den != 0. Canonical form: den's lowest X exponent is 0 and,
// when that lowest coefficient is a single q-monomial, it is scaled to 1.
class RatFuncX {
public:
  RatFuncX(LaurentValue num, LaurentValue den = LaurentValue(Rat(1)));
  const LaurentValue& num() const { return num_; }
  const LaurentValue& den() const { return den_; }

  friend RatFuncX operator+(const RatFuncX& a, const RatFuncX& b);
  friend RatFuncX operator-(const RatFuncX& a, const RatFuncX& b);
  friend RatFuncX operator*(const RatFuncX& a, const RatFuncX& b);
  friend RatFuncX operator/(const RatFuncX& a, const RatFuncX& b);
  // Equality of functions (cross multiplication), not of representations.
  friend bool operator==(const RatFuncX& a, const RatFuncX& b);

  std::string to_string() const;

private:
  void canonicalize();
  LaurentValue num_, den_;
};

// Exact value at X = x0, q = q0. Throws PoleError when the denominator
// vanishes and DomainError when q0^(1/2) is needed but irrational.
Rat ratfunc_eval(const RatFuncX& f, const Rat& x0, const Rat& q0);
// Floating companion for arbitrary q0 > 0.
double ratfunc_eval_float(const RatFuncX& f, double x0, double q0);

// Value group Z^2 with v2 dominant in the lexicographic order.
struct Rank2Val {
  long v1 = 0;
  long v2 = 0;
  friend Rank2Val operator+(Rank2Val a, Rank2Val b) { return {a.v1 + b.v1, a.v2 + b.v2}; }
  friend bool operator==(Rank2Val a, Rank2Val b) { return a.v1 == b.v1 && a.v2 == b.v2; }
  friend bool operator<(Rank2Val a, Rank2Val b) { return a.v2 != b.v2 ? a.v2 < b.v2 : a.v1 < b.v1; }
  friend bool operator<=(Rank2Val a, Rank2Val b) { return !(b < a); }
};

enum class Ordering { lt, eq, gt };
Ordering rank2_compare(Rank2Val a, Rank2Val b);
const char* to_string(Ordering o);

} // namespace adelic
