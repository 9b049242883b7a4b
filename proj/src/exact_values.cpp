#include "adelic/exact_values.hpp"

#include <cctype>
#include <cmath>

#include "adelic/errors.hpp"

namespace adelic {

// ---------------------------------------------------------------- QHalfCoeff

QHalfCoeff::QHalfCoeff(const Rat& r) {
  if (r != 0) terms_.emplace(0, r);
}

QHalfCoeff QHalfCoeff::monomial(const Rat& r, int half_exp) {
  QHalfCoeff c;
  c.add_term(half_exp, r);
  return c;
}

bool QHalfCoeff::has_half_exponents() const {
  for (const auto& [e, r] : terms_)
    if (e % 2 != 0) return true;
  return false;
}

void QHalfCoeff::add_term(int e, const Rat& r) {
  if (r == 0) return;
  auto [it, inserted] = terms_.emplace(e, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

QHalfCoeff& QHalfCoeff::operator+=(const QHalfCoeff& o) {
  for (const auto& [e, r] : o.terms_) add_term(e, r);
  return *this;
}

QHalfCoeff& QHalfCoeff::operator-=(const QHalfCoeff& o) {
  for (const auto& [e, r] : o.terms_) add_term(e, -r);
  return *this;
}

QHalfCoeff& QHalfCoeff::operator*=(const QHalfCoeff& o) {
  QHalfCoeff out;
  for (const auto& [e1, r1] : terms_)
    for (const auto& [e2, r2] : o.terms_) out.add_term(e1 + e2, r1 * r2);
  terms_ = std::move(out.terms_);
  return *this;
}

QHalfCoeff QHalfCoeff::operator-() const {
  QHalfCoeff out;
  for (const auto& [e, r] : terms_) out.terms_.emplace(e, -r);
  return out;
}

std::optional<Rat> QHalfCoeff::eval_exact(const Rat& q0) const {
  if (q0 <= 0) throw DomainError("q must be positive");
  std::optional<Rat> root;
  if (has_half_exponents()) {
    root = exact_sqrt(q0);
    if (!root) return std::nullopt;
  }
  Rat sum(0);
  for (const auto& [e, r] : terms_) {
    if (e % 2 == 0)
      sum += r * pow(q0, e / 2);
    else
      sum += r * pow(*root, e);
  }
  return sum;
}

double QHalfCoeff::eval(double q0) const {
  double sum = 0.0;
  for (const auto& [e, r] : terms_) sum += r.get_d() * std::pow(q0, 0.5 * e);
  return sum;
}

// -------------------------------------------------------------- LaurentValue

LaurentValue::LaurentValue(const Rat& r) : LaurentValue(QHalfCoeff(r)) {}

LaurentValue::LaurentValue(const QHalfCoeff& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentValue LaurentValue::monomial(const QHalfCoeff& c, int x_exp) {
  LaurentValue v;
  v.add_term(x_exp, c);
  return v;
}

bool LaurentValue::has_half_exponents() const {
  for (const auto& [i, c] : terms_)
    if (c.has_half_exponents()) return true;
  return false;
}

int LaurentValue::min_x_exp() const {
  if (terms_.empty()) throw DomainError("min exponent of zero Laurent value");
  return terms_.begin()->first;
}

int LaurentValue::max_x_exp() const {
  if (terms_.empty()) throw DomainError("max exponent of zero Laurent value");
  return terms_.rbegin()->first;
}

QHalfCoeff LaurentValue::coeff(int x_exp) const {
  auto it = terms_.find(x_exp);
  return it == terms_.end() ? QHalfCoeff() : it->second;
}

void LaurentValue::add_term(int i, const QHalfCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentValue& LaurentValue::operator+=(const LaurentValue& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

LaurentValue& LaurentValue::operator-=(const LaurentValue& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

LaurentValue& LaurentValue::operator*=(const LaurentValue& o) {
  LaurentValue out;
  for (const auto& [i1, c1] : terms_)
    for (const auto& [i2, c2] : o.terms_) out.add_term(i1 + i2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentValue LaurentValue::operator-() const {
  LaurentValue out;
  for (const auto& [i, c] : terms_) out.terms_.emplace(i, -c);
  return out;
}

LaurentValue LaurentValue::shifted(int k) const {
  LaurentValue out;
  for (const auto& [i, c] : terms_) out.terms_.emplace(i + k, c);
  return out;
}

std::optional<Rat> LaurentValue::eval_exact(const Rat& x0, const Rat& q0) const {
  Rat sum(0);
  for (const auto& [i, c] : terms_) {
    auto v = c.eval_exact(q0);
    if (!v) return std::nullopt;
    if (i < 0 && x0 == 0) throw PoleError("negative X power at X = 0");
    sum += *v * pow(x0, i);
  }
  return sum;
}

double LaurentValue::eval(double x0, double q0) const {
  double sum = 0.0;
  for (const auto& [i, c] : terms_) sum += c.eval(q0) * std::pow(x0, i);
  return sum;
}

namespace {

std::string q_factor(int e) {
  if (e % 2 == 0) {
    int k = e / 2;
    return k == 1 ? "q" : "q^" + std::to_string(k);
  }
  return "q^(" + std::to_string(e) + "/2)";
}

std::string x_factor(int i) { return i == 1 ? "X" : "X^" + std::to_string(i); }

} // namespace

std::string LaurentValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    for (const auto& [e, r] : c.terms()) {
      const bool negative = r < 0;
      const Rat mag = abs(r);
      std::string body;
      auto append = [&body](const std::string& f) {
        if (!body.empty()) body += '*';
        body += f;
      };
      const bool has_factors = e != 0 || i != 0;
      if (mag != 1 || !has_factors) append(adelic::to_string(mag));
      if (e != 0) append(q_factor(e));
      if (i != 0) append(x_factor(i));
      if (first)
        out += negative ? "-" + body : body;
      else
        out += (negative ? " - " : " + ") + body;
      first = false;
    }
  }
  return out;
}

namespace {

class TermParser {
public:
  explicit TermParser(std::string_view s) : s_(s) {}

  LaurentValue parse() {
    LaurentValue total;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    total += term(negative);
    for (;;) {
      skip();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      total += term(c == '-');
    }
    return total;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("cannot parse Laurent value at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  long integer(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Rat rational() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == d) fail("expected denominator");
    }
    return parse_rat(s_.substr(start, pos_ - start));
  }

  int q_exponent() {
    if (peek() != '^') return 2;
    ++pos_;
    if (peek() == '(') {
      ++pos_;
      long n = integer(true);
      long den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer(false);
      }
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (den == 1) return static_cast<int>(2 * n);
      if (den == 2) return static_cast<int>(n);
      fail("q exponents must be half-integers");
    }
    return static_cast<int>(2 * integer(true));
  }

  int x_exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    if (peek() == '(') {
      ++pos_;
      long n = integer(true);
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return static_cast<int>(n);
    }
    return static_cast<int>(integer(true));
  }

  LaurentValue term(bool negative) {
    Rat coeff(negative ? -1 : 1);
    int qe = 0;
    int xe = 0;
    bool any = false;
    for (;;) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= rational();
      } else if (c == 'q') {
        ++pos_;
        qe += q_exponent();
      } else if (c == 'X') {
        ++pos_;
        xe += x_exponent();
      } else {
        fail("expected a coefficient, q or X");
      }
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return LaurentValue::monomial(QHalfCoeff::monomial(coeff, qe), xe);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

LaurentValue LaurentValue::parse(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return {};
  if (trimmed.empty()) throw ValidationError("cannot parse empty Laurent value");
  return TermParser(trimmed).parse();
}

LaurentValue laurent_arith(const LaurentValue& a, const LaurentValue& b, Arith op) {
  switch (op) {
  case Arith::add:
    return a + b;
  case Arith::mul:
    return a * b;
  case Arith::neg:
    return -a;
  }
  return a;
}

// ------------------------------------------------------------------ RatFuncX

RatFuncX::RatFuncX(LaurentValue num, LaurentValue den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RatFuncX::canonicalize() {
  const int m = den_.min_x_exp();
  if (m != 0) {
    num_ = num_.shifted(-m);
    den_ = den_.shifted(-m);
  }
  const QHalfCoeff lead = den_.coeff(0);
  if (lead.is_monomial()) {
    const auto& [e, r] = *lead.terms().begin();
    LaurentValue inv(QHalfCoeff::monomial(1 / r, -e));
    num_ *= inv;
    den_ *= inv;
  }
}

RatFuncX operator+(const RatFuncX& a, const RatFuncX& b) {
  return RatFuncX(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncX operator-(const RatFuncX& a, const RatFuncX& b) {
  return RatFuncX(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncX operator*(const RatFuncX& a, const RatFuncX& b) { return RatFuncX(a.num_ * b.num_, a.den_ * b.den_); }

RatFuncX operator/(const RatFuncX& a, const RatFuncX& b) {
  if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
  return RatFuncX(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFuncX& a, const RatFuncX& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string RatFuncX::to_string() const {
  if (den_ == LaurentValue(Rat(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rat ratfunc_eval(const RatFuncX& f, const Rat& x0, const Rat& q0) {
  auto den = f.den().eval_exact(x0, q0);
  auto num = f.num().eval_exact(x0, q0);
  if (!den || !num) throw DomainError("q^(1/2) is irrational at q = " + to_string(q0) + "; use float evaluation");
  if (*den == 0) throw PoleError("pole of rational function at X = " + to_string(x0));
  return *num / *den;
}

double ratfunc_eval_float(const RatFuncX& f, double x0, double q0) {
  const double den = f.den().eval(x0, q0);
  if (den == 0.0) throw PoleError("pole of rational function at X = " + std::to_string(x0));
  return f.num().eval(x0, q0) / den;
}

// ------------------------------------------------------------------ Rank2Val

Ordering rank2_compare(Rank2Val a, Rank2Val b) {
  if (a < b) return Ordering::lt;
  if (b < a) return Ordering::gt;
  return Ordering::eq;
}

const char* to_string(Ordering o) {
  switch (o) {
  case Ordering::lt:
    return "lt";
  case Ordering::eq:
    return "eq";
  case Ordering::gt:
    return "gt";
  }
  return "?";
}

} // namespace adelic
