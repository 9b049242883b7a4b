#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <vector>

namespace oracle {

// GF(p^k) = F_p[z]/(modulus), elements encoded as base-p digit integers.
class FiniteField {
public:
  FiniteField(long p, std::vector<long> monic_modulus) : p_(p), mod_(std::move(monic_modulus)) {
    k_ = static_cast<long>(mod_.size()) - 1;
    size_ = 1;
    for (long i = 0; i < k_; ++i) size_ *= p_;
  }
  long size() const { return size_; }
  long from_int(long a) const { return ((a % p_) + p_) % p_; }
  long add(long a, long b) const {
    long out = 0, scale = 1;
    for (long i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }
  long mul(long a, long b) const {
    std::vector<long> x = digits(a), y = digits(b), r(2 * k_, 0);
    for (long i = 0; i < k_; ++i)
      for (long j = 0; j < k_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
    for (long d = 2 * k_ - 1; d >= k_; --d) {
      const long c = r[d];
      if (!c) continue;
      for (long i = 0; i <= k_; ++i) r[d - k_ + i] = ((r[d - k_ + i] - c * mod_[i]) % p_ + p_) % p_;
    }
    long out = 0, scale = 1;
    for (long i = 0; i < k_; ++i) {
      out += r[i] * scale;
      scale *= p_;
    }
    return out;
  }
  // Evaluates the integer polynomial (constant term first) at x.
  long eval(const std::vector<long>& coeffs, long x) const {
    long acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), from_int(*it));
    return acc;
  }
  // Projective points of y^2 = f(x) with deg f odd (one point at infinity).
  long count_odd_hyperelliptic(const std::vector<long>& f) const {
    std::vector<long> roots(static_cast<std::size_t>(size_), 0);
    for (long y = 0; y < size_; ++y) ++roots[static_cast<std::size_t>(mul(y, y))];
    long n = 1;
    for (long x = 0; x < size_; ++x) n += roots[static_cast<std::size_t>(eval(f, x))];
    return n;
  }

private:
  std::vector<long> digits(long a) const {
    std::vector<long> d(static_cast<std::size_t>(k_));
    for (long i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  long p_, k_, size_;
  std::vector<long> mod_;
};

} // namespace oracle
