#include "adelic/rational.hpp"

#include <cctype>
#include <limits>

#include "adelic/errors.hpp"

namespace adelic {

Rat make_rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat r(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ValidationError("not a rational number: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  BigInt d(std::string{den});
  if (d == 0) throw ValidationError("rational with zero denominator: '" + std::string(text) + "'");
  Rat r(BigInt(n), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rat pow(const Rat& r, std::int64_t k) {
  if (k == 0) return Rat(1);
  if (k < 0) {
    if (r == 0) throw DomainError("zero to a negative power");
    Rat inv = 1 / r;
    return pow(inv, -k);
  }
  Rat result(1), base(r);
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

BigInt ipow(std::int64_t base, unsigned k) {
  BigInt out;
  BigInt b(std::to_string(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), k);
  return out;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 || mpz_perfect_square_p(r.get_den_mpz_t()) == 0)
    return std::nullopt;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  Rat out(n, d);
  out.canonicalize();
  return out;
}

double to_double(const Rat& r) { return r.get_d(); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(n, 1);
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

int moebius(std::int64_t n) {
  if (n < 1) throw DomainError("moebius of nonpositive integer");
  int sign = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t checked_ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && std::abs(out) > std::numeric_limits<std::int64_t>::max() / std::abs(base))
      throw DomainError("integer power overflows 64 bits");
    out *= base;
  }
  return out;
}

} // namespace adelic
