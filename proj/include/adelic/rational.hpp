#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace adelic {

// Exact rational and integer scalars. mpq_class keeps values reduced with a
// positive denominator after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat make_rat(std::int64_t num, std::int64_t den = 1);

// Parses "a", "-a" or "a/b"; throws ValidationError on anything else.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);
std::string to_string(const BigInt& z);

// r^k for any integer k (r must be nonzero when k < 0).
Rat pow(const Rat& r, std::int64_t k);
BigInt ipow(std::int64_t base, unsigned k);

bool is_integer(const Rat& r);

// Exact square root when r is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& r);

double to_double(const Rat& r);

// Number-theoretic helpers shared by several modules.
bool is_prime(std::int64_t n);
// Returns (p, k) with n = p^k when n is a prime power, nullopt otherwise.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t n);
int moebius(std::int64_t n);
std::int64_t checked_ipow(std::int64_t base, int exp);

} // namespace adelic
