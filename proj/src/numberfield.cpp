#include "adelic/numberfield.hpp"

#include <cstdlib>

#include "adelic/errors.hpp"

namespace adelic {

const char* to_string(DedekindTag t) {
  switch (t) {
  case DedekindTag::rational:
    return "rational";
  case DedekindTag::quadratic:
    return "quadratic";
  case DedekindTag::none:
    return "none";
  }
  return "none";
}

NumberFieldDesc NumberFieldDesc::rational() { return {}; }

NumberFieldDesc NumberFieldDesc::quadratic(long D) {
  if (!is_fundamental_discriminant(D)) throw ValidationError("not a fundamental discriminant: " + std::to_string(D));
  NumberFieldDesc k;
  k.label = "Q(sqrt(" + std::to_string(D % 4 == 0 ? D / 4 : D) + "))";
  k.degree = 2;
  k.r1 = D > 0 ? 2 : 0;
  k.r2 = D > 0 ? 0 : 1;
  k.abs_disc = std::labs(D);
  k.tag = DedekindTag::quadratic;
  k.D = D;
  return k;
}

void NumberFieldDesc::validate() const {
  auto fail = [this](const std::string& what) { throw ValidationError("field '" + label + "': " + what); };
  if (degree < 1 || r1 < 0 || r2 < 0) fail("degree and place counts must be nonnegative");
  if (degree != r1 + 2 * r2) fail("degree must equal r1 + 2 r2");
  if (abs_disc < 1) fail("|d_k| must be at least 1");
  if (tag == DedekindTag::rational && (degree != 1 || abs_disc != 1))
    fail("rational tag requires degree 1 and |d_k| = 1");
  if (tag == DedekindTag::quadratic) {
    if (!is_fundamental_discriminant(D)) fail("D is not a fundamental discriminant");
    if (degree != 2 || abs_disc != std::labs(D)) fail("quadratic tag requires degree 2 and |d_k| = |D|");
    if ((D > 0) != (r1 == 2)) fail("signature does not match the sign of D");
  }
}

bool is_fundamental_discriminant(long D) {
  if (D == 0 || D == 1) return false;
  auto squarefree = [](long n) {
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  };
  const long r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D);
  if (r == 0) {
    const long m = D / 4;
    const long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
  }
  return false;
}

int kronecker(long D, long n) {
  if (n < 1) throw DomainError("Kronecker symbol needs n >= 1");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    const long r = ((D % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (D / n) for odd n.
  long a = ((D % n) + n) % n;
  long m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

} // namespace adelic
