#pragma once

#include <complex>
#include <string>

namespace adelic {

// How the Dedekind zeta function of a field is evaluated.
enum class DedekindTag { rational, quadratic, none };
const char* to_string(DedekindTag t);

// Invariants of a number field used by the surface model: the base field k
// and the fields k_i of horizontal curves.
struct NumberFieldDesc {
  std::string label = "Q";
  long degree = 1;
  long r1 = 1;
  long r2 = 0;
  long abs_disc = 1;
  DedekindTag tag = DedekindTag::rational;
  long D = 1; // fundamental discriminant for quadratic fields

  static NumberFieldDesc rational();
  static NumberFieldDesc quadratic(long D);
  // Throws ValidationError when the invariants are inconsistent.
  void validate() const;
  friend bool operator==(const NumberFieldDesc&, const NumberFieldDesc&) = default;
};

bool is_fundamental_discriminant(long D);
// Kronecker symbol (D / n) for n >= 1.
int kronecker(long D, long n);

} // namespace adelic
