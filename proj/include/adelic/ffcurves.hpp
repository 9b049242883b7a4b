#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "adelic/exact_values.hpp"

namespace adelic {

enum class CurveFamily { projective_line, elliptic, generic };
const char* to_string(CurveFamily f);
CurveFamily parse_family(const std::string& s);

// Smooth projective curve over F_q described by the numerator P(t) of its
// zeta function Z(t) = P(t) / ((1 - t)(1 - q t)).
struct CurveFF {
  std::int64_t q = 2;
  int g = 0;
  std::vector<std::int64_t> P{1}; // constant term first
  CurveFamily family = CurveFamily::generic;

  // Checks q is a prime power, deg P = 2g and P(0) = 1.
  static CurveFF make(std::int64_t q, int g, std::vector<std::int64_t> P, CurveFamily family = CurveFamily::generic);
  static CurveFF projective_line(std::int64_t q);
  // Elliptic curve with N_1 = q + 1 - trace.
  static CurveFF elliptic(std::int64_t q, std::int64_t trace);
  // Recovers P from N_1..N_g using the functional equation.
  static CurveFF from_point_counts(std::int64_t q, int g, const std::vector<BigInt>& counts,
                                   CurveFamily family = CurveFamily::generic);

  // P(t) = q^g t^(2g) P(1/(q t)) coefficientwise.
  bool functional_equation_holds() const;
  std::complex<double> eval_P(std::complex<double> t) const;
  friend bool operator==(const CurveFF&, const CurveFF&) = default;
};

struct DivisorFF {
  long degree = 0;
  bool principal = false; // meaningful only in degree 0 on elliptic curves
};

// N_1..N_nmax via Newton's identities on P. Throws ValidationError when the
// numerator fails the functional equation.
std::vector<BigInt> point_counts(const CurveFF& c, int nmax);
// Number of closed points of each degree 1..nmax.
std::vector<BigInt> closed_point_counts(const CurveFF& c, int nmax);

struct ZetaClosedForm {
  RatFuncX Z; // in the variable X standing for t
  bool certificate = false;
};
ZetaClosedForm zeta_closed_form(const CurveFF& c);
// Z(q^-s) from the closed form.
std::complex<double> zeta_value(const CurveFF& c, std::complex<double> s);

// prod_{n <= deg_max} (1 - q^(-n s))^(-a_n), requires Re s > 1.
std::complex<double> euler_truncated(const CurveFF& c, std::complex<double> s, int deg_max);

long rr_dim(const CurveFF& c, const DivisorFF& D);

struct SummationReport {
  LaurentValue lhs; // X^i q^l(D), q symbolic
  LaurentValue rhs; // X^i q^(deg D + 1 - g) q^l(K - D)
  long l_D = 0;
  long l_KD = 0;
  long deg_K = 0;
  bool equal = false;
};
SummationReport summation_check(const CurveFF& c, const DivisorFF& D, long i);

} // namespace adelic
