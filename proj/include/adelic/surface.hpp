#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "adelic/ffcurves.hpp"
#include "adelic/numberfield.hpp"
#include "adelic/qsexpr.hpp"

namespace adelic {

// Reduced fibre over a closed point of the base with residue field F_p
// (p a prime power): normalizations of its components and its split nodes.
struct FibreDesc {
  std::int64_t p = 2;
  std::vector<CurveFF> components; // component q is a power of p
  std::vector<long> nodes;         // degree of each node over F_p
  bool good = true;

  long node_weight() const; // sum of node degrees
  friend bool operator==(const FibreDesc&, const FibreDesc&) = default;
};

enum class ZetaSource { euler, p1_closed_form };
const char* to_string(ZetaSource z);
ZetaSource parse_zeta_source(const std::string& s);

struct SurfaceModel {
  long g = 0;
  NumberFieldDesc base;
  std::vector<FibreDesc> fibres; // sorted by p
  std::vector<NumberFieldDesc> horizontals;
  long p_max = 1;
  ZetaSource zeta_source = ZetaSource::euler;

  // Sorts fibres and enforces every model invariant; throws ValidationError.
  void validate();
  const FibreDesc* fibre(std::int64_t p) const;
  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

// Checks one fibre against the generic-fibre genus g.
void validate_fibre(const FibreDesc& fd, long g);

// Projective line over Z: every fibre P^1(F_p) for primes p <= p_max.
SurfaceModel make_p1_model(long p_max);

// prod_p p^(sum of node degrees)
BigInt conductor(const SurfaceModel& m);

// prod Z_comp(q_comp^-s) * prod_nodes (1 - p^(-deg s)).
QSExpr fibre_zeta_symbolic(const FibreDesc& fd);
// Closed form when deg_max == 0, otherwise the Euler product over closed
// points of degree <= deg_max. Requires Re s > 1.
std::complex<double> fibre_zeta(const FibreDesc& fd, std::complex<double> s, int deg_max = 0);
// F_(p^n)-points of the reduced fibre and its closed points of each degree.
std::vector<BigInt> fibre_point_counts(const FibreDesc& fd, int nmax);
std::vector<BigInt> fibre_closed_point_counts(const FibreDesc& fd, int nmax);

struct TruncatedProduct {
  std::complex<double> value;
  double rel_error_estimate = 0.0; // ~ (2g+2) P^(2-sigma) / ((sigma-2) ln P)
  long primes_used = 0;
};
// prod_{p <= P_max} fibre_zeta; requires Re s > 2 and, over Q, a fibre at
// every prime up to P_max.
TruncatedProduct surface_zeta(const SurfaceModel& m, std::complex<double> s, long P_max);

struct CompletedOptions {
  bool include_Q = true;
  // Completed zeta functions for horizontal fields without a builtin one.
  std::map<std::string, std::function<std::complex<double>(std::complex<double>)>> custom_xi;
};
// zeta(S,s) A^((1-s)/2) Gamma(S,s) Q(s) |d_k|^((1-g)(s-1/2)) prod xi(k_i, s/2).
std::complex<double> completed_Z(const SurfaceModel& m, std::complex<double> s, const CompletedOptions& opt = {});
// The arithmetic part zeta(S, s) used by completed_Z.
std::complex<double> surface_zeta_value(const SurfaceModel& m, std::complex<double> s);
std::complex<double> horizontal_xi(const NumberFieldDesc& k, std::complex<double> s, const CompletedOptions& opt);

} // namespace adelic
