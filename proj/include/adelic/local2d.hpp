#pragma once

#include <string>

#include "adelic/exact_values.hpp"

namespace adelic {

class QSExpr;

enum class FieldKind { eqchar, arch_real, arch_complex };

// Descriptor of a two-dimensional local field F = k((t1))((t2)) with residue
// cardinality q and conductor exponent d of the fixed additive character.
struct Local2DField {
  FieldKind kind = FieldKind::eqchar;
  long q = 0; // 0 for the archimedean kinds
  long d = 0;

  static Local2DField eqchar(long q, long d = 0);
  static Local2DField arch_real(long d = 0);
  static Local2DField arch_complex(long d = 0);
  friend bool operator==(const Local2DField&, const Local2DField&) = default;
};

// Monomial representative t2^i t1^j u. Only the exponents matter for modules
// and measures; unit_tag is carried for display.
struct Element2D {
  long i = 0;
  long j = 0;
  std::string unit_tag = "1";
  bool zero = false;

  static Element2D zero_element() { return Element2D{0, 0, "0", true}; }
  friend Element2D operator*(const Element2D& a, const Element2D& b);
};

// A closed point on a fibre: q(x, z) = q_base^deg.
struct PointData {
  Local2DField field;
  long deg = 1;
  PointData(Local2DField f, long degree);
};

Rank2Val rank2_valuation(const Element2D& e);

// |t2^i t1^j u| = q^-j X^i, with q kept symbolic (evaluate at F.q).
LaurentValue module_value(const Local2DField& F, const Element2D& e);

// |e|^s as q^(-j s) X^(i s).
QSExpr module_power_symbolic(const Local2DField& F, const Element2D& e);

} // namespace adelic
