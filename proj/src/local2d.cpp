#include "adelic/local2d.hpp"

#include "adelic/errors.hpp"
#include "adelic/qsexpr.hpp"

namespace adelic {

Local2DField Local2DField::eqchar(long q, long d) {
  if (q < 2 || !prime_power(q)) throw ValidationError("residue cardinality must be a prime power, got " + std::to_string(q));
  return {FieldKind::eqchar, q, d};
}

Local2DField Local2DField::arch_real(long d) { return {FieldKind::arch_real, 0, d}; }
Local2DField Local2DField::arch_complex(long d) { return {FieldKind::arch_complex, 0, d}; }

Element2D operator*(const Element2D& a, const Element2D& b) {
  if (a.zero || b.zero) return Element2D::zero_element();
  std::string tag = a.unit_tag == "1" ? b.unit_tag : (b.unit_tag == "1" ? a.unit_tag : a.unit_tag + "*" + b.unit_tag);
  return {a.i + b.i, a.j + b.j, tag, false};
}

PointData::PointData(Local2DField f, long degree) : field(f), deg(degree) {
  if (deg < 1) throw ValidationError("point degree must be at least 1");
}

Rank2Val rank2_valuation(const Element2D& e) {
  if (e.zero) throw DomainError("valuation of zero is undefined");
  return {e.j, e.i};
}

namespace {

void require_eqchar(const Local2DField& F, const Element2D& e) {
  if (e.zero) throw DomainError("module of zero");
  if (F.kind != FieldKind::eqchar) throw UnsupportedError("archimedean modules are evaluated numerically");
}

} // namespace

LaurentValue module_value(const Local2DField& F, const Element2D& e) {
  require_eqchar(F, e);
  return LaurentValue::monomial(QHalfCoeff::q_power(static_cast<int>(-2 * e.j)), static_cast<int>(e.i));
}

QSExpr module_power_symbolic(const Local2DField& F, const Element2D& e) {
  require_eqchar(F, e);
  return QSExpr::power(F.q, LinExp{Rat(-e.j), Rat(0)}) * QSExpr::x_power(LinExp{Rat(e.i), Rat(0)});
}

} // namespace adelic
