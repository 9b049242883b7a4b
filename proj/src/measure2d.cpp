#include "adelic/measure2d.hpp"

#include "adelic/errors.hpp"

namespace adelic {

MeasSet MeasSet::box(const Local2DField& F, long i, long j) { return MeasSet{{{1, BoxSet{F, i, j, {}}}}}; }

MeasSet MeasSet::shifted_box(const Local2DField& F, long i, long j, std::string shift) {
  if (shift.empty()) throw ValidationError("shift label must be nonempty");
  return MeasSet{{{1, BoxSet{F, i, j, std::move(shift)}}}};
}

MeasSet MeasSet::unit_coset(const Local2DField& F, long i, long j) {
  MeasSet s = box(F, i, j);
  s.subtract(box(F, i, j + 1));
  return s;
}

MeasSet& MeasSet::add(const MeasSet& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

MeasSet& MeasSet::subtract(const MeasSet& o) {
  for (const auto& t : o.terms) terms.push_back({-t.sign, t.box});
  return *this;
}

const Local2DField& MeasSet::field() const {
  if (terms.empty()) throw ValidationError("empty set has no field");
  return terms.front().box.field;
}

namespace {

void check_fields(const MeasSet& S) {
  for (const auto& t : S.terms) {
    if (!(t.box.field == S.terms.front().box.field)) throw ValidationError("set mixes boxes from different fields");
    if (t.box.field.kind != FieldKind::eqchar) throw UnsupportedError("lifted measure is implemented for equal-characteristic fields");
  }
}

} // namespace

std::vector<Layer> normalize(const MeasSet& S) {
  check_fields(S);
  bool any_shift = false;
  for (const auto& t : S.terms) any_shift = any_shift || t.box.shifted();
  if (any_shift) {
    if (S.terms.size() == 1 && S.terms[0].sign == 1) return {Layer{S.terms[0].box.corner(), std::nullopt}};
    throw SetAlgebraError("shifted boxes are only supported as a single coset");
  }
  std::map<Rank2Val, int> mult;
  for (const auto& t : S.terms) {
    if (t.sign != 1 && t.sign != -1) throw SetAlgebraError("set coefficients must be +1 or -1");
    int& m = mult[t.box.corner()];
    m += t.sign;
    if (m == 0) mult.erase(t.box.corner());
  }
  std::vector<Layer> layers;
  int cum = 0;
  std::optional<Rank2Val> open;
  for (const auto& [v, m] : mult) {
    cum += m;
    if (cum != 0 && cum != 1)
      throw SetAlgebraError("set expression is not a disjoint union (multiplicity " + std::to_string(cum) + " below corner (" +
                            std::to_string(v.v1) + ", " + std::to_string(v.v2) + "))");
    if (cum == 1 && !open) open = v;
    if (cum == 0 && open) {
      layers.push_back({*open, v});
      open.reset();
    }
  }
  if (open) layers.push_back({*open, std::nullopt});
  return layers;
}

LaurentValue box_measure(const Local2DField& F, long i, long j) {
  if (F.kind != FieldKind::eqchar) throw UnsupportedError("lifted measure is implemented for equal-characteristic fields");
  return LaurentValue::monomial(QHalfCoeff::q_power(static_cast<int>(F.d - 2 * j)), static_cast<int>(i));
}

LaurentValue measure_additive(const MeasSet& S) {
  LaurentValue total;
  if (S.terms.empty()) return total;
  const auto& F = S.field();
  for (const auto& L : normalize(S)) {
    total += box_measure(F, L.outer.v2, L.outer.v1);
    if (L.inner) total -= box_measure(F, L.inner->v2, L.inner->v1);
  }
  return total;
}

LaurentValue measure_multiplicative(const MeasSet& S) {
  if (S.terms.empty()) return {};
  const auto& F = S.field();
  long cosets = 0;
  for (const auto& L : normalize(S)) {
    if (!L.inner || L.inner->v2 != L.outer.v2 || L.inner->v1 <= L.outer.v1)
      throw SetAlgebraError("set is not a finite union of unit cosets t2^i t1^j O^x");
    cosets += L.inner->v1 - L.outer.v1;
  }
  return LaurentValue(QHalfCoeff::monomial(Rat(cosets), static_cast<int>(F.d)));
}

SimpleFunction& SimpleFunction::add(LaurentValue c, MeasSet S) {
  terms.push_back({std::move(c), std::move(S)});
  return *this;
}

LaurentValue integrate_simple(const SimpleFunction& f, MeasureMode mode) {
  LaurentValue total;
  for (const auto& t : f.terms)
    total += t.coeff * (mode == MeasureMode::additive ? measure_additive(t.set) : measure_multiplicative(t.set));
  return total;
}

BoxExpansion box_expansion(const SimpleFunction& f) {
  BoxExpansion out;
  std::optional<Local2DField> field;
  auto accumulate = [&out](long i, long j, const LaurentValue& c) {
    auto& slot = out[{i, j}];
    slot += c;
    if (slot.is_zero()) out.erase({i, j});
  };
  for (const auto& t : f.terms) {
    if (t.set.terms.empty()) continue;
    for (const auto& bt : t.set.terms)
      if (bt.box.shifted()) throw UnsupportedError("box with shift '" + bt.box.shift + "' has no shift-free expansion");
    if (field && !(*field == t.set.field())) throw ValidationError("simple function mixes fields");
    field = t.set.field();
    for (const auto& L : normalize(t.set)) {
      accumulate(L.outer.v2, L.outer.v1, t.coeff);
      if (L.inner) accumulate(L.inner->v2, L.inner->v1, -t.coeff);
    }
  }
  return out;
}

SimpleFunction from_box_expansion(const Local2DField& F, const BoxExpansion& e) {
  SimpleFunction f;
  for (const auto& [ij, c] : e) f.add(c, MeasSet::box(F, ij.first, ij.second));
  return f;
}

SimpleFunction fourier_box(const SimpleFunction& f) {
  if (f.terms.empty()) return {};
  std::optional<Local2DField> field;
  for (const auto& t : f.terms)
    if (!t.set.terms.empty()) field = t.set.field();
  if (!field) return {};
  BoxExpansion in = box_expansion(f);
  BoxExpansion out;
  for (const auto& [ij, c] : in) {
    const auto [i, j] = ij;
    out[{-i, field->d - j}] += c * box_measure(*field, i, j);
  }
  return from_box_expansion(*field, out);
}

} // namespace adelic
