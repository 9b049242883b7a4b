#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adelic/exact_values.hpp"
#include "adelic/local2d.hpp"

namespace adelic {

// t2^i t1^j O_F, optionally translated by a labelled representative. Boxes
// form a chain: B(i,j) is contained in B(i',j') iff (j,i) >= (j',i') in the
// rank-2 order.
struct BoxSet {
  Local2DField field;
  long i = 0;
  long j = 0;
  std::string shift; // empty for shift-free boxes

  Rank2Val corner() const { return {j, i}; }
  bool shifted() const { return !shift.empty(); }
};

// Signed combination of boxes describing a set via its indicator function.
struct MeasSet {
  struct Term {
    int sign = 1;
    BoxSet box;
  };
  std::vector<Term> terms;

  static MeasSet box(const Local2DField& F, long i, long j);
  static MeasSet shifted_box(const Local2DField& F, long i, long j, std::string shift);
  // t2^i t1^j O_F^x = B(i,j) \ B(i,j+1)
  static MeasSet unit_coset(const Local2DField& F, long i, long j);
  MeasSet& add(const MeasSet& o);      // disjoint union
  MeasSet& subtract(const MeasSet& o); // difference with a subset
  const Local2DField& field() const;
};

// B(outer) \ B(inner); inner absent means the whole outer box.
struct Layer {
  Rank2Val outer;
  std::optional<Rank2Val> inner;
  friend bool operator==(const Layer&, const Layer&) = default;
};

// Disjoint layer decomposition of a shift-free set. Throws SetAlgebraError
// when the indicator takes a value outside {0, 1}.
std::vector<Layer> normalize(const MeasSet& S);

// mu(t2^i t1^j O_F) = X^i q^-j q^(d/2)
LaurentValue box_measure(const Local2DField& F, long i, long j);
LaurentValue measure_additive(const MeasSet& S);
// Haar measure on F^x normalized so every unit coset has measure q^(d/2).
LaurentValue measure_multiplicative(const MeasSet& S);

struct SimpleFunction {
  struct Term {
    LaurentValue coeff;
    MeasSet set;
  };
  std::vector<Term> terms;
  SimpleFunction& add(LaurentValue c, MeasSet S);
};

enum class MeasureMode { additive, multiplicative };
LaurentValue integrate_simple(const SimpleFunction& f, MeasureMode mode);

// Coefficient of char(B(i,j)) for each box, after expanding layers.
using BoxExpansion = std::map<std::pair<long, long>, LaurentValue>;
BoxExpansion box_expansion(const SimpleFunction& f);
SimpleFunction from_box_expansion(const Local2DField& F, const BoxExpansion& e);

// char(B(i,j)) -> mu(B(i,j)) char(B(-i, d-j)), extended linearly.
SimpleFunction fourier_box(const SimpleFunction& f);

} // namespace adelic
