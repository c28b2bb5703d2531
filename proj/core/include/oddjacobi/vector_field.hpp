#pragma once

#include <vector>

#include "oddjacobi/phase_space.hpp"

namespace oddjacobi {

/// A vector field on the underlying supermanifold, stored by its components:
/// X = sum_A X^A d/dx^A with the components written on the left. Component A
/// must be momentum-free and, unless zero, of parity (field + coordinate A).
/// When the space carries a line factor the final slot is the d/dt component.
class VectorField {
 public:
  VectorField(PhaseSpace space, Parity parity, std::vector<SuperPoly> components);

  static VectorField zero(PhaseSpace space, Parity parity);

  /// Inverse of symbol(): splits a momentum-linear polynomial back into
  /// components. Throws StructureShapeError unless every term carries exactly
  /// one momentum factor (the zero polynomial counts, as the zero field).
  static VectorField from_symbol(const PhaseSpace& space, const SuperPoly& symbol);

  const PhaseSpace& space() const { return space_; }
  Parity parity() const { return parity_; }
  const std::vector<SuperPoly>& components() const { return components_; }
  bool is_zero() const;

  /// Momentum-linear avatar sum_A X^A p_A. Bracketing symbols matches
  /// commuting fields: symbol([X,Y]) = {symbol(X), symbol(Y)}.
  SuperPoly symbol() const;

  /// X(f) = sum_A X^A df/dx^A (left derivatives). For momentum-free f this
  /// agrees with {symbol(X), f}.
  SuperPoly apply(const SuperPoly& f) const;

  VectorField scaled(const Rational& c) const;

  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  PhaseSpace space_;
  Parity parity_ = Parity::even;
  std::vector<SuperPoly> components_;
};

/// Graded commutator [X, Y], recovered from the bracket of the symbols.
VectorField commutator(const VectorField& x, const VectorField& y);

/// Lie derivative along X of a phase-space value, defined through the
/// canonical bracket with the symbol of X.
SuperPoly lie_derivative(const VectorField& x, const SuperPoly& f);

}  // namespace oddjacobi
