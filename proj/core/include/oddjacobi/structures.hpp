#pragma once

#include "oddjacobi/report.hpp"
#include "oddjacobi/vector_field.hpp"

namespace oddjacobi {

/// An odd function of fibre degree two; the generator of an odd bracket on
/// functions of the base. The zero generator is allowed (it generates the
/// zero bracket); a nonzero generator must have grading (odd, 2).
class SchoutenStructure {
 public:
  SchoutenStructure(PhaseSpace space, SuperPoly s_hat);

  const PhaseSpace& space() const { return space_; }
  const SuperPoly& s_hat() const { return s_hat_; }

 private:
  PhaseSpace space_;
  SuperPoly s_hat_;
};

/// An odd vector field together with its cached momentum-linear symbol.
/// Squaring to zero is a condition verified by the checkers, not a
/// construction invariant.
class HomologicalField {
 public:
  HomologicalField(PhaseSpace space, VectorField field);

  const PhaseSpace& space() const { return space_; }
  const VectorField& field() const { return field_; }
  const SuperPoly& symbol() const { return symbol_; }

 private:
  PhaseSpace space_;
  VectorField field_;
  SuperPoly symbol_;
};

/// A Schouten generator paired with an odd vector field, intended to satisfy
/// {Q,Q} = 0, {Q,S_hat} = 0 and {S_hat,S_hat} = 0 (verified by check_qs).
class QSStructure {
 public:
  QSStructure(SchoutenStructure schouten, HomologicalField homological);

  const PhaseSpace& space() const { return schouten_.space(); }
  const SchoutenStructure& schouten() const { return schouten_; }
  const HomologicalField& homological() const { return homological_; }
  const SuperPoly& s_hat() const { return schouten_.s_hat(); }
  const SuperPoly& q_symbol() const { return homological_.symbol(); }

 private:
  SchoutenStructure schouten_;
  HomologicalField homological_;
};

/// An almost-Schouten generator S (odd, fibre degree two) and an odd vector
/// field, intended to satisfy the weakened compatibility {S,S} = -2*Q*S
/// together with {Q,Q} = 0 and {Q,S} = 0 (verified by check_odd_jacobi).
class OddJacobiStructure {
 public:
  OddJacobiStructure(PhaseSpace space, SuperPoly s, HomologicalField homological);

  const PhaseSpace& space() const { return space_; }
  const SuperPoly& s() const { return s_; }
  const HomologicalField& homological() const { return homological_; }
  const SuperPoly& q_symbol() const { return homological_.symbol(); }

 private:
  PhaseSpace space_;
  SuperPoly s_;
  HomologicalField homological_;
};

/// A QS structure with an even homothety vector field E, intended to rescale
/// both generators by -1 (verified by check_exact_qs).
class ExactQSStructure {
 public:
  ExactQSStructure(QSStructure qs, VectorField homothety);

  const PhaseSpace& space() const { return qs_.space(); }
  const QSStructure& qs() const { return qs_; }
  const VectorField& homothety() const { return homothety_; }
  const SuperPoly& homothety_symbol() const { return homothety_symbol_; }

 private:
  QSStructure qs_;
  VectorField homothety_;
  SuperPoly homothety_symbol_;
};

/// Odd bracket generated by a Schouten structure on functions of the base:
/// [[f,g]] = (-1)^{f+1} {{S_hat, f}, g}. Extended bilinearly over parity
/// components of f; throws Error when f or g carries momenta.
SuperPoly schouten_bracket(const SchoutenStructure& st, const SuperPoly& f,
                           const SuperPoly& g);

/// Odd Jacobi bracket [[f,g]] = (-1)^{f+1}( {{S,f},g} - {Q, f g} ). With the
/// zero field this is exactly the Schouten bracket of S.
SuperPoly odd_jacobi_bracket(const OddJacobiStructure& st, const SuperPoly& f,
                             const SuperPoly& g);

/// Residuals {Q,Q}, {Q,S_hat}, {S_hat,S_hat} under the names
/// "homological", "invariance", "schouten".
CheckReport check_qs(const QSStructure& st);

/// Residuals {Q,Q}, {Q,S}, {S,S} + 2*Q*S under the names
/// "homological", "invariance", "compatibility".
CheckReport check_odd_jacobi(const OddJacobiStructure& st);

/// check_qs residuals plus the homothety scalings {E,S_hat} + S_hat and
/// {E,Q} + Q, plus the equivalent exactness forms S_hat - {S_hat,E} and
/// Q - {Q,E}.
CheckReport check_exact_qs(const ExactQSStructure& st);

}  // namespace oddjacobi
