#pragma once

#include <map>
#include <memory>
#include <optional>

#include "oddjacobi/error.hpp"
#include "oddjacobi/monomial.hpp"

namespace oddjacobi {

/// Exact-rational linear combination of canonically ordered graded monomials.
/// Canonical form is unique, so equality is structural. Values are immutable
/// after construction and safe to share between threads.
class SuperPoly {
 public:
  /// The zero polynomial of the given algebra.
  explicit SuperPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static SuperPoly zero(AlgebraPtr alg) { return SuperPoly(std::move(alg)); }
  static SuperPoly constant(AlgebraPtr alg, const Rational& c);
  static SuperPoly variable(AlgebraPtr alg, int var_index);
  /// exp(rate * t) on the line base variable; requires the line extension.
  static SuperPoly exponential(AlgebraPtr alg, const Rational& rate);
  static SuperPoly from_monomial(AlgebraPtr alg, Monomial m, const Rational& coeff);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  SuperPoly operator-() const;
  SuperPoly& operator+=(const SuperPoly& rhs);
  SuperPoly& operator-=(const SuperPoly& rhs);
  friend SuperPoly operator+(SuperPoly lhs, const SuperPoly& rhs) { return lhs += rhs; }
  friend SuperPoly operator-(SuperPoly lhs, const SuperPoly& rhs) { return lhs -= rhs; }
  friend SuperPoly operator*(const SuperPoly& lhs, const SuperPoly& rhs);
  friend SuperPoly operator*(const Rational& c, const SuperPoly& p);
  friend bool operator==(const SuperPoly& a, const SuperPoly& b);

  /// Left partial derivative with respect to the variable at `var_index`.
  /// Differentiating by a variable absent from a term gives zero; on the line
  /// base variable exponential factors contribute their rate.
  SuperPoly derivative(int var_index) const;

  /// Parity when parity-homogeneous (zero counts as even), nullopt otherwise.
  std::optional<Parity> homogeneous_parity() const;
  /// Parity of a parity-homogeneous value; throws GradingError on mixed input.
  Parity parity() const;

  struct Grading {
    Parity parity = Parity::even;
    int fibre_degree = 0;
  };
  /// Parity and fibre degree of a value homogeneous in both gradings; throws
  /// GradingError naming the grading that fails.
  Grading grading() const;

  /// Fibre degree when fibre-homogeneous (zero counts as degree 0).
  std::optional<int> homogeneous_fibre_degree() const;

  bool is_momentum_free() const;
  bool is_parity_homogeneous(Parity p) const;

  /// Projection onto the terms of the given parity.
  SuperPoly parity_component(Parity p) const;

  /// Reinterpret this value in an algebra that extends the current one (same
  /// variables plus a line pair). Variable indices are preserved.
  SuperPoly transferred_to(const AlgebraPtr& target) const;

  /// Throws AlgebraMismatchError unless both operands share one universe.
  void require_same_algebra(const SuperPoly& other) const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  AlgebraPtr alg_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace oddjacobi
