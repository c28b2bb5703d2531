#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oddjacobi/superpoly.hpp"

namespace oddjacobi {

/// A supermanifold described by its global coordinate chart: named even and
/// odd coordinates in a fixed order.
struct SuperManifold {
  std::vector<std::pair<std::string, Parity>> coordinates;
};

/// The total space of the cotangent bundle of a supermanifold, realised as
/// the polynomial algebra in the coordinates and their conjugate momenta.
/// Extending with a line adjoins one even coordinate, its momentum, and the
/// exponential functions of that coordinate.
class PhaseSpace {
 public:
  static PhaseSpace over(SuperManifold manifold);

  /// Same manifold crossed with a line whose coordinate is `line_name`.
  PhaseSpace extended_with_line(const std::string& line_name = "t") const;

  const SuperManifold& manifold() const { return manifold_; }
  const AlgebraPtr& algebra() const { return alg_; }
  bool has_line() const { return alg_->has_line(); }
  bool same_space(const PhaseSpace& other) const {
    return alg_->same_universe(*other.alg_);
  }

  SuperPoly zero() const { return SuperPoly::zero(alg_); }
  SuperPoly one() const { return SuperPoly::constant(alg_, 1); }
  SuperPoly constant(const Rational& c) const { return SuperPoly::constant(alg_, c); }
  /// Coordinate function by name (the line coordinate counts). Throws Error
  /// when no such coordinate exists.
  SuperPoly coordinate(std::string_view name) const;
  /// Momentum conjugate to the named coordinate.
  SuperPoly momentum(std::string_view coord_name) const;
  SuperPoly line_coordinate() const;
  SuperPoly line_momentum() const;
  SuperPoly exponential(const Rational& rate) const {
    return SuperPoly::exponential(alg_, rate);
  }

 private:
  PhaseSpace() = default;
  SuperManifold manifold_;
  AlgebraPtr alg_;
};

/// Canonical Poisson bracket of the cotangent bundle. Graded skewsymmetric,
/// even, satisfies the Jacobi and Leibniz identities; coordinates and their
/// momenta are conjugate pairs. Defined for arbitrary polynomials by
/// bilinear extension over parity components of the first argument.
SuperPoly canonical_poisson(const SuperPoly& f, const SuperPoly& g);

/// Invertible linear change of the manifold coordinates together with its
/// lift to the whole phase space (momenta transform contragradiently, so the
/// canonical bracket is preserved). Entries mixing parities must be zero and
/// the matrix must be invertible over the rationals; violations throw
/// SingularChangeError.
class LinearChange {
 public:
  /// `matrix[i][j]` is the coefficient of old coordinate j in new
  /// coordinate i. The line pair, when present, is left untouched.
  LinearChange(PhaseSpace space, std::vector<std::vector<Rational>> matrix);

  const PhaseSpace& space() const { return space_; }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
  const std::vector<std::vector<Rational>>& inverse() const { return inverse_; }

  /// Rewrite `f` in the new coordinates and momenta.
  SuperPoly lift(const SuperPoly& f) const;

 private:
  PhaseSpace space_;
  std::vector<std::vector<Rational>> matrix_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<SuperPoly> images_;  // substitution target per variable index
};

}  // namespace oddjacobi
