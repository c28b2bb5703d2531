#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oddjacobi/algebra.hpp"

namespace oddjacobi {

struct Factor {
  int var = 0;
  int exp = 1;
  bool operator==(const Factor&) const = default;
};

/// Canonically ordered graded monomial: factors strictly ascending by
/// variable index, odd variables with exponent exactly 1, plus the combined
/// exponential rate (0 when no exponential factor is present). The Koszul
/// reordering sign is always absorbed into the owning coefficient, so a
/// Monomial is a pure basis element.
class Monomial {
 public:
  Monomial() = default;  // the unit monomial

  /// `factors` must already be canonical; checked with assertions only.
  Monomial(std::vector<Factor> factors, Rational exp_rate);

  static const Monomial& unit();

  const std::vector<Factor>& factors() const { return factors_; }
  const Rational& exp_rate() const { return exp_rate_; }
  bool is_unit() const { return factors_.empty() && is_zero(exp_rate_); }
  bool has_exponential() const { return !is_zero(exp_rate_); }

  int exponent_of(int var) const;
  int degree() const;  // total polynomial degree; the exponential factor does not count
  Parity parity(const Algebra& alg) const;
  int fibre_degree(const Algebra& alg) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_ && cmp(a.exp_rate_, b.exp_rate_) == 0;
  }
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  Rational exp_rate_ = 0;
};

/// Supercommutative product of two canonical monomials. Returns the merged
/// monomial and the Koszul sign of the reordering, or nullopt when an odd
/// variable squares to zero.
std::optional<std::pair<Monomial, int>> mul(const Monomial& a, const Monomial& b,
                                            const Algebra& alg);

/// Left partial derivative of a monomial: appends (monomial, multiplier)
/// contributions to `out`. On the line base variable this includes the
/// exponential rate term alongside the polynomial power rule.
void derivative_terms(const Monomial& m, int var, const Algebra& alg,
                      std::vector<std::pair<Monomial, Rational>>& out);

}  // namespace oddjacobi
