#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddjacobi/parity.hpp"
#include "oddjacobi/rational.hpp"

namespace oddjacobi {

enum class VarKind : unsigned char { base, momentum, line_base, line_momentum };

/// Fibre variables are the ones counted by the fibre degree.
constexpr bool is_fibre(VarKind k) {
  return k == VarKind::momentum || k == VarKind::line_momentum;
}

/// A named generator of the algebra. `index` is its position in the global
/// total order: base coordinates in declaration order, then momenta in the
/// same order, then the line pair (t, p). For momentum variables `name` is
/// the name of the conjugate coordinate.
struct Variable {
  std::string name;
  Parity parity = Parity::even;
  VarKind kind = VarKind::base;
  int index = 0;
};

/// Immutable variable universe shared by all values of one algebra.
/// Exponential factors exp(r*t) are enabled exactly when the line pair is
/// present; they attach to the line base variable and are always even.
class Algebra {
 public:
  /// Cotangent layout: one momentum per coordinate, equal parities, plus an
  /// optional line pair named `line_name` / p(`line_name`).
  static std::shared_ptr<const Algebra> cotangent(
      const std::vector<std::pair<std::string, Parity>>& coords,
      const std::optional<std::string>& line_name = std::nullopt);

  int size() const { return static_cast<int>(vars_.size()); }
  const Variable& var(int index) const { return vars_[static_cast<size_t>(index)]; }
  const std::vector<Variable>& vars() const { return vars_; }

  /// Number of base coordinates (the line base excluded).
  int num_coordinates() const { return num_coords_; }

  std::optional<int> find_base(std::string_view name) const;
  std::optional<int> find_momentum(std::string_view coord_name) const;

  /// Conjugate pairing. Defined for base/line_base (momentum_of) and
  /// momentum/line_momentum (base_of) variables.
  int momentum_of(int base_index) const;
  int base_of(int momentum_index) const;

  bool has_line() const { return line_base_ >= 0; }
  int line_base_index() const { return line_base_; }
  int line_momentum_index() const { return line_momentum_; }
  bool allows_exponentials() const { return has_line(); }

  /// Structural identity: same names, parities, kinds, in the same order.
  bool same_universe(const Algebra& other) const;

  /// True when `other` consists of this universe's variables followed by a
  /// line pair; variable indices are then preserved under transfer.
  bool extends_to(const Algebra& other) const;

 private:
  Algebra() = default;
  std::vector<Variable> vars_;
  int num_coords_ = 0;
  int line_base_ = -1;
  int line_momentum_ = -1;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace oddjacobi
