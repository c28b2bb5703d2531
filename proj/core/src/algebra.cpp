#include "oddjacobi/algebra.hpp"

#include <set>

#include "oddjacobi/error.hpp"

namespace oddjacobi {

std::shared_ptr<const Algebra> Algebra::cotangent(
    const std::vector<std::pair<std::string, Parity>>& coords,
    const std::optional<std::string>& line_name) {
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  std::set<std::string> seen;
  const int n = static_cast<int>(coords.size());
  alg->num_coords_ = n;
  alg->vars_.reserve(static_cast<size_t>(2 * n + 2));
  for (int i = 0; i < n; ++i) {
    const auto& [name, parity] = coords[static_cast<size_t>(i)];
    if (name.empty()) throw Error("empty coordinate name");
    if (!seen.insert(name).second)
      throw Error("duplicate coordinate name '" + name + "'");
    alg->vars_.push_back(Variable{name, parity, VarKind::base, i});
  }
  for (int i = 0; i < n; ++i) {
    const auto& [name, parity] = coords[static_cast<size_t>(i)];
    alg->vars_.push_back(Variable{name, parity, VarKind::momentum, n + i});
  }
  if (line_name) {
    if (seen.count(*line_name))
      throw Error("line coordinate '" + *line_name +
                  "' collides with a base coordinate");
    alg->line_base_ = 2 * n;
    alg->line_momentum_ = 2 * n + 1;
    alg->vars_.push_back(
        Variable{*line_name, Parity::even, VarKind::line_base, 2 * n});
    alg->vars_.push_back(
        Variable{*line_name, Parity::even, VarKind::line_momentum, 2 * n + 1});
  }
  return alg;
}

std::optional<int> Algebra::find_base(std::string_view name) const {
  for (const auto& v : vars_) {
    if ((v.kind == VarKind::base || v.kind == VarKind::line_base) && v.name == name)
      return v.index;
  }
  return std::nullopt;
}

std::optional<int> Algebra::find_momentum(std::string_view coord_name) const {
  for (const auto& v : vars_) {
    if ((v.kind == VarKind::momentum || v.kind == VarKind::line_momentum) &&
        v.name == coord_name)
      return v.index;
  }
  return std::nullopt;
}

int Algebra::momentum_of(int base_index) const {
  const Variable& v = var(base_index);
  if (v.kind == VarKind::base) return base_index + num_coords_;
  if (v.kind == VarKind::line_base) return line_momentum_;
  throw Error("momentum_of: not a coordinate variable");
}

int Algebra::base_of(int momentum_index) const {
  const Variable& v = var(momentum_index);
  if (v.kind == VarKind::momentum) return momentum_index - num_coords_;
  if (v.kind == VarKind::line_momentum) return line_base_;
  throw Error("base_of: not a momentum variable");
}

bool Algebra::same_universe(const Algebra& other) const {
  if (this == &other) return true;
  if (vars_.size() != other.vars_.size()) return false;
  for (size_t i = 0; i < vars_.size(); ++i) {
    const Variable& a = vars_[i];
    const Variable& b = other.vars_[i];
    if (a.name != b.name || a.parity != b.parity || a.kind != b.kind) return false;
  }
  return line_base_ == other.line_base_;
}

bool Algebra::extends_to(const Algebra& other) const {
  if (has_line() || !other.has_line()) return false;
  if (other.size() != size() + 2) return false;
  for (size_t i = 0; i < vars_.size(); ++i) {
    const Variable& a = vars_[i];
    const Variable& b = other.vars_[i];
    if (a.name != b.name || a.parity != b.parity || a.kind != b.kind) return false;
  }
  return true;
}

}  // namespace oddjacobi
