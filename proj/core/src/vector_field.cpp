#include "oddjacobi/vector_field.hpp"

#include "oddjacobi/error.hpp"

namespace oddjacobi {

namespace {

int slot_count(const PhaseSpace& space) {
  return space.algebra()->num_coordinates() + (space.has_line() ? 1 : 0);
}

int slot_var(const PhaseSpace& space, int slot) {
  const AlgebraPtr& alg = space.algebra();
  return slot < alg->num_coordinates() ? slot : alg->line_base_index();
}

}  // namespace

VectorField::VectorField(PhaseSpace space, Parity parity,
                         std::vector<SuperPoly> components)
    : space_(std::move(space)), parity_(parity), components_(std::move(components)) {
  const int slots = slot_count(space_);
  if (static_cast<int>(components_.size()) != slots)
    throw StructureShapeError("vector field needs one component per coordinate");
  for (int i = 0; i < slots; ++i) {
    const SuperPoly& c = components_[static_cast<size_t>(i)];
    c.require_same_algebra(space_.zero());
    if (!c.is_momentum_free())
      throw StructureShapeError("vector field components must be momentum-free");
    const Parity want = parity_ + space_.algebra()->var(slot_var(space_, i)).parity;
    if (!c.is_parity_homogeneous(want))
      throw StructureShapeError("vector field component has the wrong parity");
  }
}

VectorField VectorField::zero(PhaseSpace space, Parity parity) {
  std::vector<SuperPoly> comps(static_cast<size_t>(slot_count(space)),
                               space.zero());
  return VectorField(std::move(space), parity, std::move(comps));
}

VectorField VectorField::from_symbol(const PhaseSpace& space, const SuperPoly& symbol) {
  symbol.require_same_algebra(space.zero());
  auto parity = symbol.homogeneous_parity();
  if (!parity)
    throw StructureShapeError("vector field symbol must have definite parity");
  const AlgebraPtr& alg = space.algebra();
  std::vector<SuperPoly> comps(static_cast<size_t>(slot_count(space)), space.zero());
  for (const auto& [m, c] : symbol.terms()) {
    if (m.fibre_degree(*alg) != 1)
      throw StructureShapeError("vector field symbol must be linear in the momenta");
    int momentum_var = -1;
    std::vector<Factor> rest;
    rest.reserve(m.factors().size());
    for (const Factor& f : m.factors()) {
      if (is_fibre(alg->var(f.var).kind))
        momentum_var = f.var;
      else
        rest.push_back(f);
    }
    // Every factor right of the momentum is the (even) line coordinate, so
    // stripping the momentum factor costs no sign.
    const int base = alg->base_of(momentum_var);
    const int slot = alg->var(base).kind == VarKind::line_base
                         ? alg->num_coordinates()
                         : base;
    comps[static_cast<size_t>(slot)] +=
        SuperPoly::from_monomial(alg, Monomial(std::move(rest), m.exp_rate()), c);
  }
  return VectorField(space, *parity, std::move(comps));
}

bool VectorField::is_zero() const {
  for (const SuperPoly& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

SuperPoly VectorField::symbol() const {
  SuperPoly out = space_.zero();
  for (size_t i = 0; i < components_.size(); ++i) {
    const int var = slot_var(space_, static_cast<int>(i));
    out += components_[i] *
           SuperPoly::variable(space_.algebra(), space_.algebra()->momentum_of(var));
  }
  return out;
}

SuperPoly VectorField::apply(const SuperPoly& f) const {
  f.require_same_algebra(space_.zero());
  SuperPoly out = space_.zero();
  for (size_t i = 0; i < components_.size(); ++i)
    out += components_[i] * f.derivative(slot_var(space_, static_cast<int>(i)));
  return out;
}

VectorField VectorField::scaled(const Rational& c) const {
  std::vector<SuperPoly> comps;
  comps.reserve(components_.size());
  for (const SuperPoly& comp : components_) comps.push_back(c * comp);
  return VectorField(space_, parity_, std::move(comps));
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (!a.space_.same_space(b.space_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.parity_ == b.parity_ && a.components_ == b.components_;
}

VectorField commutator(const VectorField& x, const VectorField& y) {
  if (!x.space().same_space(y.space()))
    throw AlgebraMismatchError("vector fields live on different spaces");
  return VectorField::from_symbol(x.space(),
                                  canonical_poisson(x.symbol(), y.symbol()));
}

SuperPoly lie_derivative(const VectorField& x, const SuperPoly& f) {
  return canonical_poisson(x.symbol(), f);
}

}  // namespace oddjacobi
