#include "oddjacobi/superpoly.hpp"

#include <utility>

namespace oddjacobi {

SuperPoly SuperPoly::constant(AlgebraPtr alg, const Rational& c) {
  SuperPoly p(std::move(alg));
  if (!oddjacobi::is_zero(c)) p.terms_.emplace(Monomial::unit(), c);
  return p;
}

SuperPoly SuperPoly::variable(AlgebraPtr alg, int var_index) {
  if (var_index < 0 || var_index >= alg->size())
    throw Error("variable index out of range");
  SuperPoly p(std::move(alg));
  p.terms_.emplace(Monomial({Factor{var_index, 1}}, Rational(0)), Rational(1));
  return p;
}

SuperPoly SuperPoly::exponential(AlgebraPtr alg, const Rational& rate) {
  if (!alg->allows_exponentials())
    throw Error("exponential factors need the line extension");
  SuperPoly p(std::move(alg));
  p.terms_.emplace(Monomial({}, rate), Rational(1));
  return p;
}

SuperPoly SuperPoly::from_monomial(AlgebraPtr alg, Monomial m, const Rational& coeff) {
  if (m.has_exponential() && !alg->allows_exponentials())
    throw Error("exponential factors need the line extension");
  SuperPoly p(std::move(alg));
  if (!oddjacobi::is_zero(coeff)) p.terms_.emplace(std::move(m), coeff);
  return p;
}

void SuperPoly::add_term(const Monomial& m, const Rational& c) {
  if (oddjacobi::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (oddjacobi::is_zero(it->second)) terms_.erase(it);
  }
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly out(alg_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& rhs) {
  require_same_algebra(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& rhs) {
  require_same_algebra(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SuperPoly operator*(const SuperPoly& lhs, const SuperPoly& rhs) {
  lhs.require_same_algebra(rhs);
  SuperPoly out(lhs.alg_);
  const Algebra& alg = *lhs.alg_;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      auto prod = mul(ma, mb, alg);
      if (!prod) continue;  // an odd generator squared to zero
      Rational c = ca * cb;
      if (prod->second < 0) c = -c;
      out.add_term(prod->first, c);
    }
  }
  return out;
}

SuperPoly operator*(const Rational& c, const SuperPoly& p) {
  SuperPoly out(p.alg_);
  if (is_zero(c)) return out;
  for (const auto& [m, coeff] : p.terms_) out.terms_.emplace(m, c * coeff);
  return out;
}

bool operator==(const SuperPoly& a, const SuperPoly& b) {
  if (!a.alg_->same_universe(*b.alg_)) return false;
  return a.terms_ == b.terms_;
}

SuperPoly SuperPoly::derivative(int var_index) const {
  if (var_index < 0 || var_index >= alg_->size())
    throw Error("variable index out of range");
  SuperPoly out(alg_);
  std::vector<std::pair<Monomial, Rational>> parts;
  for (const auto& [m, c] : terms_) {
    parts.clear();
    derivative_terms(m, var_index, *alg_, parts);
    for (auto& [dm, mult] : parts) out.add_term(dm, c * mult);
  }
  return out;
}

std::optional<Parity> SuperPoly::homogeneous_parity() const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    Parity mp = m.parity(*alg_);
    if (!p) {
      p = mp;
    } else if (*p != mp) {
      return std::nullopt;
    }
  }
  return p ? p : std::optional<Parity>(Parity::even);
}

Parity SuperPoly::parity() const {
  auto p = homogeneous_parity();
  if (!p) throw GradingError("parity", "value has no definite Grassmann parity");
  return *p;
}

std::optional<int> SuperPoly::homogeneous_fibre_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int md = m.fibre_degree(*alg_);
    if (!d) {
      d = md;
    } else if (*d != md) {
      return std::nullopt;
    }
  }
  return d ? d : std::optional<int>(0);
}

SuperPoly::Grading SuperPoly::grading() const {
  auto p = homogeneous_parity();
  if (!p) throw GradingError("parity", "value has no definite Grassmann parity");
  auto d = homogeneous_fibre_degree();
  if (!d) throw GradingError("fibre", "value is not homogeneous in momentum degree");
  return Grading{*p, *d};
}

bool SuperPoly::is_momentum_free() const {
  for (const auto& [m, c] : terms_)
    if (m.fibre_degree(*alg_) != 0) return false;
  return true;
}

bool SuperPoly::is_parity_homogeneous(Parity p) const {
  for (const auto& [m, c] : terms_)
    if (m.parity(*alg_) != p) return false;
  return true;
}

SuperPoly SuperPoly::parity_component(Parity p) const {
  SuperPoly out(alg_);
  for (const auto& [m, c] : terms_)
    if (m.parity(*alg_) == p) out.terms_.emplace(m, c);
  return out;
}

SuperPoly SuperPoly::transferred_to(const AlgebraPtr& target) const {
  if (alg_->same_universe(*target)) {
    SuperPoly out(target);
    out.terms_ = terms_;
    return out;
  }
  if (!alg_->extends_to(*target))
    throw AlgebraMismatchError("target algebra does not extend the source");
  SuperPoly out(target);
  out.terms_ = terms_;  // indices are preserved by the extension
  return out;
}

void SuperPoly::require_same_algebra(const SuperPoly& other) const {
  if (alg_.get() == other.alg_.get()) return;
  if (!alg_->same_universe(*other.alg_))
    throw AlgebraMismatchError("operands live over different variable universes");
}

}  // namespace oddjacobi
