#include "oddjacobi/phase_space.hpp"

#include "oddjacobi/error.hpp"

namespace oddjacobi {

PhaseSpace PhaseSpace::over(SuperManifold manifold) {
  PhaseSpace s;
  s.alg_ = Algebra::cotangent(manifold.coordinates);
  s.manifold_ = std::move(manifold);
  return s;
}

PhaseSpace PhaseSpace::extended_with_line(const std::string& line_name) const {
  if (has_line()) throw Error("phase space already carries a line factor");
  PhaseSpace s;
  s.manifold_ = manifold_;
  s.alg_ = Algebra::cotangent(manifold_.coordinates, line_name);
  return s;
}

SuperPoly PhaseSpace::coordinate(std::string_view name) const {
  auto idx = alg_->find_base(name);
  if (!idx) throw Error("unknown coordinate '" + std::string(name) + "'");
  return SuperPoly::variable(alg_, *idx);
}

SuperPoly PhaseSpace::momentum(std::string_view coord_name) const {
  auto idx = alg_->find_momentum(coord_name);
  if (!idx) throw Error("no momentum conjugate to '" + std::string(coord_name) + "'");
  return SuperPoly::variable(alg_, *idx);
}

SuperPoly PhaseSpace::line_coordinate() const {
  if (!has_line()) throw Error("phase space has no line factor");
  return SuperPoly::variable(alg_, alg_->line_base_index());
}

SuperPoly PhaseSpace::line_momentum() const {
  if (!has_line()) throw Error("phase space has no line factor");
  return SuperPoly::variable(alg_, alg_->line_momentum_index());
}

SuperPoly canonical_poisson(const SuperPoly& f, const SuperPoly& g) {
  f.require_same_algebra(g);
  const AlgebraPtr& alg = f.algebra();
  SuperPoly out(alg);
  for (Parity fp : {Parity::even, Parity::odd}) {
    SuperPoly fc = f.parity_component(fp);
    if (fc.is_zero()) continue;
    for (const Variable& v : alg->vars()) {
      if (v.kind != VarKind::base && v.kind != VarKind::line_base) continue;
      const int a = v.index;
      const int pa = alg->momentum_of(a);
      // (-1)^{A(f+1)} df/dp_A dg/dx^A - (-1)^{Af} df/dx^A dg/dp_A,
      // all derivatives acting from the left.
      const int s1 = (is_odd(v.parity) && !is_odd(fp)) ? -1 : 1;
      const int s2 = (is_odd(v.parity) && is_odd(fp)) ? -1 : 1;
      SuperPoly t1 = fc.derivative(pa) * g.derivative(a);
      SuperPoly t2 = fc.derivative(a) * g.derivative(pa);
      out += Rational(s1) * t1;
      out -= Rational(s2) * t2;
    }
  }
  return out;
}

namespace {

// Gauss-Jordan inverse over the rationals; nullopt when singular.
std::optional<std::vector<std::vector<Rational>>> invert(
    std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational d = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || is_zero(m[row][col])) continue;
      const Rational f = m[row][col];
      for (size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

LinearChange::LinearChange(PhaseSpace space, std::vector<std::vector<Rational>> matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const AlgebraPtr& alg = space_.algebra();
  const size_t n = static_cast<size_t>(alg->num_coordinates());
  if (matrix_.size() != n)
    throw SingularChangeError("change matrix must be square of the coordinate count");
  for (const auto& row : matrix_)
    if (row.size() != n)
      throw SingularChangeError("change matrix must be square of the coordinate count");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!is_zero(matrix_[i][j]) &&
          alg->var(static_cast<int>(i)).parity != alg->var(static_cast<int>(j)).parity)
        throw SingularChangeError("change matrix mixes coordinate parities");
  auto inv = invert(matrix_);
  if (!inv) throw SingularChangeError("change matrix is not invertible");
  inverse_ = std::move(*inv);

  // Rewriting rules in the new symbols: old coordinate j becomes
  // sum_i inverse[j][i] * x^i, old momentum j becomes sum_i matrix[i][j] * p_i.
  images_.assign(static_cast<size_t>(alg->size()), SuperPoly::zero(alg));
  for (size_t j = 0; j < n; ++j) {
    SuperPoly xj = SuperPoly::zero(alg);
    SuperPoly pj = SuperPoly::zero(alg);
    for (size_t i = 0; i < n; ++i) {
      if (!is_zero(inverse_[j][i]))
        xj += inverse_[j][i] * SuperPoly::variable(alg, static_cast<int>(i));
      if (!is_zero(matrix_[i][j]))
        pj += matrix_[i][j] *
              SuperPoly::variable(alg, alg->momentum_of(static_cast<int>(i)));
    }
    images_[j] = std::move(xj);
    images_[j + n] = std::move(pj);
  }
  if (alg->has_line()) {
    images_[static_cast<size_t>(alg->line_base_index())] =
        SuperPoly::variable(alg, alg->line_base_index());
    images_[static_cast<size_t>(alg->line_momentum_index())] =
        SuperPoly::variable(alg, alg->line_momentum_index());
  }
}

SuperPoly LinearChange::lift(const SuperPoly& f) const {
  const AlgebraPtr& alg = space_.algebra();
  f.require_same_algebra(SuperPoly::zero(alg));
  SuperPoly out = SuperPoly::zero(alg);
  for (const auto& [m, c] : f.terms()) {
    SuperPoly term = SuperPoly::from_monomial(alg, Monomial({}, m.exp_rate()), c);
    for (const Factor& fac : m.factors())
      for (int e = 0; e < fac.exp; ++e)
        term = term * images_[static_cast<size_t>(fac.var)];
    out += term;
  }
  return out;
}

}  // namespace oddjacobi
