#include "oddjacobi/structures.hpp"

namespace oddjacobi {

namespace {

void require_generator_shape(const PhaseSpace& space, const SuperPoly& s,
                             const char* role) {
  s.require_same_algebra(space.zero());
  if (s.is_zero()) return;
  if (!s.is_parity_homogeneous(Parity::odd))
    throw StructureShapeError(std::string(role) + " must be odd");
  auto d = s.homogeneous_fibre_degree();
  if (!d || *d != 2)
    throw StructureShapeError(std::string(role) +
                              " must be of degree two in the momenta");
}

}  // namespace

SchoutenStructure::SchoutenStructure(PhaseSpace space, SuperPoly s_hat)
    : space_(std::move(space)), s_hat_(std::move(s_hat)) {
  require_generator_shape(space_, s_hat_, "a Schouten generator");
}

HomologicalField::HomologicalField(PhaseSpace space, VectorField field)
    : space_(std::move(space)), field_(std::move(field)), symbol_(field_.symbol()) {
  if (!space_.same_space(field_.space()))
    throw AlgebraMismatchError("field and space disagree");
  if (!symbol_.is_parity_homogeneous(Parity::odd))
    throw StructureShapeError("homological candidate field must be odd");
}

QSStructure::QSStructure(SchoutenStructure schouten, HomologicalField homological)
    : schouten_(std::move(schouten)), homological_(std::move(homological)) {
  if (!schouten_.space().same_space(homological_.space()))
    throw AlgebraMismatchError("generator and field live on different spaces");
}

OddJacobiStructure::OddJacobiStructure(PhaseSpace space, SuperPoly s,
                                       HomologicalField homological)
    : space_(std::move(space)), s_(std::move(s)), homological_(std::move(homological)) {
  require_generator_shape(space_, s_, "an almost-Schouten generator");
  if (!space_.same_space(homological_.space()))
    throw AlgebraMismatchError("generator and field live on different spaces");
}

ExactQSStructure::ExactQSStructure(QSStructure qs, VectorField homothety)
    : qs_(std::move(qs)),
      homothety_(std::move(homothety)),
      homothety_symbol_(homothety_.symbol()) {
  if (!qs_.space().same_space(homothety_.space()))
    throw AlgebraMismatchError("homothety field lives on a different space");
  if (!homothety_symbol_.is_parity_homogeneous(Parity::even))
    throw StructureShapeError("homothety field must be even");
}

namespace {

void require_base_function(const SuperPoly& f) {
  if (!f.is_momentum_free())
    throw Error("derived brackets act on momentum-free functions only");
}

// (-1)^{f+1} {{gen, f}, g} summed over the parity components of f.
SuperPoly double_bracket(const SuperPoly& gen, const SuperPoly& f, const SuperPoly& g) {
  SuperPoly out = SuperPoly::zero(f.algebra());
  for (Parity fp : {Parity::even, Parity::odd}) {
    SuperPoly fc = f.parity_component(fp);
    if (fc.is_zero()) continue;
    SuperPoly piece = canonical_poisson(canonical_poisson(gen, fc), g);
    if (!is_odd(fp)) piece = -piece;  // (-1)^{f+1}
    out += piece;
  }
  return out;
}

}  // namespace

SuperPoly schouten_bracket(const SchoutenStructure& st, const SuperPoly& f,
                           const SuperPoly& g) {
  require_base_function(f);
  require_base_function(g);
  f.require_same_algebra(st.space().zero());
  g.require_same_algebra(st.space().zero());
  return double_bracket(st.s_hat(), f, g);
}

SuperPoly odd_jacobi_bracket(const OddJacobiStructure& st, const SuperPoly& f,
                             const SuperPoly& g) {
  require_base_function(f);
  require_base_function(g);
  f.require_same_algebra(st.space().zero());
  g.require_same_algebra(st.space().zero());
  SuperPoly out = double_bracket(st.s(), f, g);
  const SuperPoly& q = st.q_symbol();
  if (q.is_zero()) return out;
  for (Parity fp : {Parity::even, Parity::odd}) {
    SuperPoly fc = f.parity_component(fp);
    if (fc.is_zero()) continue;
    SuperPoly piece = canonical_poisson(q, fc * g);
    if (!is_odd(fp)) piece = -piece;
    out -= piece;  // - (-1)^{f+1} {Q, f g}
  }
  return out;
}

CheckReport check_qs(const QSStructure& st) {
  CheckReport report;
  const SuperPoly& q = st.q_symbol();
  const SuperPoly& s = st.s_hat();
  report.add("homological", canonical_poisson(q, q));
  report.add("invariance", canonical_poisson(q, s));
  report.add("schouten", canonical_poisson(s, s));
  return report;
}

CheckReport check_odd_jacobi(const OddJacobiStructure& st) {
  CheckReport report;
  const SuperPoly& q = st.q_symbol();
  const SuperPoly& s = st.s();
  report.add("homological", canonical_poisson(q, q));
  report.add("invariance", canonical_poisson(q, s));
  report.add("compatibility", canonical_poisson(s, s) + Rational(2) * (q * s));
  return report;
}

CheckReport check_exact_qs(const ExactQSStructure& st) {
  CheckReport report = check_qs(st.qs());
  const SuperPoly& e = st.homothety_symbol();
  const SuperPoly& s = st.qs().s_hat();
  const SuperPoly& q = st.qs().q_symbol();
  report.add("homothety-schouten", canonical_poisson(e, s) + s);
  report.add("homothety-homological", canonical_poisson(e, q) + q);
  report.add("exactness-schouten", s - canonical_poisson(s, e));
  report.add("exactness-homological", q - canonical_poisson(q, e));
  return report;
}

}  // namespace oddjacobi
