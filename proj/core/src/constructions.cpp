#include "oddjacobi/constructions.hpp"

namespace oddjacobi {

namespace {

void require_passing(const CheckReport& report, const char* what) {
  if (!report.all_passed()) throw StructureConditionError(what, report);
}

}  // namespace

OddJacobiStructure pencil(const ExactQSStructure& ex, const PencilParams& params) {
  require_passing(check_exact_qs(ex), "input does not satisfy the exact QS conditions");
  const SuperPoly s =
      params.a * ex.qs().s_hat() +
      params.b * (ex.homothety_symbol() * ex.qs().q_symbol());
  HomologicalField q(ex.space(), ex.qs().homological().field().scaled(params.b));
  OddJacobiStructure out(ex.space(), s, std::move(q));
  require_passing(check_odd_jacobi(out),
                  "constructed structure fails the odd Jacobi conditions");
  return out;
}

OddJacobiStructure associate(const ExactQSStructure& ex) {
  OddJacobiStructure out = pencil(ex, PencilParams{1, 1});
  require_passing(associate_identities(ex),
                  "bracket expansions behind the construction do not close");
  return out;
}

CheckReport associate_identities(const ExactQSStructure& ex) {
  const SuperPoly& sh = ex.qs().s_hat();
  const SuperPoly& q = ex.qs().q_symbol();
  const SuperPoly& e = ex.homothety_symbol();
  const SuperPoly s = sh + e * q;
  const Rational two(2);

  CheckReport report;
  const SuperPoly ss = canonical_poisson(s, s);
  report.add("self-bracket-expansion",
             ss - (canonical_poisson(sh, sh) +
                   two * (canonical_poisson(sh, e) * q) +
                   two * (e * canonical_poisson(sh, q)) -
                   canonical_poisson(e, e) * (q * q) -
                   two * (e * canonical_poisson(e, q) * q) +
                   e * e * canonical_poisson(q, q)));
  report.add("self-bracket-reduction",
             ss - two * (q * (canonical_poisson(e, sh) + e * canonical_poisson(e, q))));
  report.add("self-bracket-value", ss + two * (q * (sh + e * q)));

  const SuperPoly qs = canonical_poisson(q, s);
  report.add("homological-bracket-expansion",
             qs - (canonical_poisson(q, sh) + canonical_poisson(q, e) * q +
                   e * canonical_poisson(q, q)));
  report.add("homological-bracket-value", qs);
  return report;
}

SchoutenStructure schoutenise(const OddJacobiStructure& oj, const std::string& line_name) {
  require_passing(check_odd_jacobi(oj),
                  "input does not satisfy the odd Jacobi conditions");
  PhaseSpace ext = oj.space().extended_with_line(line_name);
  const AlgebraPtr& alg = ext.algebra();
  const SuperPoly s = oj.s().transferred_to(alg);
  const SuperPoly q = oj.q_symbol().transferred_to(alg);
  const SuperPoly shat = ext.exponential(-1) * (s - q * ext.line_momentum());
  SchoutenStructure out(ext, shat);
  CheckReport closure;
  closure.add("schouten", canonical_poisson(out.s_hat(), out.s_hat()));
  require_passing(closure, "constructed generator fails the Schouten condition");
  return out;
}

}  // namespace oddjacobi
