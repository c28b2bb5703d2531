#pragma once

#include <string>

#include "oddjacobi/structures.hpp"

namespace oddjacobi {

/// Coefficients of the two-parameter family of odd Jacobi structures built
/// from one exact QS structure.
struct PencilParams {
  Rational a = 1;
  Rational b = 1;
};

/// (a*S_hat + b*E*Q, b*Q) as an odd Jacobi structure. Requires the input to
/// pass check_exact_qs and the output to pass check_odd_jacobi; a violation
/// throws StructureConditionError carrying the failing residuals.
OddJacobiStructure pencil(const ExactQSStructure& ex, const PencilParams& params);

/// The canonical associate: pencil with a = b = 1. Additionally re-derives
/// the bracket expansions behind the construction (associate_identities) and
/// fails closed if any residual is nonzero.
OddJacobiStructure associate(const ExactQSStructure& ex);

/// The two bracket computations that justify the associate construction,
/// replicated line by line as exact residuals:
///   self-bracket-expansion   {S,S} minus its six-term expansion
///   self-bracket-reduction   {S,S} - 2*Q*({E,S_hat} + E*{E,Q})
///   self-bracket-value       {S,S} + 2*Q*(S_hat + E*Q)
///   homological-bracket-expansion  {Q,S} minus its three-term expansion
///   homological-bracket-value      {Q,S}
/// with S = S_hat + E*Q formed from the input.
CheckReport associate_identities(const ExactQSStructure& ex);

/// Crosses the base manifold with a line carrying coordinate `line_name` and
/// returns the Schouten structure exp(-t) * (S - Q*p) on the extended space,
/// p being the momentum of the new coordinate. Requires the input to pass
/// check_odd_jacobi and verifies the output's Schouten condition exactly.
SchoutenStructure schoutenise(const OddJacobiStructure& oj,
                              const std::string& line_name = "t");

}  // namespace oddjacobi
