#pragma once

#include <cstdint>
#include <random>

#include "oddjacobi/structures.hpp"

namespace oddjacobi {

/// Deterministic sampling plan for the randomized axiom suites. The same
/// spec always produces the same samples, residuals and reports.
struct SampleSpec {
  int samples = 100;
  int max_degree = 3;
  std::uint64_t seed = 0;
  int max_terms = 3;
};

/// Draws parity-homogeneous polynomials with small rational coefficients.
/// Raw engine words are consumed directly (no distribution adapters), so the
/// stream is identical on every platform.
class PolySampler {
 public:
  /// With `momentum_free`, samples involve coordinates only, never momenta.
  PolySampler(AlgebraPtr alg, const SampleSpec& spec, bool momentum_free);

  SuperPoly sample(Parity parity);
  Parity sample_parity() { return (next() & 1) ? Parity::odd : Parity::even; }

 private:
  std::uint64_t next() { return rng_(); }

  AlgebraPtr alg_;
  SampleSpec spec_;
  std::vector<int> pool_;
  std::mt19937_64 rng_;
};

/// Even-bracket axioms (grading, skewsymmetry, Jacobi, Leibniz) for the
/// canonical bracket, on sampled parity-homogeneous triples over the whole
/// phase space. Each report entry holds the first failing residual, or zero.
CheckReport check_canonical_axioms(const PhaseSpace& space, const SampleSpec& spec = {});

/// Odd-bracket axioms for the bracket generated by a Schouten structure, on
/// sampled momentum-free triples.
CheckReport check_schouten_axioms(const SchoutenStructure& st, const SampleSpec& spec = {});

/// As above plus the derivation rule of the homological field over the
/// bracket.
CheckReport check_schouten_axioms(const QSStructure& st, const SampleSpec& spec = {});

/// Odd-bracket axioms for the odd Jacobi bracket: grading, skewsymmetry,
/// Jacobi, the modified Leibniz rule (the defect is the bracket's failure to
/// annihilate the unit), and the derivation rule of the homological field.
CheckReport check_jacobi_axioms(const OddJacobiStructure& st, const SampleSpec& spec = {});

}  // namespace oddjacobi
