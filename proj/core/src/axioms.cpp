#include "oddjacobi/axioms.hpp"

#include <functional>
#include <optional>

namespace oddjacobi {

PolySampler::PolySampler(AlgebraPtr alg, const SampleSpec& spec, bool momentum_free)
    : alg_(std::move(alg)), spec_(spec), rng_(spec.seed) {
  for (const Variable& v : alg_->vars()) {
    if (momentum_free && is_fibre(v.kind)) continue;
    pool_.push_back(v.index);
  }
}

SuperPoly PolySampler::sample(Parity parity) {
  SuperPoly out = SuperPoly::zero(alg_);
  if (pool_.empty()) return out;
  const int terms = 1 + static_cast<int>(next() % static_cast<std::uint64_t>(
                                             spec_.max_terms > 0 ? spec_.max_terms : 1));
  for (int t = 0; t < terms; ++t) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const int degree =
          static_cast<int>(next() % static_cast<std::uint64_t>(spec_.max_degree + 1));
      Monomial m;
      bool alive = true;
      for (int d = 0; d < degree; ++d) {
        const int var = pool_[static_cast<size_t>(next() % pool_.size())];
        auto prod = mul(m, Monomial({Factor{var, 1}}, Rational(0)), *alg_);
        if (!prod) {
          alive = false;  // an odd variable squared
          break;
        }
        m = std::move(prod->first);
      }
      if (!alive || m.parity(*alg_) != parity) continue;
      const long num = 1 + static_cast<long>(next() % 9);
      const long den = (next() % 4 == 0) ? 2 + static_cast<long>(next() % 2) : 1;
      Rational c = make_rational((next() & 1) ? -num : num, den);
      out += SuperPoly::from_monomial(alg_, std::move(m), c);
      break;
    }
  }
  return out;
}

namespace {

int sgn_pow(int exponent) { return (exponent & 1) ? -1 : 1; }

struct AxiomSuite {
  AlgebraPtr alg;
  std::function<SuperPoly(const SuperPoly&, const SuperPoly&)> bracket;
  int epsilon = 0;  // 0: even bracket, 1: odd bracket
  bool momentum_free_samples = false;
  bool modified_leibniz = false;
  const VectorField* derivation = nullptr;
};

CheckReport run_axiom_suite(const AxiomSuite& suite, const SampleSpec& spec) {
  PolySampler sampler(suite.alg, spec, suite.momentum_free_samples);
  const auto& B = suite.bracket;
  const SuperPoly zero = SuperPoly::zero(suite.alg);
  const SuperPoly one = SuperPoly::constant(suite.alg, 1);
  const int eps = suite.epsilon;

  std::optional<SuperPoly> grading, skew, jacobi, leibniz, derivation;
  for (int i = 0; i < spec.samples; ++i) {
    const Parity pf = sampler.sample_parity();
    const Parity pg = sampler.sample_parity();
    const Parity ph = sampler.sample_parity();
    const SuperPoly f = sampler.sample(pf);
    const SuperPoly g = sampler.sample(pg);
    const SuperPoly h = sampler.sample(ph);
    const int sf = is_odd(pf) ? 1 : 0;
    const int sg = is_odd(pg) ? 1 : 0;
    const int sh = is_odd(ph) ? 1 : 0;

    const SuperPoly bfg = B(f, g);

    if (!grading) {
      const Parity expected = pf + pg + (eps ? Parity::odd : Parity::even);
      SuperPoly r = bfg - bfg.parity_component(expected);
      if (!r.is_zero()) grading = std::move(r);
    }
    if (!skew) {
      SuperPoly r = bfg + Rational(sgn_pow((sf + eps) * (sg + eps))) * B(g, f);
      if (!r.is_zero()) skew = std::move(r);
    }
    if (!jacobi) {
      SuperPoly r =
          Rational(sgn_pow((sf + eps) * (sh + eps))) * B(f, B(g, h)) +
          Rational(sgn_pow((sg + eps) * (sf + eps))) * B(g, B(h, f)) +
          Rational(sgn_pow((sh + eps) * (sg + eps))) * B(h, bfg);
      if (!r.is_zero()) jacobi = std::move(r);
    }
    if (!leibniz) {
      SuperPoly r = B(f, g * h) - bfg * h -
                    Rational(sgn_pow((sf + eps) * sg)) * (g * B(f, h));
      if (suite.modified_leibniz) r += B(f, one) * g * h;
      if (!r.is_zero()) leibniz = std::move(r);
    }
    if (suite.derivation && !derivation) {
      const VectorField& q = *suite.derivation;
      SuperPoly r = q.apply(bfg) - B(q.apply(f), g) -
                    Rational(sgn_pow(sf + 1)) * B(f, q.apply(g));
      if (!r.is_zero()) derivation = std::move(r);
    }
  }

  CheckReport report;
  report.add("grading", grading.value_or(zero));
  report.add("skewsymmetry", skew.value_or(zero));
  report.add("jacobi", jacobi.value_or(zero));
  report.add(suite.modified_leibniz ? "modified-leibniz" : "leibniz",
             leibniz.value_or(zero));
  if (suite.derivation) report.add("derivation", derivation.value_or(zero));
  return report;
}

}  // namespace

CheckReport check_canonical_axioms(const PhaseSpace& space, const SampleSpec& spec) {
  AxiomSuite suite;
  suite.alg = space.algebra();
  suite.bracket = [](const SuperPoly& f, const SuperPoly& g) {
    return canonical_poisson(f, g);
  };
  suite.epsilon = 0;
  return run_axiom_suite(suite, spec);
}

CheckReport check_schouten_axioms(const SchoutenStructure& st, const SampleSpec& spec) {
  AxiomSuite suite;
  suite.alg = st.space().algebra();
  suite.bracket = [&st](const SuperPoly& f, const SuperPoly& g) {
    return schouten_bracket(st, f, g);
  };
  suite.epsilon = 1;
  suite.momentum_free_samples = true;
  return run_axiom_suite(suite, spec);
}

CheckReport check_schouten_axioms(const QSStructure& st, const SampleSpec& spec) {
  AxiomSuite suite;
  suite.alg = st.space().algebra();
  suite.bracket = [&st](const SuperPoly& f, const SuperPoly& g) {
    return schouten_bracket(st.schouten(), f, g);
  };
  suite.epsilon = 1;
  suite.momentum_free_samples = true;
  suite.derivation = &st.homological().field();
  return run_axiom_suite(suite, spec);
}

CheckReport check_jacobi_axioms(const OddJacobiStructure& st, const SampleSpec& spec) {
  AxiomSuite suite;
  suite.alg = st.space().algebra();
  suite.bracket = [&st](const SuperPoly& f, const SuperPoly& g) {
    return odd_jacobi_bracket(st, f, g);
  };
  suite.epsilon = 1;
  suite.momentum_free_samples = true;
  suite.modified_leibniz = true;
  suite.derivation = &st.homological().field();
  return run_axiom_suite(suite, spec);
}

}  // namespace oddjacobi
