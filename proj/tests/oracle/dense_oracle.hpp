#pragma once

// An independent reference implementation of the graded polynomial algebra
// and the canonical bracket, used to cross-check the engine. Everything here
// is deliberately different from the engine's representation: a polynomial
// is a map from flat variable words (sorted lists with repetition) to
// coefficients, reordering signs come from counting transpositions in a
// stable insertion sort, and derivatives/brackets are recomputed from the
// defining formulas over that representation. No engine arithmetic is used
// anywhere except in the conversion shim at the bottom.

#include <map>
#include <vector>

#include <oddjacobi/parity.hpp>
#include <oddjacobi/rational.hpp>
#include <oddjacobi/superpoly.hpp>

namespace dense {

using oddjacobi::Parity;
using oddjacobi::Rational;

/// Variables 0..2n-1; coordinate A is conjugate to momentum A+n and both
/// share parity[A].
struct Space {
  std::vector<Parity> parity;
  int n = 0;

  static Space phase(const std::vector<Parity>& coordinate_parities) {
    Space s;
    s.n = static_cast<int>(coordinate_parities.size());
    s.parity = coordinate_parities;
    s.parity.insert(s.parity.end(), coordinate_parities.begin(),
                    coordinate_parities.end());
    return s;
  }

  bool odd(int v) const { return is_odd(parity[static_cast<size_t>(v)]); }
};

using Word = std::vector<int>;  // weakly increasing variable indices
using Poly = std::map<Word, Rational>;

bool is_zero(const Poly& p);

/// Canonicalizes an arbitrarily ordered word: sorts it, multiplies the
/// coefficient by the sign of the odd-odd transpositions performed, and
/// drops the term when an odd variable repeats.
Poly monomial(const Space& s, Word word, const Rational& coeff);

Poly add(Poly a, const Poly& b);
Poly sub(Poly a, const Poly& b);
Poly scale(const Rational& c, Poly p);
Poly mul(const Space& s, const Poly& a, const Poly& b);

/// Left partial derivative.
Poly derivative(const Space& s, const Poly& p, int var);

/// The canonical bracket, recomputed densely from its coordinate formula.
Poly poisson(const Space& s, const Poly& f, const Poly& g);

/// Comparison shim: rebuilds the dense value as an engine polynomial by
/// direct monomial construction (no engine products involved).
oddjacobi::SuperPoly to_engine(const Poly& p, const oddjacobi::AlgebraPtr& alg);

/// Every valid word of total degree <= max_degree, in enumeration order.
std::vector<Word> all_words(const Space& s, int max_degree);

}  // namespace dense
