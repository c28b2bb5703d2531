#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <oddjacobi/axioms.hpp>
#include <oddjacobi/phase_space.hpp>
#include <oddjacobi/text.hpp>

#include "fixtures.hpp"

using namespace oddjacobi;

namespace {

std::string str(const SuperPoly& f) { return print_expression(f); }

}  // namespace

TEST_CASE("rational coefficient arithmetic is exact") {
  PhaseSpace sp = fixtures::r11();
  SuperPoly x = sp.coordinate("x");
  CHECK(make_rational(1, 3) * x + make_rational(2, 3) * x == x);
  CHECK((x - x).is_zero());
  CHECK((x - x).term_count() == 0);
  CHECK(make_rational(2, 4) * sp.one() == sp.constant(make_rational(1, 2)));
  // 1/3 has no finite binary expansion; summing three copies must close.
  SuperPoly third = make_rational(1, 3) * x;
  CHECK(third + third + third == x);
  CHECK(str(sp.constant(make_rational(-7, 2))) == "-7/2");
}

TEST_CASE("odd generators square to zero and anticommute") {
  PhaseSpace sp = fixtures::r22();
  SuperPoly xi = sp.coordinate("xi");
  SuperPoly eta = sp.coordinate("eta");
  SuperPoly x = sp.coordinate("x");

  CHECK((xi * xi).is_zero());
  CHECK(xi * eta == -(eta * xi));
  CHECK(((xi + eta) * (xi + eta)).is_zero());
  CHECK(x * xi == xi * x);
  // Mixed products reorder into the canonical form with the right sign.
  CHECK(eta * x * xi == -(x * xi * eta));
}

TEST_CASE("squares of arbitrary odd polynomials vanish") {
  PhaseSpace sp = fixtures::r22();
  SampleSpec spec;
  spec.seed = 11;
  PolySampler sampler(sp.algebra(), spec, false);
  for (int i = 0; i < 25; ++i) {
    SuperPoly f = sampler.sample(Parity::odd);
    CAPTURE(str(f));
    CHECK((f * f).is_zero());
  }
}

TEST_CASE("multiplication is associative, distributive and supercommutative") {
  PhaseSpace sp = fixtures::r22();
  SampleSpec spec;
  spec.seed = 5;
  PolySampler sampler(sp.algebra(), spec, false);
  for (int i = 0; i < 20; ++i) {
    Parity pf = sampler.sample_parity();
    Parity pg = sampler.sample_parity();
    SuperPoly f = sampler.sample(pf);
    SuperPoly g = sampler.sample(pg);
    SuperPoly h = sampler.sample(sampler.sample_parity());
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == Rational(koszul_sign(pf, pg)) * (g * f));
  }
}

TEST_CASE("left derivatives of concrete values") {
  PhaseSpace sp = fixtures::r22();
  const Algebra& alg = *sp.algebra();
  SuperPoly x = sp.coordinate("x");
  SuperPoly xi = sp.coordinate("xi");
  SuperPoly eta = sp.coordinate("eta");
  SuperPoly px = sp.momentum("x");

  const int ix = *alg.find_base("x");
  const int ixi = *alg.find_base("xi");
  const int ieta = *alg.find_base("eta");
  const int ipx = *alg.find_momentum("x");

  CHECK((x * x * x).derivative(ix) == Rational(3) * x * x);
  CHECK((xi * eta).derivative(ixi) == eta);
  // Differentiating by eta walks past the odd factor xi first.
  CHECK((xi * eta).derivative(ieta) == -xi);
  CHECK((x * px).derivative(ipx) == x);
  CHECK(x.derivative(ixi).is_zero());
  CHECK(sp.one().derivative(ix).is_zero());
}

TEST_CASE("derivatives satisfy the graded Leibniz rule") {
  PhaseSpace sp = fixtures::r22();
  SampleSpec spec;
  spec.seed = 23;
  PolySampler sampler(sp.algebra(), spec, false);
  for (int i = 0; i < 15; ++i) {
    Parity pf = sampler.sample_parity();
    SuperPoly f = sampler.sample(pf);
    SuperPoly g = sampler.sample(sampler.sample_parity());
    for (const Variable& v : sp.algebra()->vars()) {
      int sign = koszul_sign(v.parity, pf);
      SuperPoly lhs = (f * g).derivative(v.index);
      SuperPoly rhs = f.derivative(v.index) * g +
                      Rational(sign) * (f * g.derivative(v.index));
      CAPTURE(v.name);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("exponential factors multiply by adding rates") {
  PhaseSpace sp = fixtures::r11().extended_with_line("t");
  SuperPoly e1 = sp.exponential(1);
  SuperPoly em1 = sp.exponential(-1);
  CHECK(e1 * em1 == sp.one());
  CHECK(sp.exponential(2) * sp.exponential(3) == sp.exponential(5));
  CHECK(sp.exponential(0) == sp.one());
  CHECK(sp.exponential(make_rational(1, 2)) * sp.exponential(make_rational(1, 2)) ==
        sp.exponential(1));

  SuperPoly t = sp.line_coordinate();
  const int it = sp.algebra()->line_base_index();
  CHECK(sp.exponential(3).derivative(it) == Rational(3) * sp.exponential(3));
  // Product rule across the polynomial and exponential parts of one factor.
  CHECK((sp.exponential(2) * t).derivative(it) ==
        sp.exponential(2) + Rational(2) * sp.exponential(2) * t);
  // The exponential contributes nothing to the polynomial gradings.
  CHECK(sp.exponential(5).grading().fibre_degree == 0);
  CHECK(sp.exponential(5).grading().parity == Parity::even);
}

TEST_CASE("exponentials require the line extension") {
  PhaseSpace sp = fixtures::r11();
  CHECK_THROWS_AS(sp.exponential(1), Error);
  CHECK_THROWS_AS(sp.line_coordinate(), Error);
  CHECK_THROWS_AS(sp.line_momentum(), Error);
  PhaseSpace ext = sp.extended_with_line("t");
  CHECK_THROWS_AS(ext.extended_with_line("s"), Error);
}

TEST_CASE("gradings and homogeneity") {
  PhaseSpace sp = fixtures::r22();
  SuperPoly x = sp.coordinate("x");
  SuperPoly xi = sp.coordinate("xi");
  SuperPoly px = sp.momentum("x");
  SuperPoly pxi = sp.momentum("xi");

  CHECK(x.parity() == Parity::even);
  CHECK(xi.parity() == Parity::odd);
  CHECK(pxi.parity() == Parity::odd);
  CHECK((xi * px).parity() == Parity::odd);
  CHECK(sp.zero().parity() == Parity::even);
  CHECK(sp.zero().grading().fibre_degree == 0);

  CHECK((pxi * px).grading().parity == Parity::odd);
  CHECK((pxi * px).grading().fibre_degree == 2);

  CHECK_THROWS_AS((x + xi).parity(), GradingError);
  try {
    (x + xi).parity();
  } catch (const GradingError& e) {
    CHECK(e.which() == "parity");
  }
  try {
    (x + px).grading();
  } catch (const GradingError& e) {
    CHECK(e.which() == "fibre");
  }
  CHECK(!(x + xi).homogeneous_parity().has_value());
  CHECK(!(x + px).homogeneous_fibre_degree().has_value());
  CHECK((x + x * x).homogeneous_parity() == Parity::even);
}

TEST_CASE("parity components split and recombine") {
  PhaseSpace sp = fixtures::r22();
  SuperPoly f = sp.coordinate("x") + sp.coordinate("xi") +
                sp.coordinate("y") * sp.coordinate("eta") + sp.one();
  SuperPoly even = f.parity_component(Parity::even);
  SuperPoly odd = f.parity_component(Parity::odd);
  CHECK(even + odd == f);
  CHECK(even.is_parity_homogeneous(Parity::even));
  CHECK(odd.is_parity_homogeneous(Parity::odd));
  // Zero is homogeneous of both parities.
  CHECK(sp.zero().is_parity_homogeneous(Parity::even));
  CHECK(sp.zero().is_parity_homogeneous(Parity::odd));
}

TEST_CASE("momentum freedom") {
  PhaseSpace sp = fixtures::r22();
  CHECK((sp.coordinate("x") * sp.coordinate("xi")).is_momentum_free());
  CHECK(!(sp.momentum("x")).is_momentum_free());
  CHECK(sp.zero().is_momentum_free());
  PhaseSpace ext = fixtures::r11().extended_with_line("t");
  CHECK(!ext.line_momentum().is_momentum_free());
  CHECK((ext.exponential(1) * ext.line_coordinate()).is_momentum_free());
}

TEST_CASE("values from different universes do not mix") {
  PhaseSpace a = fixtures::r11();
  PhaseSpace b = fixtures::r22();
  CHECK_THROWS_AS(a.coordinate("x") + b.coordinate("x"), AlgebraMismatchError);
  CHECK_THROWS_AS(a.coordinate("x") * b.coordinate("y"), AlgebraMismatchError);
  // Equality is structural over one universe; across universes it is false.
  CHECK_FALSE(a.coordinate("x") == b.coordinate("x"));
}

TEST_CASE("transfer into the line extension preserves values") {
  PhaseSpace sp = fixtures::r11();
  PhaseSpace ext = sp.extended_with_line("t");
  SuperPoly f = sp.coordinate("x") * sp.momentum("xi") + sp.constant(3);
  SuperPoly lifted = f.transferred_to(ext.algebra());
  CHECK(str(lifted) == str(f));
  CHECK(lifted + ext.line_coordinate() ==
        ext.coordinate("x") * ext.momentum("xi") + ext.constant(3) +
            ext.coordinate("t"));
  // Transfer to an unrelated universe is refused.
  CHECK_THROWS_AS(f.transferred_to(fixtures::r22().algebra()),
                  AlgebraMismatchError);
}
