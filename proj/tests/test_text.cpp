#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <oddjacobi/structure_file.hpp>
#include <oddjacobi/text.hpp>

#include "fixtures.hpp"

using namespace oddjacobi;

namespace {

std::string str(const SuperPoly& f) { return print_expression(f); }

int error_column(const std::string& text, const PhaseSpace& sp) {
  try {
    parse_expression(text, sp);
  } catch (const ParseError& e) {
    return e.column();
  }
  return -1;
}

}  // namespace

TEST_CASE("printing parsed input and parsing it back is the identity") {
  PhaseSpace sp = fixtures::r22();
  PhaseSpace ext = fixtures::r11().extended_with_line("t");

  const std::vector<std::string> plain = {
      "0",
      "1",
      "-1",
      "7/3",
      "x",
      "-x",
      "x + y",
      "y + x",
      "x - y",
      "2*x^2 - 3/2*y",
      "x*y*x",  // collapses to x^2*y
      "(x + y)^2",
      "(x + y)*(x - y)",
      "xi",
      "xi*eta",
      "eta*xi",
      "xi^2",  // zero
      "xi*eta + eta*xi",
      "x*xi - xi*x",
      "p(x)",
      "p(xi)*p(x)",
      "p(x)*p(xi)",
      "p(eta)*p(xi)",
      "p(xi)*p(eta) + p(eta)*p(xi)",
      "x*p(x) + xi*p(xi)",
      "1/2*x*p(y) - 1/2*y*p(x)",
      "x^3*y^2*p(x)",
      "xi*eta*p(xi)*p(eta)",
      "(x + xi)*(y + eta)",
      "+x",
      "-(x - y)",
      "3*(x + 2*(y + x))",
      "x^0",
      "2^3",  // plain rational arithmetic on constants
  };
  for (const auto& s : plain) {
    CAPTURE(s);
    SuperPoly f = parse_expression(s, sp);
    CHECK(parse_expression(print_expression(f), sp) == f);
  }

  const std::vector<std::string> lined = {
      "exp(1*t)",
      "exp(-1*t)",
      "exp(1/2*t)*x",
      "exp(-2*t)*exp(3*t)",
      "exp(0*t)",
      "exp(2*t)*t^2*p(t)",
      "t*p(t) + xi*p(xi)",
      "exp(-1*t)*p(xi)*p(x) - exp(-1*t)*p(xi)*p(t)",
  };
  for (const auto& s : lined) {
    CAPTURE(s);
    SuperPoly f = parse_expression(s, ext);
    CHECK(parse_expression(print_expression(f), ext) == f);
  }
}

TEST_CASE("canonical prints") {
  PhaseSpace sp = fixtures::r22();
  PhaseSpace ext = fixtures::r11().extended_with_line("t");

  CHECK(str(parse_expression("y + x", sp)) == "x + y");
  CHECK(str(parse_expression("x*y + y + 1 + x", sp)) == "1 + x + x*y + y");
  CHECK(str(parse_expression("(x + y)^2", sp)) == "2*x*y + x^2 + y^2");
  CHECK(str(parse_expression("xi^2", sp)) == "0");
  CHECK(str(parse_expression("eta*xi", sp)) == "-xi*eta");
  CHECK(str(parse_expression("-x + y", sp)) == "-x + y");
  CHECK(str(parse_expression("x - x", sp)) == "0");
  CHECK(str(parse_expression("2/4*x", sp)) == "1/2*x");
  CHECK(str(parse_expression("x*y*x", sp)) == "x^2*y");
  CHECK(str(parse_expression("exp(-2*t)*exp(3*t)", ext)) == "exp(1*t)");
  CHECK(str(parse_expression("exp(0*t)", ext)) == "1");
  CHECK(str(parse_expression("exp(1/2*t)*x*p(t)", ext)) == "exp(1/2*t)*x*p(t)");

  // Koszul reordering happens at parse time.
  CHECK(parse_expression("p(x)*p(xi)", sp) == parse_expression("p(xi)*p(x)", sp));
  CHECK(parse_expression("p(eta)*p(xi)", sp) ==
        -parse_expression("p(xi)*p(eta)", sp));
}

TEST_CASE("parse errors carry exact positions") {
  PhaseSpace sp = fixtures::r22();
  PhaseSpace ext = fixtures::r11().extended_with_line("t");

  CHECK(error_column("p(", sp) == 3);
  CHECK(error_column("z", sp) == 1);
  CHECK(error_column("x + + y", sp) == 5);
  CHECK(error_column("x y", sp) == 3);
  CHECK(error_column("1/0", sp) == 3);
  CHECK(error_column("x^", sp) == 3);
  CHECK(error_column("x^99999", sp) == 3);
  CHECK(error_column("x + @", sp) == 5);
  CHECK(error_column("d(x)", sp) == 1);
  CHECK(error_column("exp(2*t)", sp) == 1);    // no line on this space
  CHECK(error_column("(x + y", sp) == 7);

  try {
    parse_expression("exp(2*x)", ext);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) ==
          "exponentials attach to the line coordinate 't'");
    CHECK(e.column() == 7);
  }

  // Both coordinates of the position are honoured.
  try {
    parse_expression("x +", fixtures::r22(), 7, 10);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 14);
  }
}

TEST_CASE("vector field syntax") {
  PhaseSpace sp = fixtures::r22();

  VectorField q = parse_vector_field("d(xi)", sp);
  CHECK(print_vector_field(q) == "d(xi)");

  VectorField e = parse_vector_field("xi*d(xi) + y*d(y)", sp);
  CHECK(print_vector_field(e) == "y*d(y) + xi*d(xi)");
  CHECK(parse_vector_field(print_vector_field(e), sp) == e);

  CHECK(parse_vector_field("0", sp).is_zero());

  CHECK_THROWS_AS(parse_vector_field("p(x)", sp), ParseError);
  CHECK_THROWS_AS(parse_vector_field("x", sp), StructureShapeError);
  CHECK_THROWS_AS(parse_vector_field("d(xi)*d(x)", sp), StructureShapeError);
  CHECK_THROWS_AS(parse_vector_field("x*d(x) + d(xi)", sp),
                  StructureShapeError);
}

TEST_CASE("structure files parse with positions and validation") {
  StructureFile f = parse_structure_text(
      "# a comment\n"
      "\n"
      "manifold x:even xi:odd\n"
      "structure exact-qs\n"
      "S_hat = p(xi)*p(x)\n"
      "Q = d(xi)\n"
      "E = xi*d(xi)\n");
  CHECK(f.kind == StructureKind::exact_qs);
  CHECK(f.generator.has_value());
  CHECK(f.q.has_value());
  CHECK(f.homothety.has_value());
  CHECK(str(*f.generator) == "p(x)*p(xi)");

  // Kind `none`: just a phase space.
  StructureFile bare = parse_structure_text("manifold x:even xi:odd\n");
  CHECK(bare.kind == StructureKind::none);
  CHECK_THROWS_AS(as_schouten(bare), Error);

  // line < 0 skips the position check (validation that runs at end of file).
  auto fails_at = [](const std::string& text, const std::string& what_prefix,
                     int line) {
    try {
      parse_structure_text(text);
      return false;
    } catch (const ParseError& e) {
      return std::string(e.what()).rfind(what_prefix, 0) == 0 &&
             (line < 0 || e.line() == line);
    }
  };

  CHECK(fails_at("structure qs\n", "no manifold declaration", -1));
  CHECK(fails_at("S_hat = 0\n", "the manifold must be declared first", 1));
  CHECK(fails_at("manifold x:even\nmanifold y:even\n",
                 "duplicate manifold declaration", 2));
  CHECK(fails_at("manifold p:even\n", "'p' is reserved", 1));
  CHECK(fails_at("manifold x:even x:odd\n", "duplicate coordinate name", 1));
  CHECK(fails_at("manifold x:flat\n", "parity must be 'even' or 'odd'", 1));
  CHECK(fails_at("manifold x:even\nstructure schouten\n", "missing S_hat", -1));
  CHECK(fails_at("manifold x:even\nstructure odd-jacobi\nS_hat = 0\nQ = 0\n",
                 "a odd-jacobi structure names its generator S", -1));
  CHECK(fails_at("manifold x:even\nstructure schouten\nS_hat = 0\nQ = 0\n",
                 "unexpected Q field", -1));
  CHECK(fails_at("manifold x:even\nstructure sympl\n",
                 "unknown structure kind 'sympl'", 2));
  CHECK(fails_at("manifold x:even\nbogus directive\n",
                 "unknown directive 'bogus'", 2));
  CHECK(fails_at("manifold x:even\nstructure schouten\nS_hat = 0\nline t\n",
                 "the line declaration must precede structure fields", 4));

  // Errors inside field expressions point into the original line.
  try {
    parse_structure_text("manifold x:even xi:odd\nstructure schouten\n"
                         "S_hat = p(xi)*p(zz)\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 17);  // the zz token, positioned in the raw line
    CHECK(std::string(e.what()) == "unknown coordinate 'zz'");
  }
}

TEST_CASE("formatted structures parse back to themselves") {
  ExactQSStructure ex = fixtures::ex2();

  SchoutenStructure sch(ex.space(), ex.qs().s_hat());
  std::string text = format_structure(sch);
  StructureFile back = parse_structure_text(text);
  CHECK(back.kind == StructureKind::schouten);
  CHECK(as_schouten(back).s_hat() == sch.s_hat());

  OddJacobiStructure oj(ex.space(), ex.qs().s_hat(),
                        ex.qs().homological());
  std::string jt = format_structure(oj);
  StructureFile jback = parse_structure_text(jt);
  CHECK(jback.kind == StructureKind::odd_jacobi);
  CHECK(as_odd_jacobi(jback).s() == oj.s());
  CHECK(as_odd_jacobi(jback).homological().field() ==
        oj.homological().field());
}

TEST_CASE("the bundled example files load") {
  StructureFile ex1 = load_structure_file(fixtures::ex1_path());
  CHECK(ex1.kind == StructureKind::exact_qs);
  CHECK(ex1.space.manifold().coordinates.size() == 2);

  StructureFile ex2 = load_structure_file(fixtures::ex2_path());
  CHECK(ex2.kind == StructureKind::exact_qs);
  CHECK(ex2.space.manifold().coordinates.size() == 4);

  CHECK_THROWS_AS(load_structure_file(fixtures::data_path("missing.oj")),
                  Error);
}
