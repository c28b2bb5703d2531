#pragma once

#include <string>

#include "oddjacobi/vector_field.hpp"

namespace oddjacobi {

/// How momentum variables are written: p(name) in expressions, d(name) in
/// vector fields (where they stand for derivation slots).
struct PrintStyle {
  enum class Momentum { p, d };
  Momentum momentum = Momentum::p;
};

/// Canonical text form: terms in the engine's monomial order, exponential
/// factor first within a term, rationals reduced with positive denominator.
/// parse_expression(print_expression(f)) == f.
std::string print_expression(const SuperPoly& f, const PrintStyle& style = {});

/// Grammar (precedence ^ over * over +/-):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ('^' nat)*
///   primary := rational | coord | 'p' '(' coord ')'
///            | 'exp' '(' signed-rational '*' line-coord ')' | '(' expr ')'
/// Odd squares normalize to zero. Errors carry line and column; `line` and
/// `column_offset` position the text within a larger source.
SuperPoly parse_expression(const std::string& text, const PhaseSpace& space,
                           int line = 1, int column_offset = 0);

/// Vector-field form of the grammar: derivation slots are written d(coord)
/// and take the place of momenta; p(...) is not accepted. The result must be
/// linear in the derivation slots.
VectorField parse_vector_field(const std::string& text, const PhaseSpace& space,
                               int line = 1, int column_offset = 0);

std::string print_vector_field(const VectorField& x);

}  // namespace oddjacobi
