#include "oddjacobi/text.hpp"

#include <cctype>

#include "oddjacobi/error.hpp"

namespace oddjacobi {

namespace {

struct Token {
  enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
  Kind kind = Kind::end;
  std::string text;
  int column = 0;  // 1-based position of the first character
};

class Lexer {
 public:
  Lexer(const std::string& text, int line, int column_offset)
      : text_(text), line_(line), offset_(column_offset) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, line_, at.column);
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
    current_.column = offset_ + static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::end;
      current_.text.clear();
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': current_.kind = Token::Kind::plus; break;
      case '-': current_.kind = Token::Kind::minus; break;
      case '*': current_.kind = Token::Kind::star; break;
      case '/': current_.kind = Token::Kind::slash; break;
      case '^': current_.kind = Token::Kind::caret; break;
      case '(': current_.kind = Token::Kind::lparen; break;
      case ')': current_.kind = Token::Kind::rparen; break;
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) {
          size_t end = pos_;
          while (end < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[end])))
            ++end;
          current_.kind = Token::Kind::number;
          current_.text = text_.substr(pos_, end - pos_);
          pos_ = end;
          return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          size_t end = pos_;
          while (end < text_.size() &&
                 (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                  text_[end] == '_'))
            ++end;
          current_.kind = Token::Kind::ident;
          current_.text = text_.substr(pos_, end - pos_);
          pos_ = end;
          return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_,
                         offset_ + static_cast<int>(pos_) + 1);
    }
    current_.text = c;
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  Token current_;
  int line_ = 1;
  int offset_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, const PhaseSpace& space, bool field_mode,
         int line, int column_offset)
      : lex_(text, line, column_offset), space_(space), field_mode_(field_mode) {}

  SuperPoly parse() {
    SuperPoly value = expr();
    if (lex_.peek().kind != Token::Kind::end)
      lex_.fail("unexpected trailing input", lex_.peek());
    return value;
  }

 private:
  SuperPoly expr() {
    bool negate = false;
    if (lex_.peek().kind == Token::Kind::plus) {
      lex_.take();
    } else if (lex_.peek().kind == Token::Kind::minus) {
      lex_.take();
      negate = true;
    }
    SuperPoly value = term();
    if (negate) value = -value;
    while (lex_.peek().kind == Token::Kind::plus ||
           lex_.peek().kind == Token::Kind::minus) {
      const bool minus = lex_.take().kind == Token::Kind::minus;
      SuperPoly rhs = term();
      if (minus)
        value -= rhs;
      else
        value += rhs;
    }
    return value;
  }

  SuperPoly term() {
    SuperPoly value = factor();
    while (lex_.peek().kind == Token::Kind::star) {
      lex_.take();
      value = value * factor();
    }
    return value;
  }

  SuperPoly factor() {
    SuperPoly value = primary();
    while (lex_.peek().kind == Token::Kind::caret) {
      lex_.take();
      Token t = lex_.peek();
      if (t.kind != Token::Kind::number)
        lex_.fail("exponent must be a natural number", t);
      if (t.text.size() > 4) lex_.fail("exponent too large", t);
      lex_.take();
      long e = std::stol(t.text);
      SuperPoly powed = space_.one();
      for (long i = 0; i < e; ++i) powed = powed * value;
      value = std::move(powed);
    }
    return value;
  }

  SuperPoly primary() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::number:
        return space_.constant(rational_literal());
      case Token::Kind::lparen: {
        lex_.take();
        SuperPoly value = expr();
        expect(Token::Kind::rparen, "expected ')'");
        return value;
      }
      case Token::Kind::ident: {
        lex_.take();
        if (lex_.peek().kind == Token::Kind::lparen &&
            (t.text == "p" || t.text == "d" || t.text == "exp"))
          return call(t);
        auto idx = space_.algebra()->find_base(t.text);
        if (!idx) lex_.fail("unknown coordinate '" + t.text + "'", t);
        return SuperPoly::variable(space_.algebra(), *idx);
      }
      default:
        lex_.fail("expected a value", t);
    }
  }

  SuperPoly call(const Token& head) {
    expect(Token::Kind::lparen, "expected '('");
    if (head.text == "exp") {
      if (!space_.has_line())
        lex_.fail("exponentials need a line coordinate", head);
      bool negate = false;
      if (lex_.peek().kind == Token::Kind::plus) {
        lex_.take();
      } else if (lex_.peek().kind == Token::Kind::minus) {
        lex_.take();
        negate = true;
      }
      if (lex_.peek().kind != Token::Kind::number)
        lex_.fail("expected a rational rate", lex_.peek());
      Rational rate = rational_literal();
      if (negate) rate = -rate;
      expect(Token::Kind::star, "expected '*'");
      Token name = lex_.peek();
      const std::string& line_name =
          space_.algebra()->var(space_.algebra()->line_base_index()).name;
      if (name.kind != Token::Kind::ident || name.text != line_name)
        lex_.fail("exponentials attach to the line coordinate '" + line_name + "'",
                  name);
      lex_.take();
      expect(Token::Kind::rparen, "expected ')'");
      return space_.exponential(rate);
    }
    if (head.text == "d" && !field_mode_)
      lex_.fail("derivation slots d(...) belong to vector fields", head);
    if (head.text == "p" && field_mode_)
      lex_.fail("vector fields use d(...) in place of momenta", head);
    Token name = lex_.peek();
    if (name.kind != Token::Kind::ident)
      lex_.fail("expected a coordinate name", name);
    lex_.take();
    auto idx = space_.algebra()->find_momentum(name.text);
    if (!idx) lex_.fail("unknown coordinate '" + name.text + "'", name);
    expect(Token::Kind::rparen, "expected ')'");
    return SuperPoly::variable(space_.algebra(), *idx);
  }

  Rational rational_literal() {
    Token num = lex_.take();
    if (lex_.peek().kind != Token::Kind::slash) return Rational(num.text, 10);
    lex_.take();
    Token den = lex_.peek();
    if (den.kind != Token::Kind::number)
      lex_.fail("expected a denominator", den);
    lex_.take();
    if (is_zero(Rational(den.text, 10)))
      lex_.fail("zero denominator", den);
    Rational r(num.text + "/" + den.text, 10);
    r.canonicalize();
    return r;
  }

  void expect(Token::Kind kind, const char* message) {
    if (lex_.peek().kind != kind) lex_.fail(message, lex_.peek());
    lex_.take();
  }

  Lexer lex_;
  const PhaseSpace& space_;
  bool field_mode_ = false;
};

std::string variable_text(const Algebra& alg, int var, const PrintStyle& style) {
  const Variable& v = alg.var(var);
  if (!is_fibre(v.kind)) return v.name;
  const char* head = style.momentum == PrintStyle::Momentum::p ? "p(" : "d(";
  return head + v.name + ")";
}

std::string term_text(const Algebra& alg, const Monomial& m, const Rational& coeff,
                      const PrintStyle& style) {
  if (m.is_unit()) return to_string(coeff);
  std::string out;
  if (cmp(coeff, 1) != 0) out = to_string(coeff) + "*";
  if (m.has_exponential()) {
    out += "exp(" + to_string(m.exp_rate()) + "*" +
           alg.var(alg.line_base_index()).name + ")";
    if (!m.factors().empty()) out += "*";
  }
  for (size_t i = 0; i < m.factors().size(); ++i) {
    const Factor& f = m.factors()[i];
    if (i > 0) out += "*";
    out += variable_text(alg, f.var, style);
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

}  // namespace

std::string print_expression(const SuperPoly& f, const PrintStyle& style) {
  if (f.is_zero()) return "0";
  const Algebra& alg = *f.algebra();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_text(alg, m, magnitude, style);
  }
  return out;
}

SuperPoly parse_expression(const std::string& text, const PhaseSpace& space,
                           int line, int column_offset) {
  return Parser(text, space, /*field_mode=*/false, line, column_offset).parse();
}

VectorField parse_vector_field(const std::string& text, const PhaseSpace& space,
                               int line, int column_offset) {
  SuperPoly symbol =
      Parser(text, space, /*field_mode=*/true, line, column_offset).parse();
  return VectorField::from_symbol(space, symbol);
}

std::string print_vector_field(const VectorField& x) {
  return print_expression(x.symbol(), PrintStyle{PrintStyle::Momentum::d});
}

}  // namespace oddjacobi
