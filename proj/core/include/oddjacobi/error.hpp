#pragma once

#include <stdexcept>
#include <string>

namespace oddjacobi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different variable universes.
class AlgebraMismatchError : public Error {
 public:
  using Error::Error;
};

/// A grading query on an inhomogeneous value; `which` names the failing
/// grading ("parity" or "fibre").
class GradingError : public Error {
 public:
  GradingError(std::string which, const std::string& what)
      : Error(what), which_(std::move(which)) {}
  const std::string& which() const { return which_; }

 private:
  std::string which_;
};

/// Non-invertible or parity-mixing linear coordinate change.
class SingularChangeError : public Error {
 public:
  using Error::Error;
};

/// Structure data of the wrong shape (parity, fibre degree, component kind).
class StructureShapeError : public Error {
 public:
  using Error::Error;
};

/// Expression or structure-file syntax error with source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

}  // namespace oddjacobi
