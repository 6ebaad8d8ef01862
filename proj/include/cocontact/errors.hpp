#pragma once

#include <stdexcept>
#include <string>

namespace cocontact {

/// Coordinate-count mismatch between a field and the data handed to it.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite value met while evaluating a field or propagating derivatives.
class NumericDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression text could not be parsed; pos is a 0-based offset into the text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_ = 0;
};

/// A pointwise structure requirement failed (rank condition, Reeb solve).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fiber Hessian singular or ill-conditioned where regularity is required.
class RegularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Newton inversion failed to reach its residual target.
class InversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Config file parse or validation failure; line/col are 1-based, 0 = unknown.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, int line = 0, int col = 0)
      : std::runtime_error(what), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_ = 0;
  int col_ = 0;
};

/// Time integration could not start or proceed (step constraint, blow-up).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cocontact
