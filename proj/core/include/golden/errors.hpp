#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DSL text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, int line, int column,
              std::vector<std::string> expected = {});

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

/// Anything that goes wrong while evaluating an expression.
class EvalError : public Error {
 public:
  using Error::Error;
};

class ZeroDivision : public EvalError {
 public:
  using EvalError::EvalError;
};

/// Zero raised to a negative power. The verifier treats this as a skip.
class SingularPower : public EvalError {
 public:
  using EvalError::EvalError;
};

/// A non-integer value reached an index, exponent, binomial or bound.
class NonIntegerIndex : public EvalError {
 public:
  using EvalError::EvalError;
};

class IndexOutOfRange : public EvalError {
 public:
  using EvalError::EvalError;
};

class InvalidSeed : public Error {
 public:
  using Error::Error;
};

}  // namespace golden
