#pragma once

#include <stdexcept>
#include <string>

namespace pvc {

/// Malformed instance text. Carries the 1-based line and column of the
/// offending token (column 0 when the error concerns a whole record).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A structurally valid instance that breaks a data-model invariant.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Solver failures: iteration/cut limits, unexpected LP infeasibility.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IterationLimitError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The rounding driver exhausted its restarts without a feasible union.
class InfeasibleAfterRestartsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact search refused because the instance has too many vertices.
class TooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pvc
