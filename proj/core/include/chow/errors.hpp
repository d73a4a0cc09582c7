#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chow {

/// Root of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that does not follow the expression or descriptor grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Identifier or generator id not present in the active generator table.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// A class has the wrong geometric degree for the requested operation.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Operation applied to a model of the wrong kind, or invalid parameters.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Rewrite rule violating the shape requirements (homogeneity, termination).
class RuleError : public Error {
 public:
  using Error::Error;
};

/// Constraint system that is inconsistent, non-linear or underdetermined.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace chow
