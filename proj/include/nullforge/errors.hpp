#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nullforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error in the expression DSL. `offset` is a byte offset into the
// source string.
struct ParseError : Error {
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse error at offset " + std::to_string(offset) + ": " + what),
        offset(offset) {}
  std::size_t offset;
};

// Evaluation produced a non-finite value (division by zero etc).
struct EvalDomainError : Error {
  using Error::Error;
};

struct SignatureMismatchError : Error {
  using Error::Error;
};

// |det(p2; p2')| fell below the degeneracy threshold.
struct DegenerateWronskianError : Error {
  using Error::Error;
};

struct QuadratureError : Error {
  using Error::Error;
};

// A catalog parameter constraint was violated; `constraint` names the
// violated predicate (e.g. "r != s").
struct ConstraintError : Error {
  ConstraintError(const std::string& constraint)
      : Error("constraint violated: " + constraint), constraint(constraint) {}
  std::string constraint;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace nullforge
