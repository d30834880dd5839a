#pragma once

#include <stdexcept>
#include <string>

namespace tropopt {

/// Operand outside the semifield carrier, mixed semifield kinds, or
/// inversion of zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shapes of operands do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a hypothesis of the closed-form result being applied
/// (a vector that must be regular is not, a matrix is not column-regular).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Brute-force grid would exceed the evaluation budget.
class GridGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem file. The message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tropopt
