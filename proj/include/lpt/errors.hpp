#pragma once

#include <stdexcept>
#include <string>

namespace lpt {

/// Input that violates a documented precondition (bad potential, malformed
/// config, out-of-range order). The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A broken internal invariant, e.g. a recursion step run before the rows it
/// depends on exist. Never expected for valid inputs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Iterative numerics that ran out of budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpt
