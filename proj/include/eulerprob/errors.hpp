#pragma once

#include <stdexcept>
#include <string>

namespace eulerprob {

/// A precondition on the arguments of an operation was violated.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations of the same quantity disagreed.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative summation did not reach its tolerance within budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// Floating-point evaluation left the representable range.
class EvaluationRangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

}  // namespace eulerprob
