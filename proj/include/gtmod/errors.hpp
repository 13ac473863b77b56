#pragma once

#include <stdexcept>
#include <string>

namespace gtmod {

// Argument outside the mathematical domain of an operation (|x| > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Translation evaluated too close to x = +-1, where 1/(1-x^2) is singular.
class EdgeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Iterative routine (root finding, exchange, IRLS) failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sampled value was NaN or infinite.
class NonFiniteError : public std::runtime_error {
 public:
  NonFiniteError(const std::string& what, double x) : std::runtime_error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

// Operation called with a precondition the caller was responsible for.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gtmod
