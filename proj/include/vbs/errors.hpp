#pragma once

#include <stdexcept>
#include <string>

namespace vbs {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated (bad n, empty block, alpha == 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A construction would exceed the configured amplitude or matrix budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// The numerics produced something that a correct oracle never produces:
// non-Hermitian input, a non-converged eigensolver, a negative eigenvalue.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace vbs
