#pragma once

#include <stdexcept>
#include <string>

namespace onelap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (bad shape, negative field...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown inside the solver (non-finite energy etc).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace onelap
