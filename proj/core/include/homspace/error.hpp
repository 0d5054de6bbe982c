#pragma once

#include <stdexcept>
#include <string>

namespace homspace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something out of range: bad dimension, unknown id, degenerate form.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A structural property the construction relies on does not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Rank or spectrum could not be decided at the working precision.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace homspace
