#pragma once

#include <stdexcept>
#include <string>

namespace sia {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of different dimensions were combined.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A precondition on the input value does not hold (e.g. a row that is not
// stochastic, a pattern with an empty row where one is required).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured size or budget guard refused the request.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed input document (JSON, DIMACS).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sia
