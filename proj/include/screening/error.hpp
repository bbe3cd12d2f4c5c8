#pragma once

#include <stdexcept>
#include <string>

namespace screening {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation (e.g. tau outside
// (-x_u, x_q), a score outside [0, 1], an empty population).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The world description violates one of its invariants.
class InvalidModelError : public Error {
 public:
  using Error::Error;
};

// A root finder, quadrature or Monte Carlo resolution step failed.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace screening
