#pragma once

#include <stdexcept>
#include <string>

namespace rabipat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A physical parameter or configuration value violates its invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

// Analytic branch evaluated outside its regime of validity.
class RegimeError : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rabipat
