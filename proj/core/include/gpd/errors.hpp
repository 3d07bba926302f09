#pragma once

#include <stdexcept>
#include <string>

namespace gpd {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing elements of different fields.
struct FieldMismatchError : Error {
  using Error::Error;
};

// Inversion of the zero element.
struct ZeroDivisionError : Error {
  using Error::Error;
};

// Inversion of a nonzero element that shares a factor with the minimal
// polynomial; only possible when the user supplies a reducible polynomial.
struct NonInvertibleError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

// A projection was requested through an auxiliary line that meets one of the
// endpoints. The message names the offending pair.
struct SkewnessError : Error {
  using Error::Error;
};

// Violated operation precondition (bad index, endpoint mismatch, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// Malformed configuration document.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace gpd
