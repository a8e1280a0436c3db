#ifndef FOLDPROD_ERRORS_HPP
#define FOLDPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace foldprod {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or ambient-dimension mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

/// Bad scalar configuration (composite modulus, inverse of zero, ...).
struct FieldError : Error {
  using Error::Error;
};

/// A theorem hypothesis does not hold for the given input
/// (non-generic support, rank deficiency where fullness is required, ...).
struct HypothesisError : Error {
  using Error::Error;
};

/// A truncation bound is too small to certify the requested answer.
struct BoundError : Error {
  using Error::Error;
};

/// Malformed textual input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace foldprod

#endif
