// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_ERRORS_HPP
#define PARIKH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parikh {

// Base class for all library errors; everything thrown on purpose derives
// from this so the C API can map failures to status codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Checked 64-bit arithmetic overflowed; results are exact-or-error.
struct OverflowError : Error {
  using Error::Error;
};

// The minimal-solution search explored more candidate vectors than the
// configured cap; the instance is too large for desk scale.
struct SolverCapExceeded : Error {
  using Error::Error;
};

struct MonoidCapExceeded : Error {
  using Error::Error;
};

// A strongly connected component has more transitions than the configured
// support enumeration limit.
struct SupportEnumerationCapExceeded : Error {
  using Error::Error;
};

struct NotBoundedError : Error {
  using Error::Error;
};

struct SocleViolation : Error {
  using Error::Error;
};

struct ConstraintDeterminismUnverified : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace parikh

#endif
