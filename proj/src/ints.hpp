// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_INTS_HPP
#define PARIKH_INTS_HPP

#include <cstdint>

#include "errors.hpp"

namespace parikh {

// Counter values, matrix entries and solver coefficients. All arithmetic on
// model data goes through the checked helpers below so an instance that
// outgrows 64 bits fails loudly instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace parikh

#endif
