#pragma once

#include <cstdint>

#include "heis/errors.hpp"

namespace heis {

// Overflow-checked int64 helpers. All group arithmetic goes through these.

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

// a*b - c*d, the 2x2 determinant used all over the hull code.
inline int64_t checked_cross(int64_t a, int64_t b, int64_t c, int64_t d) {
  return checked_sub(checked_mul(a, b), checked_mul(c, d));
}

inline int64_t checked_abs(int64_t a) {
  return a < 0 ? checked_neg(a) : a;
}

}  // namespace heis
