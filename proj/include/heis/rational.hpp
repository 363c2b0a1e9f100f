#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace heis {

// Exact rationals. GMP keeps values canonical (reduced, positive denominator),
// which is what the "p/q" report serialization relies on.
using Rational = mpq_class;

inline Rational rational(int64_t num, int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// Canonical string form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace heis
