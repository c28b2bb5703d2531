#pragma once

#include <gmpxx.h>

#include <string>

namespace oddjacobi {

/// Exact rational coefficients. No floating point anywhere in the engine.
using Rational = mpq_class;

/// num/den with canonicalization (gcd reduced, positive denominator).
inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical printing: "a" or "a/b" with b > 0 and gcd(a,b) = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace oddjacobi
