#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace omegaforge {

// GMP keeps mpq_class canonical after every arithmetic operation:
// positive denominator, coprime parts, zero as 0/1.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Always "p/q", including integers ("3/1").
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p". Throws Error(ParseError) on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace omegaforge
