#pragma once

#include <gmpxx.h>

#include <string>

#include "qtop/error.hpp"

namespace qtop {

// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
// mpq_class keeps that form after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// The two-integer mpq_class constructor does not reduce; this one does.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  Rational q;
  try {
    q = Rational(text, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + text + "'");
  }
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace qtop
