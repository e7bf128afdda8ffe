#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qtop/cyclotomic.hpp"

namespace qtop {

// Scalar policies. Every template in the library takes one of these; it owns
// the cyclotomic order (4r for level r) and knows how to make roots of unity,
// rationals and zero tests for its value type.

struct ExactField {
  using value_type = CycNum;
  static constexpr bool exact = true;

  int order = 16;

  value_type zero() const { return CycNum::zero(order); }
  value_type one() const { return CycNum::one(order); }
  value_type from_integer(long v) const { return CycNum::from_integer(order, v); }
  value_type from_rational(const Rational& q) const { return CycNum::from_rational(order, q); }
  value_type root(long k) const { return CycNum::root(order, k); }
  bool is_zero(const value_type& x) const { return x.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type inv(const value_type& x) const { return x.inv(); }
  value_type conj(const value_type& x) const { return x.conj(); }
  std::complex<double> approx(const value_type& x) const { return x.approx(); }
};

struct ApproxField {
  using value_type = std::complex<double>;
  static constexpr bool exact = false;

  int order = 16;
  double tolerance = 1e-9;

  value_type zero() const { return 0.0; }
  value_type one() const { return 1.0; }
  value_type from_integer(long v) const { return static_cast<double>(v); }
  value_type from_rational(const Rational& q) const { return q.get_d(); }
  value_type root(long k) const {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(k % order) / order;
    return {std::cos(ang), std::sin(ang)};
  }
  bool is_zero(const value_type& x) const { return std::abs(x) <= tolerance; }
  bool equal(const value_type& a, const value_type& b) const {
    return std::abs(a - b) <= tolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
  }
  value_type inv(const value_type& x) const {
    if (std::abs(x) == 0.0) throw DomainError("division by zero");
    return 1.0 / x;
  }
  value_type conj(const value_type& x) const { return std::conj(x); }
  std::complex<double> approx(const value_type& x) const { return x; }
};

template <class F>
typename F::value_type power(const F& field, const typename F::value_type& x, long e) {
  if (e < 0) return power(field, field.inv(x), -e);
  auto result = field.one();
  auto base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace qtop
