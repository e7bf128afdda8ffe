#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "qtop/cyclotomic.hpp"
#include "qtop/error.hpp"
#include "qtop/field.hpp"

namespace qtop {

// Normalization constants of the level-r theory.
//
//   t_rmatrix = e^{-2 pi i / 4r}   (the root used inside the universal R-matrix)
//   t_bridge  = e^{+2 pi i / 4r}   (the root in J_L = t^{3 L.L} sqrt2 I(L); e^{2 pi i/16} at r = 4)
//   b         = sqrt(2/r) sin(pi/r)
//   c         = e^{-6 pi i (r-2) / 8r}
//
// The two t's differ by the sign of the exponent; they are kept apart on purpose
// and every formula names the one it consumes.
struct LevelConstants {
  int level = 4;
  CycNum t_rmatrix;
  CycNum t_bridge;
  CycNum b;
  CycNum c;
  CycNum sqrt2;
};

struct ApproxLevelConstants {
  int level = 4;
  std::complex<double> t_rmatrix, t_bridge, b, c, sqrt2;
};

inline void require_level(int r) {
  if (r < 2) throw DomainError("level must be >= 2, got " + std::to_string(r));
}

/// Exact constants; only realized at r = 4, in Q(zeta_16).
inline LevelConstants constants(int r) {
  require_level(r);
  if (r != 4)
    throw ApproximateOnly("exact constants are only available at level 4 (requested level " + std::to_string(r) +
                          "); use approximate mode");
  LevelConstants k;
  k.level = 4;
  k.t_rmatrix = CycNum::root(16, -1);
  k.t_bridge = CycNum::root(16, 1);
  k.b = CycNum::from_rational(16, Rational(1, 2));
  k.c = CycNum::root(16, -3);
  k.sqrt2 = sqrt2_16();
  return k;
}

inline ApproxLevelConstants constants_approx(int r) {
  require_level(r);
  const double pi = std::numbers::pi;
  ApproxLevelConstants k;
  k.level = r;
  k.t_rmatrix = std::polar(1.0, -2.0 * pi / (4.0 * r));
  k.t_bridge = std::polar(1.0, 2.0 * pi / (4.0 * r));
  k.b = std::complex<double>(std::sqrt(2.0 / r) * std::sin(pi / r), 0.0);
  k.c = std::polar(1.0, -6.0 * pi * (r - 2) / (8.0 * r));
  k.sqrt2 = std::sqrt(2.0);
  return k;
}

// Field-generic accessors for the formulas that are templated on the scalar policy.
inline CycNum constant_b(const ExactField&, int r) { return constants(r).b; }
inline std::complex<double> constant_b(const ApproxField&, int r) { return constants_approx(r).b; }
inline CycNum constant_c(const ExactField&, int r) { return constants(r).c; }
inline std::complex<double> constant_c(const ApproxField&, int r) { return constants_approx(r).c; }

}  // namespace qtop
