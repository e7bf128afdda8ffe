#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "qtop/error.hpp"
#include "qtop/field.hpp"
#include "qtop/matrix.hpp"

namespace qtop {

// One tensor factor of a boundary: the irreducible module of dimension
// `color`, or its dual.
struct BoundaryPoint {
  int color = 1;
  bool dual = false;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};
using Signature = std::vector<BoundaryPoint>;

inline std::size_t signature_dimension(const Signature& s) {
  std::size_t d = 1;
  for (const auto& p : s) d *= static_cast<std::size_t>(p.color);
  return d;
}

inline std::string to_string(const Signature& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += "V" + std::to_string(s[i].color) + (s[i].dual ? "*" : "");
  }
  return out + ")";
}

/// Linear map between tensor products of colored modules; rows index the
/// codomain, columns the domain, first tensor factor most significant.
template <class F>
struct Operator {
  Signature domain;
  Signature codomain;
  Matrix<typename F::value_type> matrix;
};

template <class F>
Operator<F> compose(const F& field, const Operator<F>& outer, const Operator<F>& inner) {
  if (outer.domain != inner.codomain)
    throw DomainError("cannot compose " + to_string(outer.domain) + " <- " + to_string(inner.codomain));
  return {inner.domain, outer.codomain, multiply(field, outer.matrix, inner.matrix)};
}

template <class F>
Operator<F> tensor(const F& field, const Operator<F>& a, const Operator<F>& b) {
  Signature dom = a.domain, cod = a.codomain;
  dom.insert(dom.end(), b.domain.begin(), b.domain.end());
  cod.insert(cod.end(), b.codomain.begin(), b.codomain.end());
  return {dom, cod, kron(field, a.matrix, b.matrix)};
}

template <class F>
Operator<F> identity_operator(const F& field, const Signature& s) {
  return {s, s, identity(field, signature_dimension(s))};
}

enum class AlgebraGenerator { X, Y, K };

/// Action of X, Y, K, K^{-1} on V^k (weight basis e_0..e_{k-1}) or on its dual
/// (dual basis). K acts diagonally by zeta^{weight}, zeta = e^{2 pi i / 4r} = e^{h/4}.
template <class F>
struct ModuleAction {
  int color = 1;
  bool dual = false;
  std::vector<long> weights;
  Matrix<typename F::value_type> X, Y, K, Kinv;
};

enum class CupCapKind {
  E,        // V* (x) V -> C,  f (x) x |-> f(x)
  E_check,  // V (x) V* -> C,  x (x) f |-> f(K^2 x)
  N,        // C -> V (x) V*,  1 |-> sum e_i (x) e^i
  N_check,  // C -> V* (x) V,  1 |-> sum e^i (x) K^{-2} e_i
};

/// The finite quantum algebra A at level r: U_h(sl2) at h = 2 pi i / r with
/// X^r = Y^r = 0, K^{4r} = 1, and its irreducible modules V^1 .. V^r.
///
/// Hopf structure: Delta(X) = X (x) K + K^{-1} (x) X, Delta(Y) = Y (x) K + K^{-1} (x) Y,
/// Delta(K) = K (x) K, S(X) = -K X K^{-1}, S(Y) = -K Y K^{-1}, S(K) = K^{-1},
/// eps(X) = eps(Y) = 0, eps(K) = 1. The universal R-matrix is
///   R = 1/4r sum_{n<r, a,b<4r} (q - q^{-1})^n / [n]! t^{ab + (b-a+1)n} X^n K^a (x) Y^n K^b
/// with q = e^{h/2} and t = e^{-2 pi i / 4r}; it is quasi-triangular for this
/// coproduct (checked by the property suite).
template <class F>
class QuantumAlgebra {
 public:
  using value_type = typename F::value_type;

  explicit QuantumAlgebra(int r, F field = F{}) : r_(r), field_(field) {
    if (r < 2) throw DomainError("level must be >= 2, got " + std::to_string(r));
    field_.order = 4 * r;
  }

  int level() const noexcept { return r_; }
  const F& field() const noexcept { return field_; }

  /// zeta^k with zeta = e^{2 pi i / 4r}.
  value_type zeta(long k) const { return field_.root(k); }
  value_type q() const { return zeta(2); }
  value_type t_rmatrix() const { return zeta(-1); }

  /// [n] = (q^n - q^{-n}) / (q - q^{-1}) = sin(pi n / r) / sin(pi / r).
  value_type quantum_integer(long n) const {
    if (n < 0) throw DomainError("quantum integer of a negative argument");
    return (zeta(2 * n) - zeta(-2 * n)) * field_.inv(zeta(2) - zeta(-2));
  }

  value_type quantum_factorial(long n) const {
    auto f = field_.one();
    for (long i = 1; i <= n; ++i) f = f * quantum_integer(i);
    return f;
  }

  void require_color(int k) const {
    if (k < 1 || k > r_)
      throw DomainError("color " + std::to_string(k) + " outside 1.." + std::to_string(r_));
  }

  /// V^k in the weight basis: K e_j = zeta^{k-1-2j} e_j, X e_j = [k-j] e_{j-1},
  /// Y e_j = [j+1] e_{j+1}.
  ModuleAction<F> module(int k, bool dual = false) const {
    require_color(k);
    ModuleAction<F> m;
    m.color = k;
    m.dual = false;
    m.X = zeros(field_, k, k);
    m.Y = zeros(field_, k, k);
    m.K = zeros(field_, k, k);
    m.Kinv = zeros(field_, k, k);
    for (int j = 0; j < k; ++j) {
      const long w = k - 1 - 2 * j;
      m.weights.push_back(w);
      m.K(j, j) = zeta(w);
      m.Kinv(j, j) = zeta(-w);
      if (j > 0) m.X(j - 1, j) = quantum_integer(k - j);
      if (j < k - 1) m.Y(j + 1, j) = quantum_integer(j + 1);
    }
    return dual ? dualize(m) : m;
  }

  /// Dual module: u acts on f by f o S(u), i.e. by the transpose of S(u).
  ModuleAction<F> dualize(const ModuleAction<F>& m) const {
    ModuleAction<F> d;
    d.color = m.color;
    d.dual = !m.dual;
    const auto sx = scale(field_, multiply(field_, multiply(field_, m.K, m.X), m.Kinv), field_.from_integer(-1));
    const auto sy = scale(field_, multiply(field_, multiply(field_, m.K, m.Y), m.Kinv), field_.from_integer(-1));
    d.X = transpose(sx);
    d.Y = transpose(sy);
    d.K = transpose(m.Kinv);
    d.Kinv = transpose(m.K);
    for (long w : m.weights) d.weights.push_back(-w);
    return d;
  }

  const Matrix<value_type>& generator_matrix(AlgebraGenerator u, const ModuleAction<F>& v) const {
    switch (u) {
      case AlgebraGenerator::X: return v.X;
      case AlgebraGenerator::Y: return v.Y;
      default: return v.K;
    }
  }

  /// Delta(u) acting on V (x) W.
  Matrix<value_type> coproduct(AlgebraGenerator u, const ModuleAction<F>& v, const ModuleAction<F>& w) const {
    if (u == AlgebraGenerator::K) return kron(field_, v.K, w.K);
    return add(field_, kron(field_, generator_matrix(u, v), w.K), kron(field_, v.Kinv, generator_matrix(u, w)));
  }

  /// Delta^op(u) = P Delta(u) acting on V (x) W.
  Matrix<value_type> coproduct_op(AlgebraGenerator u, const ModuleAction<F>& v, const ModuleAction<F>& w) const {
    const auto p_vw = flip(v.color, w.color);
    const auto p_wv = flip(w.color, v.color);
    return multiply(field_, multiply(field_, p_wv, coproduct(u, w, v)), p_vw);
  }

  /// Permutation V (x) W -> W (x) V for dim V = dv, dim W = dw.
  Matrix<value_type> flip(int dv, int dw) const {
    auto p = zeros(field_, dv * dw, dv * dw);
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dw; ++j) p(j * dv + i, i * dw + j) = field_.one();
    return p;
  }

  /// Action of the universal R-matrix on V (x) W. The Cartan double sum over
  /// (a, b) is evaluated literally: the exponents of zeta are tallied modulo 4r
  /// and turned into one scalar per (n, weight pair).
  Matrix<value_type> universal_R(const ModuleAction<F>& v, const ModuleAction<F>& w) const {
    const int dv = v.color, dw = w.color;
    const long n4r = 4L * r_;
    auto out = zeros(field_, dv * dw, dv * dw);
    const auto qdiff = zeta(2) - zeta(-2);
    const auto inv4r = field_.from_rational(Rational(1, n4r));
    auto xn = identity(field_, dv);
    auto yn = identity(field_, dw);
    for (int n = 0; n < r_; ++n) {
      if (n > 0) {
        xn = multiply(field_, v.X, xn);
        yn = multiply(field_, w.Y, yn);
      }
      const auto cn = power(field_, qdiff, n) * field_.inv(quantum_factorial(n));
      for (int i = 0; i < dv; ++i)
        for (int j = 0; j < dw; ++j) {
          // column of X^n e_i (x) Y^n f_j
          bool any = false;
          for (int a = 0; a < dv && !any; ++a) any = !field_.is_zero(xn(a, i));
          bool anyy = false;
          for (int b = 0; b < dw && !anyy; ++b) anyy = !field_.is_zero(yn(b, j));
          if (!any || !anyy) continue;
          std::vector<long> tally(n4r, 0);
          for (long a = 0; a < n4r; ++a)
            for (long b = 0; b < n4r; ++b) {
              // t^{ab + (b-a+1)n} = zeta^{-(ab + (b-a+1)n)}; K^a e_i = zeta^{a mu} e_i
              long e = -(a * b + (b - a + 1) * n) + a * v.weights[i] + b * w.weights[j];
              e %= n4r;
              if (e < 0) e += n4r;
              ++tally[e];
            }
          auto s = field_.zero();
          for (long e = 0; e < n4r; ++e)
            if (tally[e]) s += field_.from_integer(tally[e]) * zeta(e);
          if (field_.is_zero(s)) continue;
          s = s * inv4r * cn;
          for (int a = 0; a < dv; ++a) {
            if (field_.is_zero(xn(a, i))) continue;
            for (int b = 0; b < dw; ++b) {
              if (field_.is_zero(yn(b, j))) continue;
              out(a * dw + b, i * dw + j) += s * xn(a, i) * yn(b, j);
            }
          }
        }
    }
    return out;
  }

  /// Flip R-matrix P o R : V (x) W -> W (x) V, cached.
  const Matrix<value_type>& braiding(BoundaryPoint v, BoundaryPoint w) const {
    return cached(v, w, false);
  }
  /// Inverse of the flip R-matrix W (x) V -> V (x) W, i.e. a map V (x) W -> W (x) V.
  const Matrix<value_type>& braiding_inv(BoundaryPoint v, BoundaryPoint w) const {
    return cached(v, w, true);
  }

  Operator<F> braiding_operator(BoundaryPoint v, BoundaryPoint w, bool inverse = false) const {
    return {{v, w}, {w, v}, inverse ? braiding_inv(v, w) : braiding(v, w)};
  }

  /// The four evaluation / coevaluation maps between C and V^k (x) V^k*.
  Operator<F> cupcap(CupCapKind kind, int k) const {
    require_color(k);
    const auto m = module(k);
    const BoundaryPoint plain{k, false}, dual{k, true};
    const auto k2 = multiply(field_, m.K, m.K);
    const auto km2 = multiply(field_, m.Kinv, m.Kinv);
    Operator<F> op;
    switch (kind) {
      case CupCapKind::E:
        op.domain = {dual, plain};
        op.matrix = zeros(field_, 1, k * k);
        for (int i = 0; i < k; ++i) op.matrix(0, i * k + i) = field_.one();
        break;
      case CupCapKind::E_check:
        op.domain = {plain, dual};
        op.matrix = zeros(field_, 1, k * k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) op.matrix(0, i * k + j) = k2(j, i);
        break;
      case CupCapKind::N:
        op.codomain = {plain, dual};
        op.matrix = zeros(field_, k * k, 1);
        for (int i = 0; i < k; ++i) op.matrix(i * k + i, 0) = field_.one();
        break;
      case CupCapKind::N_check:
        op.codomain = {dual, plain};
        op.matrix = zeros(field_, k * k, 1);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) op.matrix(i * k + j, 0) = km2(j, i);
        break;
    }
    return op;
  }

 private:
  const Matrix<value_type>& cached(BoundaryPoint v, BoundaryPoint w, bool inverse) const {
    const auto key = std::make_tuple(v.color, v.dual, w.color, w.dual, inverse);
    {
      std::lock_guard<std::mutex> lock(*mutex_);
      auto it = cache_->find(key);
      if (it != cache_->end()) return it->second;
    }
    Matrix<value_type> m;
    if (!inverse) {
      const auto mv = module(v.color, v.dual), mw = module(w.color, w.dual);
      m = multiply(field_, flip(v.color, w.color), universal_R(mv, mw));
    } else {
      m = inverse_of(braiding(w, v));
    }
    std::lock_guard<std::mutex> lock(*mutex_);
    return cache_->emplace(key, std::move(m)).first->second;
  }

  Matrix<value_type> inverse_of(const Matrix<value_type>& m) const { return qtop::inverse(field_, m); }

  int r_;
  F field_;
  using Key = std::tuple<int, bool, int, bool, bool>;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
  std::shared_ptr<std::map<Key, Matrix<value_type>>> cache_ = std::make_shared<std::map<Key, Matrix<value_type>>>();
};

/// Clebsch-Gordan summands of V^k (x) V^l when k + l <= r + 1: p = |k-l|+1, step 2, up to k+l-1.
inline std::vector<int> clebsch_gordan(int k, int l, int r) {
  if (k < 1 || l < 1) throw DomainError("colors must be positive");
  if (k + l > r + 1) throw DomainError("Clebsch-Gordan rule needs k + l <= r + 1");
  std::vector<int> out;
  for (int p = std::abs(k - l) + 1; p <= k + l - 1; p += 2) out.push_back(p);
  return out;
}

}  // namespace qtop
