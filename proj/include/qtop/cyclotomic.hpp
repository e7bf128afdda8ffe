#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "qtop/error.hpp"
#include "qtop/rational.hpp"

namespace qtop {

namespace detail {

// Power basis data of Q(zeta_N): the N-th cyclotomic polynomial and the
// reductions of x^0 .. x^{N-1} modulo it.
struct CyclotomicBasis {
  int order = 1;
  int degree = 1;
  std::vector<long> phi;                  // monic, phi[degree] == 1
  std::vector<std::vector<long>> powers;  // powers[k] = x^k mod phi, length degree
};

inline std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];  // den is monic
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

inline std::vector<long> cyclotomic_polynomial_uncached(int n);

inline const CyclotomicBasis& cyclotomic_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto basis = std::make_unique<CyclotomicBasis>();
  basis->order = n;
  basis->phi = cyclotomic_polynomial_uncached(n);
  basis->degree = static_cast<int>(basis->phi.size()) - 1;
  const int d = basis->degree;
  basis->powers.assign(n, std::vector<long>(d, 0));
  std::vector<long> cur(d, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    basis->powers[k] = cur;
    // multiply by x and reduce
    std::vector<long> next(d, 0);
    const long top = cur[d - 1];
    for (int j = d - 1; j > 0; --j) next[j] = cur[j - 1];
    for (int j = 0; j < d; ++j) next[j] -= top * basis->phi[j];
    cur = std::move(next);
  }
  const auto& ref = *basis;
  cache.emplace(n, std::move(basis));
  return ref;
}

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
inline std::vector<long> cyclotomic_polynomial_uncached(int n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  if (n == 1) return {-1, 1};
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<long> phi_d = (d == 1) ? std::vector<long>{-1, 1} : cyclotomic_polynomial_uncached(d);
    num = poly_divide_exact(num, phi_d);
  }
  return num;
}

}  // namespace detail

inline std::vector<long> cyclotomic_polynomial(int n) { return detail::cyclotomic_basis(n).phi; }

/// Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{d-1},
/// d = phi(N). Stored as integer numerators over one positive common
/// denominator, normalized so that gcd(numerators, denominator) = 1; the
/// representation is unique, so equality is coefficient-wise.
class CycNum {
 public:
  CycNum() : CycNum(1) {}
  explicit CycNum(int order) : basis_(&detail::cyclotomic_basis(order)), num_(basis_->degree), den_(1) {}

  static CycNum zero(int order) { return CycNum(order); }
  static CycNum one(int order) { return from_integer(order, 1); }
  static CycNum from_integer(int order, long v) {
    CycNum x(order);
    x.num_[0] = v;
    return x;
  }
  static CycNum from_rational(int order, const Rational& q) {
    CycNum x(order);
    x.num_[0] = q.get_num();
    x.den_ = q.get_den();
    return x;
  }
  /// zeta_N^k for any integer k.
  static CycNum root(int order, long k) {
    CycNum x(order);
    long e = k % order;
    if (e < 0) e += order;
    const auto& p = x.basis_->powers[e];
    for (int j = 0; j < x.degree(); ++j) x.num_[j] = p[j];
    return x;
  }
  static CycNum from_coeffs(int order, const std::vector<Rational>& coeffs) {
    CycNum x(order);
    if (static_cast<int>(coeffs.size()) != x.degree())
      throw DomainError("coefficient vector length " + std::to_string(coeffs.size()) +
                        " does not match field degree " + std::to_string(x.degree()));
    Integer common = 1;
    for (const auto& c : coeffs) common = lcm(common, c.get_den());
    x.den_ = common;
    for (int j = 0; j < x.degree(); ++j) x.num_[j] = coeffs[j].get_num() * (common / coeffs[j].get_den());
    x.normalize();
    return x;
  }

  int order() const noexcept { return basis_->order; }
  int degree() const noexcept { return basis_->degree; }
  Rational coeff(int j) const {
    Rational q(num_.at(j), den_);
    q.canonicalize();
    return q;
  }
  std::vector<Rational> coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (int j = 0; j < degree(); ++j) out.push_back(coeff(j));
    return out;
  }

  bool is_zero() const {
    for (const auto& c : num_)
      if (sgn(c) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (int j = 1; j < degree(); ++j)
      if (sgn(num_[j]) != 0) return false;
    return true;
  }

  CycNum operator-() const {
    CycNum x = *this;
    for (auto& c : x.num_) c = -c;
    return x;
  }
  CycNum& operator+=(const CycNum& o) { return add_scaled(o, 1); }
  CycNum& operator-=(const CycNum& o) { return add_scaled(o, -1); }
  CycNum& operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
  }
  CycNum& operator*=(const Rational& q) {
    for (auto& c : num_) c *= q.get_num();
    den_ *= q.get_den();
    normalize();
    return *this;
  }
  CycNum& operator*=(long v) {
    for (auto& c : num_) c *= v;
    normalize();
    return *this;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
  friend CycNum operator*(const Rational& q, CycNum a) { return a *= q; }
  friend CycNum operator*(CycNum a, long v) { return a *= v; }
  friend CycNum operator*(long v, CycNum a) { return a *= v; }
  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    a.require_same_order(b);
    const int d = a.degree();
    const auto& phi = a.basis_->phi;
    std::vector<Integer> prod(2 * d - 1);
    bool any = false;
    for (int i = 0; i < d; ++i) {
      if (sgn(a.num_[i]) == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (sgn(b.num_[j]) == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        any = true;
      }
    }
    CycNum out(a.order());
    if (!any) return out;
    for (int i = 2 * d - 2; i >= d; --i) {
      if (sgn(prod[i]) == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (phi[j] == 0) continue;
        if (phi[j] > 0)
          mpz_submul_ui(prod[i - d + j].get_mpz_t(), prod[i].get_mpz_t(), static_cast<unsigned long>(phi[j]));
        else
          mpz_addmul_ui(prod[i - d + j].get_mpz_t(), prod[i].get_mpz_t(), static_cast<unsigned long>(-phi[j]));
      }
    }
    for (int j = 0; j < d; ++j) out.num_[j] = std::move(prod[j]);
    out.den_ = a.den_ * b.den_;
    out.normalize();
    return out;
  }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.order() == b.order() && a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Multiplicative inverse; solves (multiplication-by-this) v = 1 in the power basis.
  CycNum inv() const {
    if (is_zero()) throw DomainError("division by zero in Q(zeta_" + std::to_string(order()) + ")");
    const int d = degree();
    // column j of the system is this * x^j
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    CycNum xj = one(order());
    const CycNum x = root(order(), 1);
    for (int j = 0; j < d; ++j) {
      const CycNum col = *this * xj;
      for (int i = 0; i < d; ++i) m[i][j] = col.coeff(i);
      xj = xj * x;
    }
    m[0][d] = 1;
    for (int c = 0; c < d; ++c) {
      int piv = c;
      while (piv < d && sgn(m[piv][c]) == 0) ++piv;
      if (piv == d) throw DomainError("singular multiplication map in inverse");
      std::swap(m[piv], m[c]);
      const Rational p = m[c][c];
      for (int k = c; k <= d; ++k) m[c][k] /= p;
      for (int i = 0; i < d; ++i) {
        if (i == c || sgn(m[i][c]) == 0) continue;
        const Rational f = m[i][c];
        for (int k = c; k <= d; ++k) m[i][k] -= f * m[c][k];
      }
    }
    std::vector<Rational> sol(d);
    for (int i = 0; i < d; ++i) sol[i] = m[i][d];
    return from_coeffs(order(), sol);
  }

  /// Complex conjugation, zeta -> zeta^{-1}.
  CycNum conj() const {
    CycNum out(order());
    const int n = order();
    for (int j = 0; j < degree(); ++j) {
      if (sgn(num_[j]) == 0) continue;
      const auto& p = basis_->powers[(n - j) % n];
      for (int i = 0; i < degree(); ++i)
        if (p[i] != 0) out.num_[i] += num_[j] * p[i];
    }
    out.den_ = den_;
    out.normalize();
    return out;
  }

  CycNum pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum result = one(order());
    CycNum base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Re-express in Q(zeta_M) for M a multiple of the current order.
  CycNum lift(int new_order) const {
    if (new_order % order() != 0)
      throw DomainError("cannot coerce order " + std::to_string(order()) + " into " + std::to_string(new_order));
    const int step = new_order / order();
    CycNum out(new_order);
    const auto& big = out.basis_->powers;
    for (int j = 0; j < degree(); ++j) {
      if (sgn(num_[j]) == 0) continue;
      const auto& p = big[(j * step) % new_order];
      for (int i = 0; i < out.degree(); ++i)
        if (p[i] != 0) out.num_[i] += num_[j] * p[i];
    }
    out.den_ = den_;
    out.normalize();
    return out;
  }

  /// Embedding zeta_N -> e^{2 pi i / N}.
  std::complex<double> approx() const {
    std::complex<double> z = 0;
    const double den = den_.get_d();
    for (int j = 0; j < degree(); ++j) {
      if (sgn(num_[j]) == 0) continue;
      const double ang = 2.0 * std::numbers::pi * j / order();
      z += (num_[j].get_d() / den) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int j = 0; j < degree(); ++j) {
      if (j) s += ", ";
      s += qtop::to_string(coeff(j));
    }
    return s + "]_" + std::to_string(order());
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

 private:
  void require_same_order(const CycNum& o) const {
    if (order() != o.order())
      throw DomainError("cyclotomic order mismatch: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
  }

  CycNum& add_scaled(const CycNum& o, int sign) {
    require_same_order(o);
    if (den_ == o.den_) {
      for (int j = 0; j < degree(); ++j) {
        if (sign > 0) num_[j] += o.num_[j];
        else num_[j] -= o.num_[j];
      }
    } else {
      for (int j = 0; j < degree(); ++j) {
        num_[j] *= o.den_;
        if (sign > 0) mpz_addmul(num_[j].get_mpz_t(), o.num_[j].get_mpz_t(), den_.get_mpz_t());
        else mpz_submul(num_[j].get_mpz_t(), o.num_[j].get_mpz_t(), den_.get_mpz_t());
      }
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }

  void normalize() {
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& c : num_) {
      if (g == 1) break;
      if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    if (g != 1) {
      for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  const detail::CyclotomicBasis* basis_;
  std::vector<Integer> num_;
  Integer den_;
};

/// sqrt(2) in Q(zeta_16) as zeta^2 - zeta^6 (= 2 cos(pi/4)).
inline CycNum sqrt2_16() { return CycNum::root(16, 2) - CycNum::root(16, 6); }

}  // namespace qtop
