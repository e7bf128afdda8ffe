#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qtop/error.hpp"
#include "qtop/field.hpp"

namespace qtop {

// Dense row-major matrix over a field policy's value type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class F>
Matrix<typename F::value_type> zeros(const F& field, std::size_t rows, std::size_t cols) {
  return Matrix<typename F::value_type>(rows, cols, field.zero());
}

template <class F>
Matrix<typename F::value_type> identity(const F& field, std::size_t n) {
  auto m = zeros(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class F>
Matrix<typename F::value_type> multiply(const F& field, const Matrix<typename F::value_type>& a,
                                        const Matrix<typename F::value_type>& b) {
  if (a.cols() != b.rows())
    throw DomainError("matrix shape mismatch in product: " + std::to_string(a.cols()) + " vs " +
                      std::to_string(b.rows()));
  auto out = zeros(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (field.is_zero(b(k, j))) continue;
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  return out;
}

/// Kronecker product; index (i*rows(b) + k, j*cols(b) + l).
template <class F>
Matrix<typename F::value_type> kron(const F& field, const Matrix<typename F::value_type>& a,
                                    const Matrix<typename F::value_type>& b) {
  auto out = zeros(field, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (field.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (field.is_zero(b(k, l))) continue;
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    }
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix<T>(a.cols(), a.rows(), T{});
  Matrix<T> out(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <class F>
Matrix<typename F::value_type> add(const F& field, Matrix<typename F::value_type> a,
                                   const Matrix<typename F::value_type>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch in sum");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  (void)field;
  return a;
}

template <class F>
Matrix<typename F::value_type> scale(const F& field, Matrix<typename F::value_type> a,
                                     const typename F::value_type& s) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!field.is_zero(a(i, j))) a(i, j) = a(i, j) * s;
  return a;
}

template <class F>
bool equal(const F& field, const Matrix<typename F::value_type>& a, const Matrix<typename F::value_type>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!field.equal(a(i, j), b(i, j))) return false;
  return true;
}

namespace detail {

// Pivot choice: exact fields take the first nonzero entry, the float field the
// largest modulus (partial pivoting).
template <class F>
std::size_t find_pivot(const F& field, const Matrix<typename F::value_type>& m, std::size_t col,
                       std::size_t from) {
  std::size_t best = m.rows();
  double best_abs = -1.0;
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (field.is_zero(m(i, col))) continue;
    if constexpr (F::exact) return i;
    const double a = std::abs(field.approx(m(i, col)));
    if (a > best_abs) best_abs = a, best = i;
  }
  return best;
}

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

/// Row-echelon rank by Gaussian elimination (exact for ExactField).
template <class F>
std::size_t rank(const F& field, Matrix<typename F::value_type> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t p = detail::find_pivot(field, m, c, r);
    if (p == m.rows()) continue;
    detail::swap_rows(m, p, r);
    const auto inv = field.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (field.is_zero(m(i, c))) continue;
      const auto f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      m(i, c) = field.zero();
    }
    ++r;
  }
  return r;
}

template <class F>
typename F::value_type determinant(const F& field, Matrix<typename F::value_type> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  auto det = field.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t p = detail::find_pivot(field, m, c, c);
    if (p == n) return field.zero();
    if (p != c) {
      detail::swap_rows(m, p, c);
      det = -det;
    }
    det = det * m(c, c);
    const auto inv = field.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field.is_zero(m(i, c))) continue;
      const auto f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class F>
Matrix<typename F::value_type> inverse(const F& field, Matrix<typename F::value_type> m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto out = identity(field, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t p = detail::find_pivot(field, m, c, c);
    if (p == n) throw DomainError("matrix is singular");
    detail::swap_rows(m, p, c);
    detail::swap_rows(out, p, c);
    const auto inv = field.inv(m(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      if (!field.is_zero(m(c, j))) m(c, j) = m(c, j) * inv;
      if (!field.is_zero(out(c, j))) out(c, j) = out(c, j) * inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || field.is_zero(m(i, c))) continue;
      const auto f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!field.is_zero(m(c, j))) m(i, j) -= f * m(c, j);
        if (!field.is_zero(out(c, j))) out(i, j) -= f * out(c, j);
      }
    }
  }
  return out;
}

template <class F>
Matrix<typename F::value_type> matrix_power(const F& field, const Matrix<typename F::value_type>& m,
                                            unsigned e) {
  auto result = identity(field, m.rows());
  auto base = m;
  while (e > 0) {
    if (e & 1u) result = multiply(field, result, base);
    e >>= 1u;
    if (e) base = multiply(field, base, base);
  }
  return result;
}

}  // namespace qtop
