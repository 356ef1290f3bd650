#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lgcy/error.hpp"
#include "lgcy/scalar.hpp"

namespace lgcy {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw MathError("matrix shape mismatch");
    Matrix z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        if (scalar_is_zero(x(i, k))) continue;
        for (std::size_t j = 0; j < y.c_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

// Row echelon form by exact elimination; returns (rank, determinant sign and
// pivot product). Only meaningful for exact scalar types.
template <class T>
std::pair<std::size_t, T> eliminate(Matrix<T> m) {
  std::size_t rank = 0;
  T det(1);
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && scalar_is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) {
      det = T(0);
      continue;
    }
    if (piv != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
      det = -det;
    }
    T inv = scalar_inverse(m(rank, col));
    det *= m(rank, col);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (scalar_is_zero(m(i, col))) continue;
      T f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  if (rank < m.rows() || m.rows() != m.cols()) det = T(0);
  return {rank, det};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return eliminate(m).first;
}

template <class T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw MathError("determinant of a non-square matrix");
  if (m.rows() == 0) return T(1);
  return eliminate(m).second;
}

}  // namespace lgcy
