#pragma once

#include <array>
#include <cmath>

#include "radapt/dual.hpp"
#include "radapt/errors.hpp"

namespace radapt {

template <class T>
using SmallVec = std::array<T, 2>;

/// Dense d x d matrix (d = 2 or 3) over double or Dual entries.
/// Houses element Jacobians, target matrices and their products; all
/// operations propagate dual tangents when T = Dual.
template <class T>
class SmallMatrix {
 public:
  SmallMatrix() : n_(2) { a_.fill(T(0.0)); }
  explicit SmallMatrix(int n) : n_(n) { a_.fill(T(0.0)); }

  static SmallMatrix identity(int n) {
    SmallMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  int dim() const { return n_; }
  T& operator()(int i, int j) { return a_[i * 3 + j]; }
  const T& operator()(int i, int j) const { return a_[i * 3 + j]; }

  T det() const {
    const auto& m = *this;
    if (n_ == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  SmallMatrix inverse() const {
    const T d = det();
    if (value_of(d) == 0.0) throw SingularMatrixError("SmallMatrix::inverse: singular matrix");
    const auto& m = *this;
    SmallMatrix inv(n_);
    if (n_ == 2) {
      inv(0, 0) = m(1, 1) / d;
      inv(0, 1) = -m(0, 1) / d;
      inv(1, 0) = -m(1, 0) / d;
      inv(1, 1) = m(0, 0) / d;
      return inv;
    }
    inv(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
    inv(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
    inv(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
    inv(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
    inv(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
    inv(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
    inv(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
    inv(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
    inv(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
    return inv;
  }

  /// Sum of squared entries; often cheaper than the norm and exact for duals.
  T frobenius_sq() const {
    T s(0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
    return s;
  }

  T frobenius_norm() const { return sqrt_guarded(frobenius_sq()); }

  SmallMatrix transpose() const {
    SmallMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  SmallMatrix operator*(const SmallMatrix& b) const {
    SmallMatrix c(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        T s(0.0);
        for (int k = 0; k < n_; ++k) s += (*this)(i, k) * b(k, j);
        c(i, j) = s;
      }
    return c;
  }

  SmallMatrix operator-(const SmallMatrix& b) const {
    SmallMatrix c(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) c(i, j) = (*this)(i, j) - b(i, j);
    return c;
  }

  SmallMatrix operator+(const SmallMatrix& b) const {
    SmallMatrix c(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) c(i, j) = (*this)(i, j) + b(i, j);
    return c;
  }

  SmallMatrix scaled(T s) const {
    SmallMatrix c(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) c(i, j) = (*this)(i, j) * s;
    return c;
  }

  /// y = M x for 2D vectors (the only case the element kernels need).
  SmallVec<T> apply(const SmallVec<T>& x) const {
    return {(*this)(0, 0) * x[0] + (*this)(0, 1) * x[1],
            (*this)(1, 0) * x[0] + (*this)(1, 1) * x[1]};
  }

  /// y = M^T x for 2D vectors.
  SmallVec<T> apply_transpose(const SmallVec<T>& x) const {
    return {(*this)(0, 0) * x[0] + (*this)(1, 0) * x[1],
            (*this)(0, 1) * x[0] + (*this)(1, 1) * x[1]};
  }

 private:
  static double sqrt_guarded(double s) { return std::sqrt(s); }
  static Dual sqrt_guarded(Dual s) { return sqrt(s); }

  int n_;
  std::array<T, 9> a_;
};

using Mat2 = SmallMatrix<double>;
using Mat2Dual = SmallMatrix<Dual>;

}  // namespace radapt
