#pragma once

#include <Eigen/Dense>

#include "finsler/dual.hpp"

namespace finsler {

template <class T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using MatX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using VecXd = VecX<double>;
using MatXd = MatX<double>;

template <class T>
VecXd values_of(const VecX<T>& v) {
  VecXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = value_of(v[i]);
  return out;
}
template <class T>
MatXd values_of(const MatX<T>& m) {
  MatXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = value_of(m(i, j));
  return out;
}

template <class T>
VecX<T> lift(const VecXd& v) {
  VecX<T> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = T(v[i]);
  return out;
}

template <class T>
T dot_t(const VecX<T>& a, const VecX<T>& b) {
  T s(0.0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

// Solve A z = rhs by Gaussian elimination with partial pivoting on the value
// parts; generic over the scalar so it differentiates through. Throws
// DegenerateMetric when a pivot falls below tol relative to the row scale.
template <class T>
VecX<T> solve_linear(MatX<T> A, VecX<T> rhs, double rel_tol = 1e-12) {
  const Eigen::Index n = A.rows();
  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) scale = std::max(scale, abs_value(A(i, j)));
  if (scale == 0.0) throw DegenerateMetric("all-zero matrix in linear solve");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    double best = abs_value(A(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      double v = abs_value(A(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best <= rel_tol * scale) throw DegenerateMetric("near-singular matrix in linear solve");
    if (piv != col) {
      A.row(piv).swap(A.row(col));
      std::swap(rhs[piv], rhs[col]);
    }
    for (Eigen::Index r = col + 1; r < n; ++r) {
      T f = A(r, col) / A(col, col);
      for (Eigen::Index j = col; j < n; ++j) A(r, j) = A(r, j) - f * A(col, j);
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  VecX<T> z(n);
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    T s = rhs[r];
    for (Eigen::Index j = r + 1; j < n; ++j) s = s - A(r, j) * z[j];
    z[r] = s / A(r, r);
  }
  return z;
}

// Determinant via the same elimination; sign tracked through row swaps.
template <class T>
T det_generic(MatX<T> A) {
  const Eigen::Index n = A.rows();
  T det(1.0);
  double sign_flip = 1.0;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    double best = abs_value(A(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      double v = abs_value(A(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return T(0.0);
    if (piv != col) {
      A.row(piv).swap(A.row(col));
      sign_flip = -sign_flip;
    }
    det = det * A(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      T f = A(r, col) / A(col, col);
      for (Eigen::Index j = col; j < n; ++j) A(r, j) = A(r, j) - f * A(col, j);
    }
  }
  return sign_flip * det;
}

}  // namespace finsler
