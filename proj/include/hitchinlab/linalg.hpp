// Small dense matrices over the scalar tower. Everything here is dimension
// <= ~35, so plain Gaussian elimination with exact division is the right tool.
#pragma once

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "hitchinlab/errors.hpp"
#include "hitchinlab/scalar.hpp"

namespace hlab {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int r, int c) : r_(r), c_(c), a_(size_t(r) * c, scalar_traits<S>::from_int(0)) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::from_int(1);
    return m;
  }
  int rows() const { return r_; }
  int cols() const { return c_; }
  S& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const S& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix m(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int l = 0; l < x.c_; ++l) {
        const S& v = x(i, l);
        if (is_zero(v)) continue;
        for (int j = 0; j < y.c_; ++j) m(i, j) += v * y(l, j);
      }
    return m;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix m = x;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += y.a_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix m = x;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= y.a_[i];
    return m;
  }
  Matrix operator*(const S& s) const {
    Matrix m = *this;
    for (auto& v : m.a_) v *= s;
    return m;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  Matrix transposed() const {
    Matrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> out(r_, scalar_traits<S>::from_int(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<S> a_;
};

template <class S>
double abs_approx(const S& v) {
  return std::fabs(to_double(v));
}

// Gaussian elimination with partial pivoting by floating magnitude (valid for
// exact scalars too). Returns determinant; inv receives the inverse if nonnull.
template <class S>
S det_and_inverse(Matrix<S> m, Matrix<S>* inv) {
  int n = m.rows();
  Matrix<S> e = Matrix<S>::identity(n);
  S det = scalar_traits<S>::from_int(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    double best = 0;
    for (int i = col; i < n; ++i) {
      double a = abs_approx(m(i, col));
      if (!is_zero(m(i, col)) && (piv < 0 || a > best)) best = a, piv = i;
    }
    if (piv < 0) {
      if (inv) fail(Err::DegenerateMetric, "singular matrix");
      return scalar_traits<S>::from_int(0);
    }
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j)), std::swap(e(piv, j), e(col, j));
      det = -det;
    }
    det *= m(col, col);
    S d = m(col, col);
    for (int j = 0; j < n; ++j) m(col, j) /= d, e(col, j) /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col || is_zero(m(i, col))) continue;
      S f = m(i, col);
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(col, j), e(i, j) -= f * e(col, j);
    }
  }
  if (inv) *inv = e;
  return det;
}

template <class S>
S determinant(const Matrix<S>& m) {
  return det_and_inverse<S>(m, nullptr);
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  Matrix<S> inv;
  det_and_inverse<S>(m, &inv);
  return inv;
}

// Row echelon; returns rank. For float scalars `tol` decides pivot viability.
template <class S>
int row_reduce(Matrix<S>& m, double tol = 0.0) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    double best = tol;
    for (int i = rank; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      double a = abs_approx(m(i, col));
      if (piv < 0 ? a >= tol : a > best) best = a, piv = i;
    }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    S d = m(rank, col);
    for (int j = 0; j < m.cols(); ++j) m(rank, j) /= d;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || is_zero(m(i, col))) continue;
      S f = m(i, col);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class S>
int rank_of(Matrix<S> m) {
  return row_reduce(m);
}

// Nullspace basis (columns of the returned matrix) of m x as exact vectors.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> m) {
  int rows = m.rows(), cols = m.cols();
  row_reduce(m);
  std::vector<int> lead(cols, -1);
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    if (!is_zero(m(r, col))) {
      lead[col] = r;
      ++r;
    }
  }
  std::vector<std::vector<S>> basis;
  for (int col = 0; col < cols; ++col) {
    if (lead[col] >= 0) continue;
    std::vector<S> v(cols, scalar_traits<S>::from_int(0));
    v[col] = scalar_traits<S>::from_int(1);
    for (int c2 = 0; c2 < cols; ++c2)
      if (lead[c2] >= 0) v[c2] = -m(lead[c2], col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Sylvester inertia of a symmetric matrix by congruence pivoting (exact mode).
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};

template <class S>
Inertia inertia_sym(Matrix<S> m) {
  int n = m.rows();
  Inertia out;
  for (int i = 0; i < n; ++i) {
    if (is_zero(m(i, i))) {
      int swp = -1, off = -1;
      for (int j = i + 1; j < n; ++j)
        if (!is_zero(m(j, j))) {
          swp = j;
          break;
        }
      if (swp < 0)
        for (int j = i + 1; j < n; ++j)
          if (!is_zero(m(i, j))) {
            off = j;
            break;
          }
      if (swp >= 0) {
        for (int c = 0; c < n; ++c) std::swap(m(i, c), m(swp, c));
        for (int r = 0; r < n; ++r) std::swap(m(r, i), m(r, swp));
      } else if (off >= 0) {  // zero diagonal block: row/col addition creates a pivot
        for (int c = 0; c < n; ++c) m(i, c) += m(off, c);
        for (int r = 0; r < n; ++r) m(r, i) += m(r, off);
      } else {
        ++out.zero;
        continue;
      }
    }
    S piv = m(i, i);
    (sgn(piv) > 0 ? out.pos : out.neg) += 1;
    for (int j = i + 1; j < n; ++j) {
      if (is_zero(m(i, j))) continue;
      S f = m(i, j) / piv;
      for (int c = 0; c < n; ++c) m(j, c) -= f * m(i, c);
      for (int r = 0; r < n; ++r) m(r, j) -= f * m(r, i);
    }
  }
  return out;
}

// Jacobi eigenvalue iteration for symmetric double matrices.
// Returns eigenvalues sorted by decreasing magnitude.
std::vector<double> eigenvalues_sym(Matrix<double> m);
// Eigenvalues with eigenvectors (columns), unsorted.
void jacobi_sym(Matrix<double>& m, Matrix<double>* vecs);

// Solve m x = b by LU with partial pivoting (double only).
std::vector<double> solve_lu(Matrix<double> m, std::vector<double> b);

// Inertia of a symmetric double matrix by eigenvalue signs with a gap threshold.
Inertia inertia_sym_float(const Matrix<double>& m, double gap = 1e-7);

}  // namespace hlab
