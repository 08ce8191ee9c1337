// Dense exact linear algebra, templated on the scalar type.
//
// Everything here works for Rat (exact) and for double (used only to steer the
// enumeration search). Matrices follow the row convention used by lattice
// bases: a basis is a matrix whose rows are the basis vectors.
#pragma once

#include "unimod/rational.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace unimod {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rat>;
using RatVector = Vector<Rat>;

/// G = Uᵀ·diag(pivots)·U with U unit upper triangular, so that
/// yᵀGy = Σ_i pivots_i·(y_i + Σ_{j>i} U_ij y_j)².
template <class Scalar>
struct Ldl {
  Matrix<Scalar> upper;
  Vector<Scalar> pivots;
  bool positive_definite = false;
};

/// Symmetric LDLᵀ without pivoting. Stops at the first non-positive pivot
/// (positive_definite is then false and the remaining entries are unset).
template <class Scalar>
Ldl<Scalar> ldl(const Matrix<Scalar>& g) {
  const Eigen::Index n = g.rows();
  Ldl<Scalar> out;
  out.upper = Matrix<Scalar>::Identity(n, n);
  out.pivots = Vector<Scalar>::Zero(n);
  // lower(i, j) stored transposed in upper(j, i)
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar d = g(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= out.upper(k, j) * out.upper(k, j) * out.pivots(k);
    if (!(d > Scalar(0))) return out;
    out.pivots(j) = d;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Scalar s = g(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= out.upper(k, i) * out.upper(k, j) * out.pivots(k);
      out.upper(j, i) = s / d;
    }
  }
  out.positive_definite = true;
  return out;
}

template <class Scalar>
bool is_symmetric(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

namespace detail {

template <class Scalar>
bool is_zero(const Scalar& s) { return s == Scalar(0); }

// In-place row echelon form; returns the pivot columns. `det_sign` tracks swaps.
template <class Scalar>
std::vector<Eigen::Index> echelon(Matrix<Scalar>& a, int* det_sign = nullptr) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      a.row(p).swap(a.row(row));
      if (det_sign) *det_sign = -*det_sign;
    }
    for (Eigen::Index r = row + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      const Scalar f = a(r, col) / a(row, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class Scalar>
Eigen::Index rank(Matrix<Scalar> a) {
  return static_cast<Eigen::Index>(detail::echelon(a).size());
}

template <class Scalar>
Scalar determinant(Matrix<Scalar> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  int sign = 1;
  const auto piv = detail::echelon(a, &sign);
  if (static_cast<Eigen::Index>(piv.size()) < a.rows()) return Scalar(0);
  Scalar d(sign);
  for (Eigen::Index i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

/// Solves A·X = B exactly; throws on a singular A.
template <class Scalar>
Matrix<Scalar> solve(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  Matrix<Scalar> aug(n, n + b.cols());
  aug << a, b;
  const auto piv = detail::echelon(aug);
  if (static_cast<Eigen::Index>(piv.size()) < n || piv.back() >= n)
    throw std::domain_error("solve: singular matrix (rank " + std::to_string(rank(a)) + ")");
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    const Scalar inv = Scalar(1) / aug(i, i);
    for (Eigen::Index c = i; c < aug.cols(); ++c) aug(i, c) *= inv;
    for (Eigen::Index r = 0; r < i; ++r) {
      if (detail::is_zero(aug(r, i))) continue;
      const Scalar f = aug(r, i);
      for (Eigen::Index c = i; c < aug.cols(); ++c) aug(r, c) -= f * aug(i, c);
    }
  }
  return aug.rightCols(b.cols());
}

template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& a) {
  return solve<Scalar>(a, Matrix<Scalar>::Identity(a.rows(), a.cols()));
}

// ---- integer-valued rational matrices -------------------------------------

bool is_integral(const RatMatrix& m);
bool is_integral(const RatVector& v);

/// Least common multiple of all denominators.
Int common_denominator(const RatMatrix& m);

/// Hermite-style integer row reduction: returns a matrix whose rows form a
/// basis of the Z-span of the given rows (rational entries allowed).
/// Zero rows are dropped, so the result has rank(rows) rows.
RatMatrix row_basis(const RatMatrix& rows);

/// Returns an integer unimodular matrix W whose first row is the primitive
/// integer vector c (gcd of entries must be 1).
RatMatrix complete_to_unimodular(const RatVector& c);

}  // namespace unimod
