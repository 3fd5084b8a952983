#pragma once

#include "critchar/numeric.hpp"

#include <stdexcept>

namespace critchar {

// Rank of an exact integer matrix by fraction-free (Bareiss) elimination.
// No floating point and no rational intermediates; every interior division
// is exact by the Bareiss identity.
template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& matrix) {
  Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> m(matrix.rows(),
                                                           matrix.cols());
  for (Eigen::Index i = 0; i < matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < matrix.cols(); ++j)
      m(i, j) = Integer(matrix(i, j));
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  Integer prev = 1;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
    const Integer pivot = m(rank, c);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = (pivot * m(i, j) - m(i, c) * m(rank, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

// Rank of an exact rational matrix: rows are scaled by their denominator lcm
// (rank-preserving) and the integer kernel above does the elimination.
inline Eigen::Index bareiss_rank_rational(const RatMat& matrix) {
  Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> m(matrix.rows(),
                                                           matrix.cols());
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    Integer scale = 1;
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      scale = boost::multiprecision::lcm(
          scale, boost::multiprecision::denominator(matrix(i, j)));
    }
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      m(i, j) = rational_to_integer(matrix(i, j) * Rational(scale));
    }
  }
  return bareiss_rank(m);
}

// Exact Gaussian solve; returns false when the system is singular or
// inconsistent. Small systems only (basis changes, action coordinates).
inline bool gauss_solve(RatMat a, RatVec b, RatVec& x) {
  const Eigen::Index n = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index row = 0;
  std::vector<Eigen::Index> pivot_col;
  for (Eigen::Index c = 0; c < cols && row < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < n; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    a.row(p).swap(a.row(row));
    std::swap(b[p], b[row]);
    const Rational inv = Rational(1) / a(row, c);
    for (Eigen::Index j = c; j < cols; ++j) a(row, j) *= inv;
    b[row] *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == row || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(row, j);
      b[i] -= f * b[row];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (Eigen::Index i = row; i < n; ++i) {
    if (b[i] != 0) return false;
  }
  x = rat_vec_zero(cols);
  for (Eigen::Index r = 0; r < row; ++r) x[pivot_col[r]] = b[r];
  return true;
}

inline RatMat gauss_invert(const RatMat& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("gauss_invert: not square");
  RatMat out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    RatVec e = rat_vec_zero(n);
    e[c] = 1;
    RatVec x;
    if (!gauss_solve(a, e, x))
      throw std::invalid_argument("gauss_invert: singular matrix");
    out.col(c) = x;
  }
  return out;
}

}  // namespace critchar
