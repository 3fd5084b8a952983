#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <map>
#include <vector>

namespace critchar {

// Every quantity in this library is exact: arbitrary-precision integers for
// multiplicities, rationals for weights, pairings and Gram entries.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = Eigen::VectorXi;
using IntMat = Eigen::MatrixXi;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline int lex_compare(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// Canonical key order for sparse lattice maps.
struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return lex_compare(a, b) < 0;
  }
};

// Height first, then lexicographic. Used wherever a computation has to sweep
// lattice points in an order compatible with adding positive roots.
struct HeightLexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    const int ha = a.sum();
    const int hb = b.sum();
    if (ha != hb) return ha < hb;
    return lex_compare(a, b) < 0;
  }
};

inline Integer rational_to_integer(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error("rational_to_integer: value is not integral");
  return boost::multiprecision::numerator(r);
}

inline RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

// Element-wise helpers for boost-scalar Eigen types. Materializing Eigen
// expression templates into multiprecision scalars trips a non-SFINAE
// constructor probe in this Boost release, so arithmetic on RatVec/RatMat
// goes through plain loops.
inline RatVec rat_vec_zero(Eigen::Index n) {
  RatVec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = 0;
  return v;
}

inline RatMat rat_zero(Eigen::Index r, Eigen::Index c) {
  RatMat m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = 0;
  return m;
}

inline RatVec rat_add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVec rat_sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RatVec rat_mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out = rat_vec_zero(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
  RatMat out = rat_zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline RatMat rat_commutator(const RatMat& a, const RatMat& b) {
  RatMat out = rat_mul(a, b);
  const RatMat ba = rat_mul(b, a);
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) -= ba(i, j);
  return out;
}

}  // namespace critchar
