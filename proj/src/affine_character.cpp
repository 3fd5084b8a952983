#include "critchar/affine_character.hpp"

#include <stdexcept>

namespace critchar {

QSeries qseries_one(int truncation) {
  QSeries s;
  s.coeffs.assign(truncation + 1, Integer(0));
  s.coeffs[0] = 1;
  return s;
}

QSeries qseries_mul(const QSeries& a, const QSeries& b) {
  QSeries out;
  const int n = std::min(a.truncation(), b.truncation());
  out.coeffs.assign(n + 1, Integer(0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

QSeries qseries_mul_power_factor(QSeries s, int k, int m) {
  if (k < 1) throw std::invalid_argument("qseries_mul_power_factor: k < 1");
  const int n = s.truncation();
  for (int rep = 0; rep < std::abs(m); ++rep) {
    if (m > 0) {
      for (int i = n; i >= k; --i) s.coeffs[i] -= s.coeffs[i - k];
    } else {
      for (int i = k; i <= n; ++i) s.coeffs[i] += s.coeffs[i - k];
    }
  }
  return s;
}

AffineCharacter affine_unit(const RootSystem& rs, int truncation) {
  Weight zero;
  zero.finite = RatVec::Zero(rs.rank());
  AffineCharacter c(rs.type(), rs.rank(), zero, truncation);
  c.slice(0) = unit_finite_character(rs.rank());
  return c;
}

AffineCharacter mul(const AffineCharacter& a, const AffineCharacter& b) {
  if (!a.same_system(b))
    throw std::invalid_argument("mul: characters over different root systems");
  const int n = std::min(a.truncation(), b.truncation());
  AffineCharacter out(a.type(), a.rank(), a.base_weight() + b.base_weight(), n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      out.slice(i + j) = out.slice(i + j) + convolve(a.slice(i), b.slice(j));
  return out;
}

AffineCharacter mul_inverse_factor(const AffineCharacter& c, const IntVec& beta,
                                   int n, int m) {
  if (n < 1)
    throw std::invalid_argument(
        "mul_inverse_factor: degree-zero factors cannot be inverted");
  if (m < 1) throw std::invalid_argument("mul_inverse_factor: m < 1");
  AffineCharacter out = c;
  for (int rep = 0; rep < m; ++rep) {
    // R_k = C_k + e^{-beta} R_{k-n}, solved by increasing k.
    for (int k = n; k <= out.truncation(); ++k)
      out.slice(k) = out.slice(k) + shifted(out.slice(k - n), beta);
  }
  return out;
}

AffineCharacter mul_factor(const AffineCharacter& c, const IntVec& beta, int n,
                           int m) {
  if (n < 1) throw std::invalid_argument("mul_factor: n < 1");
  if (m < 1) throw std::invalid_argument("mul_factor: m < 1");
  AffineCharacter out = c;
  for (int rep = 0; rep < m; ++rep) {
    for (int k = out.truncation(); k >= n; --k)
      out.slice(k) = out.slice(k) - shifted(out.slice(k - n), beta);
  }
  return out;
}

QSeries qdims(const AffineCharacter& c) {
  QSeries s;
  s.coeffs.reserve(c.truncation() + 1);
  for (int n = 0; n <= c.truncation(); ++n) s.coeffs.push_back(c.slice(n).total());
  return s;
}

Integer coefficient(const AffineCharacter& c, const IntVec& beta, int n) {
  if (n < 0 || n > c.truncation())
    throw std::invalid_argument("coefficient: delta degree beyond truncation");
  return c.slice(n).coeff(beta);
}

bool slices_equal(const AffineCharacter& a, const AffineCharacter& b) {
  if (a.truncation() != b.truncation()) return false;
  for (int n = 0; n <= a.truncation(); ++n)
    if (!(a.slice(n) == b.slice(n))) return false;
  return true;
}

}  // namespace critchar
