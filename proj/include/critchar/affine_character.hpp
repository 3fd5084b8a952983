#pragma once

#include "critchar/finite_character.hpp"

namespace critchar {

// Truncated series sum_{n=0..N} c_n q^{-n} with exact integer coefficients.
struct QSeries {
  std::vector<Integer> coeffs;

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  Integer at(int n) const {
    return n >= 0 && n < static_cast<int>(coeffs.size()) ? coeffs[n] : Integer(0);
  }
  bool operator==(const QSeries& o) const { return coeffs == o.coeffs; }
};

QSeries qseries_one(int truncation);
QSeries qseries_mul(const QSeries& a, const QSeries& b);
// Multiply by (1 - q^{-k})^m, m may be negative for the inverse factors.
QSeries qseries_mul_power_factor(QSeries s, int k, int m);

// Truncated character of a highest-weight object: one finite character per
// delta degree (the coefficient of e^{base - n*delta - beta}), implicitly
// multiplied by e^{base}.
class AffineCharacter {
 public:
  AffineCharacter() = default;
  AffineCharacter(char type, int rank, Weight base, int truncation)
      : type_(type), rank_(rank), base_(std::move(base)),
        slices_(truncation + 1) {
    if (truncation < 0)
      throw std::invalid_argument("AffineCharacter: negative truncation");
  }

  char type() const { return type_; }
  int rank() const { return rank_; }
  const Weight& base_weight() const { return base_; }
  Weight& base_weight() { return base_; }
  int truncation() const { return static_cast<int>(slices_.size()) - 1; }

  const FiniteCharacter& slice(int n) const { return slices_.at(n); }
  FiniteCharacter& slice(int n) { return slices_.at(n); }
  const std::vector<FiniteCharacter>& slices() const { return slices_; }

  bool same_system(const AffineCharacter& o) const {
    return type_ == o.type_ && rank_ == o.rank_;
  }

 private:
  char type_ = 0;
  int rank_ = 0;
  Weight base_;
  std::vector<FiniteCharacter> slices_;
};

// Unit for mul: slice 0 is the constant character 1.
AffineCharacter affine_unit(const RootSystem& rs, int truncation);

// Product of truncated characters; base weights add, truncation is the
// smaller of the two. Rejects operands over different root systems.
AffineCharacter mul(const AffineCharacter& a, const AffineCharacter& b);

// c * (1 - q^{-n} e^{-beta})^{-m}, exact at the truncation. n >= 1 is
// required: a degree-zero factor would not have slice-finite inverse.
AffineCharacter mul_inverse_factor(const AffineCharacter& c, const IntVec& beta,
                                   int n, int m);
// c * (1 - q^{-n} e^{-beta})^{m}; the exact inverse of the above.
AffineCharacter mul_factor(const AffineCharacter& c, const IntVec& beta, int n,
                           int m);

QSeries qdims(const AffineCharacter& c);
Integer coefficient(const AffineCharacter& c, const IntVec& beta, int n);

bool slices_equal(const AffineCharacter& a, const AffineCharacter& b);

}  // namespace critchar
