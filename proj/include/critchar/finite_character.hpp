#pragma once

#include "critchar/root_system.hpp"
#include "critchar/weyl.hpp"

namespace critchar {

// Finitely supported integer-valued function on the finite weight lattice,
// stored as offsets from an (external) base weight: the key beta, an integer
// vector in the simple-root basis, carries the multiplicity at base - beta.
// Zero multiplicities are never stored.
class FiniteCharacter {
 public:
  using Map = std::map<IntVec, Integer, LexLess>;

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Integer coeff(const IntVec& offset) const {
    auto it = terms_.find(offset);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const IntVec& offset, const Integer& mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(offset, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer total() const {
    Integer t = 0;
    for (const auto& [k, v] : terms_) t += v;
    return t;
  }

  bool operator==(const FiniteCharacter& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;
};

FiniteCharacter operator+(const FiniteCharacter& a, const FiniteCharacter& b);
FiniteCharacter operator-(const FiniteCharacter& a, const FiniteCharacter& b);
FiniteCharacter scaled(const FiniteCharacter& a, const Integer& c);
FiniteCharacter shifted(const FiniteCharacter& a, const IntVec& beta);
// Convolution on the weight lattice: offsets add, multiplicities multiply.
FiniteCharacter convolve(const FiniteCharacter& a, const FiniteCharacter& b);

FiniteCharacter unit_finite_character(int rank);

// Multiplicity of base - beta after acting with w on actual weights; used by
// the W-invariance checks. base_fw are the fundamental-weight coordinates of
// the base weight.
IntVec weyl_image_offset(const RootSystem& rs, const WeylElement& w,
                         const RatVec& base_fw, const IntVec& beta);

// ch E(lambda_bar) through the Weyl character formula: the alternating
// numerator over the Weyl group divided, exactly, by the degree-zero
// denominator factors.
FiniteCharacter finite_weyl_character(const RootSystem& rs, const IntVec& lambda_bar_fw);

// Independent oracle: the Freudenthal multiplicity recursion. No alternating
// sums anywhere in this path.
FiniteCharacter freudenthal_character(const RootSystem& rs, const IntVec& lambda_bar_fw);

// Product formula for dim E(lambda_bar).
Integer weyl_dimension(const RootSystem& rs, const IntVec& lambda_bar_fw);

}  // namespace critchar
