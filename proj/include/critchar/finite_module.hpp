#pragma once

#include "critchar/pbw.hpp"

namespace critchar {

// E(lambda_bar), the irreducible finite-dimensional module, realized as the
// quotient of the Verma module by the radical of its contravariant form:
// per weight space, f-monomials span, their Shapovalov Gram matrix is
// computed exactly and a nonsingular principal block selects the basis.
// This is the same Gram-rank construction the affine oracle uses, one level
// down, so the oracle never consults a character formula.
class FiniteModule {
 public:
  FiniteModule(const ChevalleyBasis& cb, const IntVec& lambda_bar_fw);

  const ChevalleyBasis& chevalley() const { return cb_; }
  const IntVec& highest_weight_fw() const { return lambda_bar_fw_; }

  int dim() const { return static_cast<int>(offsets_.size()); }
  // Root-basis coordinates of lambda_bar - (weight of basis vector idx).
  const IntVec& offset_of(int idx) const { return offsets_.at(idx); }

  // x_a . (basis vector idx) as an exact combination of basis vectors.
  const std::vector<std::pair<int, Rational>>& act(int elem, int idx) const {
    return action_.at(elem).at(idx);
  }

  // Contravariant form; block diagonal across weight spaces.
  const Rational& form(int i, int j) const { return form_(i, j); }

  // dim of the weight space at a given offset (0 if absent).
  int weight_dim(const IntVec& offset) const;
  const std::map<IntVec, std::vector<int>, LexLess>& spaces() const {
    return spaces_;
  }

 private:
  const ChevalleyBasis& cb_;
  IntVec lambda_bar_fw_;
  std::vector<IntVec> offsets_;
  std::map<IntVec, std::vector<int>, LexLess> spaces_;  // offset -> indices
  RatMat form_;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> action_;
};

}  // namespace critchar
