#pragma once

#include "critchar/chevalley.hpp"

namespace critchar {

class FiniteModule;

// Straightening engine for products of loop generators acting on a highest
// weight vector, in two flavours:
//
//  - finite: factors are f_gamma at mode 0, the vacuum is the Verma highest
//    weight vector (h acts by the highest weight, e annihilates);
//  - affine: factors are arbitrary generators at modes <= -1 tensored with a
//    basis vector of the finite module E(lambda_bar); mode 0 acts through
//    E(lambda_bar), modes >= 1 annihilate, and commutators pick up the
//    central term m (x|y) K with K acting by the level.
//
// Monomials are kept sorted by (mode, kind f < h < e, root height, index);
// any fixed admissible order works, this one is the canonical choice here.
class PbwEngine {
 public:
  using Monomial = std::vector<std::pair<int, int>>;  // (element, mode)
  using Key = std::pair<Monomial, int>;               // monomial, E-basis index
  using Vec = std::map<Key, Rational>;

  static PbwEngine finite(const ChevalleyBasis& cb, RatVec lambda_bar_fw);
  static PbwEngine affine(const ChevalleyBasis& cb, const FiniteModule& emod,
                          Rational level);

  const ChevalleyBasis& chevalley() const { return cb_; }

  bool factor_le(int a, int ma, int b, int mb) const;

  // out += coef * x_a(mode) . (mon tensor e_idx), fully straightened.
  void accumulate(Vec& out, int elem, int mode, const Monomial& mon, int eidx,
                  const Rational& coef) const;

  Vec apply(int elem, int mode, const Vec& v) const;

 private:
  PbwEngine(const ChevalleyBasis& cb) : cb_(cb) {}
  bool insertable(int elem, int mode) const;
  void boundary(Vec& out, int elem, int mode, int eidx,
                const Rational& coef) const;

  const ChevalleyBasis& cb_;
  bool finite_ = true;
  RatVec lambda_bar_fw_;
  const FiniteModule* emod_ = nullptr;
  Rational level_ = 0;
};

}  // namespace critchar
