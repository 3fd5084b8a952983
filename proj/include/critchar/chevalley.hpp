#pragma once

#include "critchar/root_system.hpp"

namespace critchar {

// Chevalley basis of the finite simple algebra, realized concretely inside a
// faithful representation: h_i for the simple coroots, e_gamma / f_gamma per
// positive root. Non-simple root vectors are produced by the height
// recursion e_gamma = [e_i, e_beta] / (p+1); every bracket of basis elements
// is decomposed back into the basis with exact checks, so a wrong table
// cannot be constructed silently.
class ChevalleyBasis {
 public:
  enum class Kind { F = 0, H = 1, E = 2 };

  struct Element {
    Kind kind;
    int index;    // Cartan index for H, positive-root index for E/F
    IntVec root;  // root-basis coordinates of the weight; zero for H
    RatMat rep;
  };

  struct Limits {
    int max_rank = 2;
  };

  static ChevalleyBasis build(const RootSystem& rs, Limits limits);
  static ChevalleyBasis build(const RootSystem& rs) { return build(rs, Limits{}); }

  const RootSystem& root_system() const { return rs_; }
  int dim() const { return static_cast<int>(elements_.size()); }
  int cartan_count() const { return rs_.rank(); }
  int positive_count() const { return static_cast<int>(rs_.positive_roots().size()); }

  int h_index(int i) const { return i; }
  int e_index(int t) const { return rs_.rank() + t; }
  int f_index(int t) const { return rs_.rank() + positive_count() + t; }

  const Element& element(int a) const { return elements_.at(a); }
  Kind kind(int a) const { return elements_[a].kind; }
  const IntVec& root(int a) const { return elements_[a].root; }
  // Height of the underlying positive root, used by the PBW factor order.
  int order_height(int a) const { return order_height_[a]; }

  // [x_a, x_b] as an exact combination of basis elements.
  const std::vector<std::pair<int, Rational>>& bracket(int a, int b) const {
    return brackets_[a][b];
  }

  // Normalized invariant form with (theta|theta) = 2.
  const Rational& form(int a, int b) const { return form_(a, b); }

  // Cartan antiinvolution: omega(x_a) = omega_coef(a) * x_{omega_index(a)},
  // with omega(e_i) = f_i on the simple generators and omega fixing h.
  int omega_index(int a) const { return omega_index_[a]; }
  const Rational& omega_coef(int a) const { return omega_coef_[a]; }

 private:
  RootSystem rs_;
  std::vector<Element> elements_;
  std::vector<int> order_height_;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> brackets_;
  RatMat form_;
  std::vector<int> omega_index_;
  std::vector<Rational> omega_coef_;
};

inline ChevalleyBasis structure_constants(const RootSystem& rs) {
  return ChevalleyBasis::build(rs);
}
inline ChevalleyBasis structure_constants(const RootSystem& rs,
                                          ChevalleyBasis::Limits limits) {
  return ChevalleyBasis::build(rs, limits);
}

}  // namespace critchar
