#pragma once

#include "critchar/numeric.hpp"

#include <set>
#include <string>
#include <vector>

namespace critchar {

// An element of the affine Cartan dual: a finite part in fundamental-weight
// coordinates, a Lambda0 coefficient (the level) and a delta coefficient.
struct Weight {
  RatVec finite;
  Rational level{0};
  Rational delta{0};
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
bool operator==(const Weight& a, const Weight& b);

// A positive real root: a finite root (root-basis coordinates) plus a
// delta degree. Imaginary roots (zero finite part, degree >= 1) are never
// members of the real root set.
struct AffineRoot {
  IntVec finite;
  int delta_degree = 0;
};

// Finite simple root system with the derived data every formula consumes.
// Immutable after construction; safe to share across threads.
class RootSystem {
 public:
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  const IntMat& cartan() const { return cartan_; }
  const RatMat& cartan_inverse() const { return cartan_inv_; }

  // (alpha_i | alpha_i) / 2, normalized so the highest root has norm 2.
  const std::vector<Rational>& symmetrizers() const { return sym_; }

  // Positive roots in root-basis coordinates, sorted by (height, lex).
  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
  const IntVec& highest_root() const { return highest_root_; }
  int positive_root_index(const IntVec& root) const;
  bool is_root(const IntVec& v) const { return root_set_.count(v) > 0; }

  // gamma^vee in the simple-coroot basis; integer coordinates.
  const std::vector<IntVec>& coroot_coords() const { return coroot_coords_; }
  const std::vector<Rational>& root_norms() const { return root_norms_; }

  int dual_coxeter() const { return dual_coxeter_; }
  const std::vector<int>& exponents() const { return exponents_; }

  // rho_bar in fundamental-weight coordinates (all ones).
  IntVec rho_bar_finite() const { return IntVec::Ones(rank_); }

  static int height(const IntVec& root) { return root.sum(); }
  IntVec fw_of_root(const IntVec& root) const { return cartan_ * root; }

  // Exact root-basis coordinates of an integral-lattice element given in
  // fundamental-weight coordinates; throws if not in the root lattice.
  IntVec root_coords_of(const RatVec& fw) const;

  // Invariant form between weights (fundamental-weight coordinates).
  Rational form_weight_weight(const RatVec& a, const RatVec& b) const;
  // Invariant form between a weight and a root-lattice element.
  Rational form_weight_root(const RatVec& fw, const IntVec& root) const;
  Rational form_root_root(const IntVec& a, const IntVec& b) const;

  // <mu, alpha^vee> for a finite root alpha given in root-basis coordinates.
  Rational pairing_coroot(const Weight& mu, const IntVec& alpha) const;
  Rational pairing_coroot_finite(const RatVec& fw, const IntVec& alpha) const;

  std::string debug_dump() const;

 private:
  char type_ = 0;
  int rank_ = 0;
  IntMat cartan_;
  RatMat cartan_inv_;
  std::vector<Rational> sym_;
  RatMat fw_form_;
  std::vector<IntVec> positive_roots_;
  std::set<IntVec, LexLess> root_set_;
  std::map<IntVec, int, LexLess> positive_index_;
  std::vector<Rational> root_norms_;
  std::vector<IntVec> coroot_coords_;
  IntVec highest_root_;
  int dual_coxeter_ = 0;
  std::vector<int> exponents_;
};

inline RootSystem build_root_system(char type, int rank) {
  return RootSystem::build(type, rank);
}

// Pairings against the affine Cartan elements K and D.
enum class CartanElem { K, D };
Rational pairing(const RootSystem& rs, const Weight& mu, const IntVec& alpha);
Rational pairing(const Weight& mu, CartanElem h);

// Delta_bar+ at degree 0 together with beta + n*delta for every nonzero
// finite root beta and 1 <= n <= n_max.
std::vector<AffineRoot> positive_real_roots(const RootSystem& rs, int n_max);

// lambda_bar - h_dual * Lambda0 with <lambda, D> = 0.
Weight critical_weight(const RootSystem& rs, const IntVec& lambda_bar_fw);

bool is_dominant_integral(const RootSystem& rs, const RatVec& fw);
bool is_admissible_highest_weight(const RootSystem& rs, const Weight& lambda);

}  // namespace critchar
