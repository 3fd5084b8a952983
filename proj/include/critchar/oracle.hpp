#pragma once

#include "critchar/finite_module.hpp"
#include "critchar/formulas.hpp"

namespace critchar {

struct OracleLimits {
  int max_rank = 2;
  int max_depth_trivial = 4;  // lambda_bar = 0
  int max_depth = 3;          // otherwise
};

struct PBWMonomial {
  PbwEngine::Monomial factors;  // loop generators, modes <= -1, sorted
  int e_index = 0;              // basis vector of E(lambda_bar)
};

struct GramEntry {
  int delta_degree = 0;
  IntVec offset;
  int dim_weyl = 0;
  int rank = 0;
};

struct GramReport {
  std::string system;
  std::vector<int> lambda_bar;
  int depth = 0;
  bool complete = true;
  std::vector<GramEntry> entries;  // (degree, height, lex) order
};

// Brute-force Weyl module: an explicit PBW basis per weight space, the
// contravariant Gram matrix computed by exact normal ordering, and
// dim L(lambda)_mu read off as the Gram rank.
class WeylModuleOracle {
 public:
  WeylModuleOracle(const RootSystem& rs, const Weight& lambda,
                   OracleLimits limits = {});

  const RootSystem& root_system() const { return rs_; }
  const ChevalleyBasis& chevalley() const { return cb_; }
  const FiniteModule& finite_module() const { return emod_; }
  const Weight& highest_weight() const { return lambda_; }
  int depth_limit() const;

  // Complete monomial basis of V(lambda)_{lambda - n delta - beta}.
  std::vector<PBWMonomial> weight_space_basis(const IntVec& beta, int n) const;

  // All weight spaces of the slice at delta degree n, keyed by offset.
  std::map<IntVec, std::vector<PBWMonomial>, HeightLexLess> slice_bases(int n) const;

  RatMat gram_matrix(const IntVec& beta, int n) const;
  RatMat gram_matrix(const std::vector<PBWMonomial>& basis) const;

  // x_elem(mode) applied to a vector, in canonical PBW form; checks that the
  // result respects the delta- and weight-grading.
  PbwEngine::Vec apply_generator(int elem, int mode, const PbwEngine::Vec& v) const;

  GramReport simple_quotient_dims(int depth) const;

 private:
  IntVec loop_offset(const PbwEngine::Monomial& mon) const;
  int loop_degree(const PbwEngine::Monomial& mon) const;

  RootSystem rs_;
  Weight lambda_;
  OracleLimits limits_;
  ChevalleyBasis cb_;
  FiniteModule emod_;
  PbwEngine engine_;
};

GramReport simple_quotient_dims(const RootSystem& rs, const Weight& lambda,
                                int depth, OracleLimits limits = {});

// Gram ranks against the critical character, weight by weight.
VerificationReport compare_oracle_vs_formula(const RootSystem& rs,
                                             const Weight& lambda, int depth,
                                             OracleLimits limits = {});

// Weyl module dimensions from the PBW enumeration against the
// weyl_module_character coefficients, weight by weight.
VerificationReport compare_pbw_vs_weyl_module(const RootSystem& rs,
                                              const Weight& lambda, int depth,
                                              OracleLimits limits = {});

}  // namespace critchar
