#pragma once

#include "critchar/affine_character.hpp"

#include <optional>
#include <string>

namespace critchar {

struct Discrepancy {
  int slice = 0;
  IntVec offset;
  Integer expected;
  Integer actual;
};

struct VerificationReport {
  std::string identity;
  std::string system;
  std::vector<int> lambda_bar;
  int truncation = 0;
  bool exact_match = false;
  std::optional<Discrepancy> first_discrepancy;
};

// ch V(lambda): ch E(lambda_bar) times the inverse factors
// (1-q^{-n})^{-l} prod_{beta in Delta_bar} (1-q^{-n} e^{-beta})^{-1}, n >= 1.
AffineCharacter weyl_module_character(const RootSystem& rs, const Weight& lambda,
                                      int truncation);

// ch L(lambda) at the critical level: ch E(lambda_bar) times the n >= 1 real
// root factors times prod_{alpha > 0} (1 - q^{-<lambda+rho, alpha^vee>})^{-1}.
AffineCharacter critical_character(const RootSystem& rs, const Weight& lambda,
                                   int truncation);

// Generic-weight character: e^{lambda} / prod_{alpha real > 0} (1-e^{-alpha}).
// Slices are not finitely supported, so offsets are computed exactly for all
// finite heights <= height_cutoff; pass height_cutoff < 0 for the default.
AffineCharacter generic_character(const RootSystem& rs, const Weight& lambda,
                                  int truncation, int height_cutoff = -1);
int default_height_cutoff(const RootSystem& rs, int truncation);

// ch R: prod_{alpha>0}(1 - q^{-<lambda+rho,alpha^vee>}) / prod_j (1-q^{-j})^l.
QSeries endring_character(const RootSystem& rs, const Weight& lambda,
                          int truncation);

// Multiplicities m_n solving ch V(lambda) = sum_n m_n q^{-n} ch L(lambda),
// by triangular division along the beta = 0 column.
QSeries decomposition_multiplicities(const RootSystem& rs, const Weight& lambda,
                                     int truncation);

// ch V(lambda) == endring * ch L(lambda), slice by slice.
VerificationReport verify_factorization(const RootSystem& rs, const Weight& lambda,
                                        int truncation);

// decomposition_multiplicities reconstructs ch V exactly, equals the endring
// series coefficientwise, and is non-negative.
VerificationReport verify_decomposition(const RootSystem& rs, const Weight& lambda,
                                        int truncation);

// critical_character <= generic_character coefficientwise within the window.
VerificationReport check_upper_bound(const RootSystem& rs, const Weight& lambda,
                                     int truncation, int height_cutoff = -1);

}  // namespace critchar
