#pragma once

#include "critchar/formulas.hpp"
#include "critchar/oracle.hpp"

#include <string>

namespace critchar {

inline constexpr const char* kFormatTag = "critchar.v1";

enum class OutputFormat { Table, Records, Csv };

struct CharacterMeta {
  std::string formula;  // main | generic | weyl-module | endring
  std::string system;
  std::vector<int> lambda_bar;
  int level = 0;
  int depth = 0;
  int height_cutoff = -1;  // generic formula only
};

std::string render_character(const AffineCharacter& c, const CharacterMeta& meta,
                             OutputFormat format);
std::string render_qdims(const QSeries& s, const CharacterMeta& meta,
                         OutputFormat format);
std::string render_report(const VerificationReport& rep, OutputFormat format);
std::string render_gram_report(const GramReport& rep, OutputFormat format);
// Row-major exact matrices for every weight space, for external audit.
std::string render_gram_matrices(const WeylModuleOracle& oracle, int depth);

// Character comparison against a records file (the Records format above);
// used by sweep expectation fixtures.
VerificationReport compare_with_records_file(const AffineCharacter& c,
                                             const std::string& path);

}  // namespace critchar
