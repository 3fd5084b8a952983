#pragma once

#include "critchar/root_system.hpp"

namespace critchar {

struct WeylElement {
  std::vector<int> word;  // reduced expression, simple reflection indices
  int length = 0;
  IntMat fw_matrix;    // action on fundamental-weight coordinates
  IntMat root_matrix;  // action on root-basis coordinates
};

inline int sign(const WeylElement& w) { return w.length % 2 == 0 ? 1 : -1; }

// The full Weyl group, identity first, then by increasing length; words are
// reduced because elements are discovered by breadth-first search over the
// Cayley graph of the simple reflections.
std::vector<WeylElement> weyl_group(const RootSystem& rs,
                                    std::size_t cap = 1000000);

// w(mu) on the finite part; Lambda0 and delta are fixed.
Weight weyl_action(const RootSystem& rs, const WeylElement& w, const Weight& mu);

// w . lambda = w(lambda + rho) - rho with rho = rho_bar + h_dual * Lambda0.
Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

// Number of positive roots sent negative; equals the Coxeter length.
int inversion_count(const RootSystem& rs, const WeylElement& w);

// Fundamental-weight coordinates of the dominant representative of fw.
RatVec dominant_representative(const RootSystem& rs, RatVec fw);
// Likewise for the antidominant representative (the w0-image for dominant fw).
RatVec antidominant_representative(const RootSystem& rs, RatVec fw);

}  // namespace critchar
