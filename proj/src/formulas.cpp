#include "critchar/formulas.hpp"

#include <stdexcept>

namespace critchar {

namespace {

void require_admissible(const RootSystem& rs, const Weight& lambda,
                        const char* who) {
  if (!is_admissible_highest_weight(rs, lambda))
    throw std::invalid_argument(std::string(who) +
                                ": weight is not admissible (dominant integral "
                                "finite part at level -h_dual)");
}

std::vector<int> lambda_ints(const Weight& lambda) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < lambda.finite.size(); ++i)
    out.push_back(static_cast<int>(rational_to_integer(lambda.finite[i])));
  return out;
}

IntVec lambda_fw(const Weight& lambda) {
  IntVec out(lambda.finite.size());
  for (Eigen::Index i = 0; i < lambda.finite.size(); ++i)
    out[i] = static_cast<int>(rational_to_integer(lambda.finite[i]));
  return out;
}

// Shared helper: seed with ch E(lambda_bar) at slice 0 and apply the
// n >= 1 factors (1 - q^{-n} e^{-beta})^{-1} for every nonzero finite root.
AffineCharacter loop_factors_times_finite(const RootSystem& rs,
                                          const Weight& lambda, int truncation) {
  AffineCharacter c(rs.type(), rs.rank(), lambda, truncation);
  c.slice(0) = finite_weyl_character(rs, lambda_fw(lambda));
  for (int n = 1; n <= truncation; ++n) {
    for (const IntVec& alpha : rs.positive_roots()) {
      c = mul_inverse_factor(c, alpha, n, 1);
      c = mul_inverse_factor(c, IntVec(-alpha), n, 1);
    }
  }
  return c;
}

VerificationReport make_report(const char* identity, const RootSystem& rs,
                               const Weight& lambda, int truncation) {
  VerificationReport rep;
  rep.identity = identity;
  rep.system = rs.label();
  rep.lambda_bar = lambda_ints(lambda);
  rep.truncation = truncation;
  rep.exact_match = true;
  return rep;
}

void record_mismatch(VerificationReport& rep, int slice, const IntVec& offset,
                     Integer expected, Integer actual) {
  if (!rep.exact_match) return;
  rep.exact_match = false;
  Discrepancy d;
  d.slice = slice;
  d.offset = offset;
  d.expected = std::move(expected);
  d.actual = std::move(actual);
  rep.first_discrepancy = std::move(d);
}

// Slice-by-slice comparison with the first discrepancy reported in
// (slice, height, lex) order.
void compare_characters(VerificationReport& rep, const AffineCharacter& expected,
                        const AffineCharacter& actual) {
  const int n = std::min(expected.truncation(), actual.truncation());
  for (int k = 0; k <= n && rep.exact_match; ++k) {
    std::map<IntVec, std::pair<Integer, Integer>, HeightLexLess> merged;
    for (const auto& [off, v] : expected.slice(k).terms())
      merged[off].first = v;
    for (const auto& [off, v] : actual.slice(k).terms()) merged[off].second = v;
    for (const auto& [off, pair] : merged) {
      if (pair.first != pair.second) {
        record_mismatch(rep, k, off, pair.first, pair.second);
        break;
      }
    }
  }
}

}  // namespace

AffineCharacter weyl_module_character(const RootSystem& rs, const Weight& lambda,
                                      int truncation) {
  require_admissible(rs, lambda, "weyl_module_character");
  AffineCharacter c = loop_factors_times_finite(rs, lambda, truncation);
  const IntVec zero = IntVec::Zero(rs.rank());
  for (int n = 1; n <= truncation; ++n)
    c = mul_inverse_factor(c, zero, n, rs.rank());
  return c;
}

AffineCharacter critical_character(const RootSystem& rs, const Weight& lambda,
                                   int truncation) {
  require_admissible(rs, lambda, "critical_character");
  AffineCharacter c = loop_factors_times_finite(rs, lambda, truncation);
  const IntVec zero = IntVec::Zero(rs.rank());
  Weight rho;
  rho.finite = to_rational(rs.rho_bar_finite());
  rho.level = rs.dual_coxeter();
  for (const IntVec& alpha : rs.positive_roots()) {
    const Integer k = rational_to_integer(rs.pairing_coroot(lambda + rho, alpha));
    if (k < 1)
      throw std::logic_error("critical_character: non-positive exponent");
    if (k <= truncation)
      c = mul_inverse_factor(c, zero, static_cast<int>(k), 1);
  }
  return c;
}

int default_height_cutoff(const RootSystem& rs, int truncation) {
  return truncation * RootSystem::height(rs.highest_root()) + 10;
}

AffineCharacter generic_character(const RootSystem& rs, const Weight& lambda,
                                  int truncation, int height_cutoff) {
  if (height_cutoff < 0) height_cutoff = default_height_cutoff(rs, truncation);
  AffineCharacter c(rs.type(), rs.rank(), lambda, truncation);
  c.slice(0) = unit_finite_character(rs.rank());

  // Phase 1: the n >= 1 real root factors. Slice supports stay inside a
  // finite box (the delta budget bounds every coordinate), so this phase is
  // exact with no cutoff.
  for (int n = 1; n <= truncation; ++n) {
    for (const IntVec& alpha : rs.positive_roots()) {
      c = mul_inverse_factor(c, alpha, n, 1);
      c = mul_inverse_factor(c, IntVec(-alpha), n, 1);
    }
  }

  // Phase 2: the degree-zero cone factors (1 - e^{-alpha})^{-1}. These only
  // increase offset height, so pruning above the cutoff is exact for every
  // reported coefficient of height <= height_cutoff.
  for (int k = 0; k <= truncation; ++k) {
    std::map<IntVec, Integer, HeightLexLess> work;
    for (const auto& [off, v] : c.slice(k).terms())
      if (off.sum() <= height_cutoff) work[off] = v;
    for (const IntVec& alpha : rs.positive_roots()) {
      for (auto it = work.begin(); it != work.end(); ++it) {
        if (it->second == 0) continue;
        IntVec up = it->first + alpha;
        if (up.sum() > height_cutoff) continue;
        work[up] += it->second;
      }
    }
    FiniteCharacter slice;
    for (const auto& [off, v] : work) slice.add(off, v);
    c.slice(k) = std::move(slice);
  }
  return c;
}

QSeries endring_character(const RootSystem& rs, const Weight& lambda,
                          int truncation) {
  require_admissible(rs, lambda, "endring_character");
  Weight rho;
  rho.finite = to_rational(rs.rho_bar_finite());
  rho.level = rs.dual_coxeter();
  QSeries s = qseries_one(truncation);
  for (const IntVec& alpha : rs.positive_roots()) {
    const Integer k = rational_to_integer(rs.pairing_coroot(lambda + rho, alpha));
    if (k >= 1 && k <= truncation)
      s = qseries_mul_power_factor(std::move(s), static_cast<int>(k), 1);
  }
  for (int j = 1; j <= truncation; ++j)
    s = qseries_mul_power_factor(std::move(s), j, -rs.rank());
  return s;
}

QSeries decomposition_multiplicities(const RootSystem& rs, const Weight& lambda,
                                     int truncation) {
  require_admissible(rs, lambda, "decomposition_multiplicities");
  const AffineCharacter v = weyl_module_character(rs, lambda, truncation);
  const AffineCharacter l = critical_character(rs, lambda, truncation);
  const IntVec zero = IntVec::Zero(rs.rank());
  QSeries m;
  m.coeffs.assign(truncation + 1, Integer(0));
  for (int n = 0; n <= truncation; ++n) {
    Integer acc = coefficient(v, zero, n);
    for (int k = 0; k < n; ++k) acc -= m.coeffs[k] * coefficient(l, zero, n - k);
    // the leading coefficient of ch L along the beta = 0 column is 1
    m.coeffs[n] = acc;
  }
  return m;
}

VerificationReport verify_factorization(const RootSystem& rs, const Weight& lambda,
                                        int truncation) {
  require_admissible(rs, lambda, "verify_factorization");
  VerificationReport rep = make_report("factorization", rs, lambda, truncation);
  const AffineCharacter v = weyl_module_character(rs, lambda, truncation);
  const AffineCharacter l = critical_character(rs, lambda, truncation);
  const QSeries r = endring_character(rs, lambda, truncation);

  AffineCharacter product(rs.type(), rs.rank(), lambda, truncation);
  for (int n = 0; n <= truncation; ++n) {
    FiniteCharacter s;
    for (int k = 0; k <= n; ++k)
      s = s + scaled(l.slice(n - k), r.coeffs[k]);
    product.slice(n) = std::move(s);
  }
  compare_characters(rep, v, product);
  return rep;
}

VerificationReport verify_decomposition(const RootSystem& rs, const Weight& lambda,
                                        int truncation) {
  require_admissible(rs, lambda, "verify_decomposition");
  VerificationReport rep = make_report("multiplicities", rs, lambda, truncation);
  const QSeries m = decomposition_multiplicities(rs, lambda, truncation);
  const QSeries r = endring_character(rs, lambda, truncation);
  const IntVec zero = IntVec::Zero(rs.rank());
  for (int n = 0; n <= truncation; ++n) {
    if (m.coeffs[n] != r.coeffs[n]) {
      record_mismatch(rep, n, zero, r.coeffs[n], m.coeffs[n]);
      return rep;
    }
    if (m.coeffs[n] < 0) {
      record_mismatch(rep, n, zero, Integer(0), m.coeffs[n]);
      return rep;
    }
  }
  // Remainder check: the multiplicities must reconstruct every slice of
  // ch V, not just the beta = 0 column.
  const AffineCharacter v = weyl_module_character(rs, lambda, truncation);
  const AffineCharacter l = critical_character(rs, lambda, truncation);
  AffineCharacter rebuilt(rs.type(), rs.rank(), lambda, truncation);
  for (int n = 0; n <= truncation; ++n) {
    FiniteCharacter s;
    for (int k = 0; k <= n; ++k) s = s + scaled(l.slice(n - k), m.coeffs[k]);
    rebuilt.slice(n) = std::move(s);
  }
  compare_characters(rep, v, rebuilt);
  return rep;
}

VerificationReport check_upper_bound(const RootSystem& rs, const Weight& lambda,
                                     int truncation, int height_cutoff) {
  require_admissible(rs, lambda, "check_upper_bound");
  if (height_cutoff < 0) height_cutoff = default_height_cutoff(rs, truncation);
  VerificationReport rep = make_report("upper-bound", rs, lambda, truncation);
  const AffineCharacter l = critical_character(rs, lambda, truncation);
  const AffineCharacter g = generic_character(rs, lambda, truncation, height_cutoff);
  for (int n = 0; n <= truncation && rep.exact_match; ++n) {
    std::map<IntVec, std::pair<Integer, Integer>, HeightLexLess> merged;
    for (const auto& [off, v] : l.slice(n).terms())
      if (off.sum() <= height_cutoff) merged[off].first = v;
    for (const auto& [off, v] : g.slice(n).terms())
      if (off.sum() <= height_cutoff) merged[off].second = v;
    for (const auto& [off, pair] : merged) {
      if (pair.first > pair.second) {
        record_mismatch(rep, n, off, pair.second, pair.first);
        break;
      }
    }
  }
  return rep;
}

}  // namespace critchar
