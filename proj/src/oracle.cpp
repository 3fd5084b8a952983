#include "critchar/oracle.hpp"

#include "critchar/exact_linalg.hpp"

#include <stdexcept>

namespace critchar {

namespace {

IntVec lambda_fw_ints(const Weight& lambda) {
  IntVec out(lambda.finite.size());
  for (Eigen::Index i = 0; i < lambda.finite.size(); ++i)
    out[i] = static_cast<int>(rational_to_integer(lambda.finite[i]));
  return out;
}

std::vector<int> lambda_ints(const Weight& lambda) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < lambda.finite.size(); ++i)
    out.push_back(static_cast<int>(rational_to_integer(lambda.finite[i])));
  return out;
}

}  // namespace

WeylModuleOracle::WeylModuleOracle(const RootSystem& rs, const Weight& lambda,
                                   OracleLimits limits)
    : rs_(rs),
      lambda_(lambda),
      limits_(limits),
      cb_(ChevalleyBasis::build(rs, {limits.max_rank})),
      emod_(cb_, lambda_fw_ints(lambda)),
      engine_(PbwEngine::affine(cb_, emod_, lambda.level)) {
  if (!is_admissible_highest_weight(rs_, lambda_))
    throw std::invalid_argument("oracle: weight is not admissible");
}

int WeylModuleOracle::depth_limit() const {
  const bool trivial = lambda_fw_ints(lambda_).isZero();
  return trivial ? limits_.max_depth_trivial : limits_.max_depth;
}

IntVec WeylModuleOracle::loop_offset(const PbwEngine::Monomial& mon) const {
  IntVec off = IntVec::Zero(rs_.rank());
  for (const auto& [elem, mode] : mon) off -= cb_.root(elem);
  return off;
}

int WeylModuleOracle::loop_degree(const PbwEngine::Monomial& mon) const {
  int n = 0;
  for (const auto& [elem, mode] : mon) n -= mode;
  return n;
}

std::map<IntVec, std::vector<PBWMonomial>, HeightLexLess>
WeylModuleOracle::slice_bases(int n) const {
  // Factor alphabet: every basis element at every mode -1..-n, listed in the
  // canonical PBW order; monomials are non-decreasing sequences over it.
  std::vector<std::pair<int, int>> alphabet;
  for (int mode = -n; mode <= -1; ++mode)
    for (int a = 0; a < cb_.dim(); ++a) alphabet.emplace_back(a, mode);
  std::sort(alphabet.begin(), alphabet.end(), [&](const auto& x, const auto& y) {
    return !engine_.factor_le(y.first, y.second, x.first, x.second);
  });

  std::map<IntVec, std::vector<PBWMonomial>, HeightLexLess> out;
  std::vector<PbwEngine::Monomial> loops;
  PbwEngine::Monomial current;
  const auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
    if (remaining == 0) {
      loops.push_back(current);
      return;
    }
    for (size_t p = pos; p < alphabet.size(); ++p) {
      const int cost = -alphabet[p].second;
      if (cost > remaining) continue;
      current.push_back(alphabet[p]);
      self(self, p, remaining - cost);
      current.pop_back();
    }
  };
  rec(rec, 0, n);

  for (const auto& mon : loops) {
    const IntVec base_off = loop_offset(mon);
    for (int e = 0; e < emod_.dim(); ++e) {
      PBWMonomial m;
      m.factors = mon;
      m.e_index = e;
      out[base_off + emod_.offset_of(e)].push_back(std::move(m));
    }
  }
  return out;
}

std::vector<PBWMonomial> WeylModuleOracle::weight_space_basis(const IntVec& beta,
                                                              int n) const {
  if (n < 0 || n > depth_limit())
    throw std::invalid_argument("weight_space_basis: depth beyond the bound");
  auto bases = slice_bases(n);
  auto it = bases.find(beta);
  return it == bases.end() ? std::vector<PBWMonomial>{} : std::move(it->second);
}

PbwEngine::Vec WeylModuleOracle::apply_generator(int elem, int mode,
                                                 const PbwEngine::Vec& v) const {
  PbwEngine::Vec out = engine_.apply(elem, mode, v);
  // Grading check: X(m) shifts the weight by (root(X), -m).
  if (!v.empty()) {
    const auto& [key0, c0] = *v.begin();
    const IntVec in_off = loop_offset(key0.first) + emod_.offset_of(key0.second);
    const int in_deg = loop_degree(key0.first);
    for (const auto& [key, c] : v) {
      if (loop_offset(key.first) + emod_.offset_of(key.second) != in_off ||
          loop_degree(key.first) != in_deg)
        throw std::invalid_argument("apply_generator: input is not homogeneous");
    }
    const IntVec expect_off = in_off - cb_.root(elem);
    const int expect_deg = in_deg - mode;
    for (const auto& [key, c] : out) {
      if (loop_offset(key.first) + emod_.offset_of(key.second) != expect_off ||
          loop_degree(key.first) != expect_deg)
        throw std::logic_error("apply_generator: grading violated");
    }
  }
  return out;
}

RatMat WeylModuleOracle::gram_matrix(const std::vector<PBWMonomial>& basis) const {
  const int m = static_cast<int>(basis.size());
  RatMat gram(m, m);
  std::vector<PbwEngine::Vec> pushed(m);
  for (int j = 0; j < m; ++j) {
    PbwEngine::Vec vec;
    vec[{basis[j].factors, basis[j].e_index}] = 1;
    pushed[j] = std::move(vec);
  }
  for (int i = 0; i < m; ++i) {
    // omega(m_i) applied factor by factor; omega reverses products, so the
    // leftmost factor of m_i acts first.
    for (int j = 0; j < m; ++j) {
      PbwEngine::Vec vec = pushed[j];
      Rational si = 1;
      for (const auto& [elem, mode] : basis[i].factors) {
        si *= cb_.omega_coef(elem);
        vec = engine_.apply(cb_.omega_index(elem), -mode, vec);
        if (vec.empty()) break;
      }
      Rational entry = 0;
      for (const auto& [key, c] : vec) {
        if (!key.first.empty()) continue;
        entry += c * emod_.form(basis[i].e_index, key.second);
      }
      gram(i, j) = si * entry;
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (gram(i, j) != gram(j, i))
        throw std::logic_error("gram_matrix: contravariant form not symmetric");
  return gram;
}

RatMat WeylModuleOracle::gram_matrix(const IntVec& beta, int n) const {
  return gram_matrix(weight_space_basis(beta, n));
}

GramReport WeylModuleOracle::simple_quotient_dims(int depth) const {
  GramReport report;
  report.system = rs_.label();
  report.lambda_bar = lambda_ints(lambda_);
  const int computed = std::min(depth, depth_limit());
  report.depth = computed;
  report.complete = computed == depth;
  for (int n = 0; n <= computed; ++n) {
    for (const auto& [beta, basis] : slice_bases(n)) {
      GramEntry entry;
      entry.delta_degree = n;
      entry.offset = beta;
      entry.dim_weyl = static_cast<int>(basis.size());
      entry.rank = static_cast<int>(bareiss_rank_rational(gram_matrix(basis)));
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

GramReport simple_quotient_dims(const RootSystem& rs, const Weight& lambda,
                                int depth, OracleLimits limits) {
  WeylModuleOracle oracle(rs, lambda, limits);
  return oracle.simple_quotient_dims(depth);
}

VerificationReport compare_oracle_vs_formula(const RootSystem& rs,
                                             const Weight& lambda, int depth,
                                             OracleLimits limits) {
  VerificationReport rep;
  rep.identity = "oracle-compare";
  rep.system = rs.label();
  rep.lambda_bar = lambda_ints(lambda);
  rep.exact_match = true;

  const GramReport gr = simple_quotient_dims(rs, lambda, depth, limits);
  rep.truncation = gr.depth;
  const AffineCharacter ch = critical_character(rs, lambda, gr.depth);

  for (int n = 0; n <= gr.depth && rep.exact_match; ++n) {
    std::map<IntVec, std::pair<Integer, Integer>, HeightLexLess> merged;
    for (const GramEntry& e : gr.entries)
      if (e.delta_degree == n) merged[e.offset].second = e.rank;
    for (const auto& [off, v] : ch.slice(n).terms()) merged[off].first = v;
    for (const auto& [off, pair] : merged) {
      if (pair.first != pair.second) {
        rep.exact_match = false;
        Discrepancy d;
        d.slice = n;
        d.offset = off;
        d.expected = pair.second;  // oracle rank is the reference
        d.actual = pair.first;
        rep.first_discrepancy = std::move(d);
        break;
      }
    }
  }
  return rep;
}

VerificationReport compare_pbw_vs_weyl_module(const RootSystem& rs,
                                              const Weight& lambda, int depth,
                                              OracleLimits limits) {
  VerificationReport rep;
  rep.identity = "pbw-dimensions";
  rep.system = rs.label();
  rep.lambda_bar = lambda_ints(lambda);
  rep.exact_match = true;

  WeylModuleOracle oracle(rs, lambda, limits);
  const int computed = std::min(depth, oracle.depth_limit());
  rep.truncation = computed;
  const AffineCharacter ch = weyl_module_character(rs, lambda, computed);

  for (int n = 0; n <= computed && rep.exact_match; ++n) {
    std::map<IntVec, std::pair<Integer, Integer>, HeightLexLess> merged;
    for (const auto& [beta, basis] : oracle.slice_bases(n))
      merged[beta].second = static_cast<int>(basis.size());
    for (const auto& [off, v] : ch.slice(n).terms()) merged[off].first = v;
    for (const auto& [off, pair] : merged) {
      if (pair.first != pair.second) {
        rep.exact_match = false;
        Discrepancy d;
        d.slice = n;
        d.offset = off;
        d.expected = pair.second;
        d.actual = pair.first;
        rep.first_discrepancy = std::move(d);
        break;
      }
    }
  }
  return rep;
}

}  // namespace critchar
