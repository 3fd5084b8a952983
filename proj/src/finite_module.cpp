#include "critchar/finite_module.hpp"

#include "critchar/exact_linalg.hpp"
#include "critchar/weyl.hpp"

#include <stdexcept>

namespace critchar {

namespace {

using Monomial = PbwEngine::Monomial;

struct VermaSpace {
  IntVec offset;
  std::vector<Monomial> monomials;  // all f-monomials of this weight
  RatMat gram;                      // Shapovalov form on them
  std::vector<int> selected;        // basis of the quotient
};

void enumerate_monomials(const ChevalleyBasis& cb, int t, IntVec remaining,
                         Monomial& current, std::vector<Monomial>& out) {
  if (remaining.isZero()) {
    out.push_back(current);
    return;
  }
  const auto& roots = cb.root_system().positive_roots();
  if (t == static_cast<int>(roots.size())) return;
  enumerate_monomials(cb, t + 1, remaining, current, out);
  IntVec next = remaining - roots[t];
  bool fits = true;
  for (Eigen::Index i = 0; i < next.size(); ++i)
    if (next[i] < 0) fits = false;
  if (fits) {
    current.emplace_back(cb.f_index(t), 0);
    enumerate_monomials(cb, t, next, current, out);
    current.pop_back();
  }
}

// <m_i v, m_j v>: push omega(m_i) through m_j v and read off the
// coefficient of the highest weight vector.
Rational shapovalov_entry(const PbwEngine& engine, const Monomial& mi,
                          const Monomial& mj) {
  const ChevalleyBasis& cb = engine.chevalley();
  PbwEngine::Vec vec;
  vec[{mj, 0}] = 1;
  Rational scalar = 1;
  for (const auto& [elem, mode] : mi) {
    scalar *= cb.omega_coef(elem);
    vec = engine.apply(cb.omega_index(elem), -mode, vec);
    if (vec.empty()) return 0;
  }
  auto it = vec.find({Monomial{}, 0});
  return it == vec.end() ? Rational(0) : scalar * it->second;
}

}  // namespace

FiniteModule::FiniteModule(const ChevalleyBasis& cb, const IntVec& lambda_bar_fw)
    : cb_(cb), lambda_bar_fw_(lambda_bar_fw) {
  const RootSystem& rs = cb.root_system();
  const int l = rs.rank();
  const RatVec lam = to_rational(lambda_bar_fw);
  if (!is_dominant_integral(rs, lam))
    throw std::invalid_argument("FiniteModule: weight is not dominant integral");

  const PbwEngine engine = PbwEngine::finite(cb, lam);
  const IntVec box =
      rs.root_coords_of(rat_sub(lam, antidominant_representative(rs, lam)));

  std::vector<IntVec> box_offsets;
  {
    IntVec beta = IntVec::Zero(l);
    while (true) {
      box_offsets.push_back(beta);
      int i = 0;
      while (i < l) {
        beta[i] += 1;
        if (beta[i] <= box[i]) break;
        beta[i] = 0;
        ++i;
      }
      if (i == l) break;
    }
  }
  std::sort(box_offsets.begin(), box_offsets.end(), HeightLexLess{});

  std::map<IntVec, VermaSpace, LexLess> verma;
  for (const IntVec& beta : box_offsets) {
    VermaSpace space;
    space.offset = beta;
    Monomial scratch;
    enumerate_monomials(cb, 0, beta, scratch, space.monomials);
    const int m = static_cast<int>(space.monomials.size());
    if (m == 0) continue;
    space.gram.resize(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        space.gram(i, j) =
            shapovalov_entry(engine, space.monomials[i], space.monomials[j]);
        space.gram(j, i) = space.gram(i, j);
      }
    const Eigen::Index rank = bareiss_rank_rational(space.gram);
    for (int j = 0; j < m && static_cast<Eigen::Index>(space.selected.size()) < rank; ++j) {
      std::vector<int> cand = space.selected;
      cand.push_back(j);
      RatMat minor(cand.size(), cand.size());
      for (size_t r = 0; r < cand.size(); ++r)
        for (size_t c = 0; c < cand.size(); ++c)
          minor(r, c) = space.gram(cand[r], cand[c]);
      if (bareiss_rank_rational(minor) == static_cast<Eigen::Index>(cand.size()))
        space.selected = std::move(cand);
    }
    if (static_cast<Eigen::Index>(space.selected.size()) != rank)
      throw std::logic_error("FiniteModule: no nonsingular principal block");
    if (rank > 0) verma.emplace(beta, std::move(space));
  }

  // Global basis indexing, weight by weight.
  std::map<IntVec, std::vector<int>, LexLess> global;
  for (const auto& [beta, space] : verma) {
    std::vector<int> ids;
    for (size_t k = 0; k < space.selected.size(); ++k) {
      ids.push_back(static_cast<int>(offsets_.size()));
      offsets_.push_back(beta);
    }
    global[beta] = std::move(ids);
  }
  spaces_ = global;

  const int n = dim();
  form_ = rat_zero(n, n);
  for (const auto& [beta, space] : verma) {
    const auto& ids = global[beta];
    for (size_t r = 0; r < ids.size(); ++r)
      for (size_t c = 0; c < ids.size(); ++c)
        form_(ids[r], ids[c]) = space.gram(space.selected[r], space.selected[c]);
  }

  // Action of every basis element, computed in the Verma module and
  // projected to the quotient through the Gram pairing.
  action_.assign(cb.dim(), std::vector<std::vector<std::pair<int, Rational>>>(n));
  for (int a = 0; a < cb.dim(); ++a) {
    for (const auto& [beta, space] : verma) {
      const auto& ids = global[beta];
      const IntVec target_offset = beta - cb.root(a);
      auto target_it = verma.find(target_offset);
      for (size_t k = 0; k < ids.size(); ++k) {
        if (target_it == verma.end()) continue;  // zero in the quotient
        const VermaSpace& target = target_it->second;
        PbwEngine::Vec start;
        start[{space.monomials[space.selected[k]], 0}] = 1;
        const PbwEngine::Vec image = engine.apply(a, 0, start);
        // pair the image against the selected monomials of the target space
        const int sel = static_cast<int>(target.selected.size());
        RatVec rhs = rat_vec_zero(sel);
        std::map<Monomial, int> index_of;
        for (int m = 0; m < static_cast<int>(target.monomials.size()); ++m)
          index_of[target.monomials[m]] = m;
        for (const auto& [key, c] : image) {
          auto it = index_of.find(key.first);
          if (it == index_of.end())
            throw std::logic_error("FiniteModule: image outside the weight space");
          for (int r = 0; r < sel; ++r)
            rhs[r] += c * target.gram(target.selected[r], it->second);
        }
        RatMat gram_sel(sel, sel);
        for (int r = 0; r < sel; ++r)
          for (int c = 0; c < sel; ++c)
            gram_sel(r, c) = target.gram(target.selected[r], target.selected[c]);
        RatVec u;
        if (!gauss_solve(gram_sel, rhs, u))
          throw std::logic_error("FiniteModule: projection solve failed");
        auto& column = action_[a][ids[k]];
        const auto& target_ids = global[target_offset];
        for (int r = 0; r < sel; ++r)
          if (u[r] != 0) column.push_back({target_ids[r], u[r]});
      }
    }
  }
}

int FiniteModule::weight_dim(const IntVec& offset) const {
  auto it = spaces_.find(offset);
  return it == spaces_.end() ? 0 : static_cast<int>(it->second.size());
}

}  // namespace critchar
