#include "critchar/pbw.hpp"

#include "critchar/finite_module.hpp"

#include <stdexcept>

namespace critchar {

PbwEngine PbwEngine::finite(const ChevalleyBasis& cb, RatVec lambda_bar_fw) {
  PbwEngine eng(cb);
  eng.finite_ = true;
  eng.lambda_bar_fw_ = std::move(lambda_bar_fw);
  return eng;
}

PbwEngine PbwEngine::affine(const ChevalleyBasis& cb, const FiniteModule& emod,
                            Rational level) {
  PbwEngine eng(cb);
  eng.finite_ = false;
  eng.emod_ = &emod;
  eng.level_ = std::move(level);
  return eng;
}

bool PbwEngine::factor_le(int a, int ma, int b, int mb) const {
  if (ma != mb) return ma < mb;
  const int ka = static_cast<int>(cb_.kind(a));
  const int kb = static_cast<int>(cb_.kind(b));
  if (ka != kb) return ka < kb;
  const int ha = cb_.order_height(a);
  const int hb = cb_.order_height(b);
  if (ha != hb) return ha < hb;
  return a <= b;
}

bool PbwEngine::insertable(int elem, int mode) const {
  if (finite_) return mode == 0 && cb_.kind(elem) == ChevalleyBasis::Kind::F;
  return mode <= -1;
}

void PbwEngine::boundary(Vec& out, int elem, int mode, int eidx,
                         const Rational& coef) const {
  if (finite_) {
    // e annihilates the highest weight vector, h reads off the weight
    if (cb_.kind(elem) == ChevalleyBasis::Kind::H)
      if (const Rational v = coef * lambda_bar_fw_[cb_.element(elem).index]; v != 0)
        out[{Monomial{}, eidx}] += v;
    return;
  }
  if (mode >= 1) return;  // g tensor t C[t] annihilates E(lambda_bar)
  for (const auto& [target, c] : emod_->act(elem, eidx)) {
    if (const Rational v = coef * c; v != 0) out[{Monomial{}, target}] += v;
  }
}

void PbwEngine::accumulate(Vec& out, int elem, int mode, const Monomial& mon,
                           int eidx, const Rational& coef) const {
  if (coef == 0) return;
  if (insertable(elem, mode) &&
      (mon.empty() || factor_le(elem, mode, mon.front().first, mon.front().second))) {
    Monomial m2;
    m2.reserve(mon.size() + 1);
    m2.emplace_back(elem, mode);
    m2.insert(m2.end(), mon.begin(), mon.end());
    auto [it, inserted] = out.emplace(Key{std::move(m2), eidx}, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) out.erase(it);
    }
    return;
  }
  if (mon.empty()) {
    boundary(out, elem, mode, eidx, coef);
    return;
  }
  const auto [head, head_mode] = mon.front();
  const Monomial rest(mon.begin() + 1, mon.end());
  // X(m) Y(n) = Y(n) X(m) + [X,Y](m+n) + m delta_{m+n,0} (X|Y) K
  Vec pushed;
  accumulate(pushed, elem, mode, rest, eidx, coef);
  for (const auto& [key, c] : pushed)
    accumulate(out, head, head_mode, key.first, key.second, c);
  for (const auto& [target, c] : cb_.bracket(elem, head))
    accumulate(out, target, mode + head_mode, rest, eidx, coef * c);
  if (mode != 0 && mode + head_mode == 0) {
    const Rational central = coef * mode * cb_.form(elem, head) * level_;
    if (central != 0) {
      auto [it, inserted] = out.emplace(Key{rest, eidx}, central);
      if (!inserted) {
        it->second += central;
        if (it->second == 0) out.erase(it);
      }
    }
  }
}

PbwEngine::Vec PbwEngine::apply(int elem, int mode, const Vec& v) const {
  Vec out;
  for (const auto& [key, c] : v) accumulate(out, elem, mode, key.first, key.second, c);
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

}  // namespace critchar
