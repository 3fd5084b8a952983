#include "critchar/finite_character.hpp"

#include <stdexcept>

namespace critchar {

FiniteCharacter operator+(const FiniteCharacter& a, const FiniteCharacter& b) {
  FiniteCharacter out = a;
  for (const auto& [k, v] : b.terms()) out.add(k, v);
  return out;
}

FiniteCharacter operator-(const FiniteCharacter& a, const FiniteCharacter& b) {
  FiniteCharacter out = a;
  for (const auto& [k, v] : b.terms()) out.add(k, -v);
  return out;
}

FiniteCharacter scaled(const FiniteCharacter& a, const Integer& c) {
  FiniteCharacter out;
  if (c == 0) return out;
  for (const auto& [k, v] : a.terms()) out.add(k, v * c);
  return out;
}

FiniteCharacter shifted(const FiniteCharacter& a, const IntVec& beta) {
  FiniteCharacter out;
  for (const auto& [k, v] : a.terms()) out.add(k + beta, v);
  return out;
}

FiniteCharacter convolve(const FiniteCharacter& a, const FiniteCharacter& b) {
  FiniteCharacter out;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms()) out.add(ka + kb, va * vb);
  return out;
}

FiniteCharacter unit_finite_character(int rank) {
  FiniteCharacter out;
  out.add(IntVec::Zero(rank), 1);
  return out;
}

IntVec weyl_image_offset(const RootSystem& rs, const WeylElement& w,
                         const RatVec& base_fw, const IntVec& beta) {
  // base - beta' = w(base - beta)
  RatVec mu = base_fw - to_rational(rs.fw_of_root(beta));
  RatVec image(mu.size());
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    Rational acc = 0;
    for (Eigen::Index j = 0; j < mu.size(); ++j)
      acc += Rational(w.fw_matrix(i, j)) * mu[j];
    image[i] = acc;
  }
  return rs.root_coords_of(rat_sub(base_fw, image));
}

namespace {

using HtMap = std::map<IntVec, Integer, HeightLexLess>;

// Exact division by (1 - x^alpha) in increasing height order. The working
// map is transformed in place: when key beta is reached it already holds the
// quotient coefficient, which is then propagated to beta + alpha. Exactness
// of the division makes the propagation chain terminate; the height guard
// turns a non-exact division into a loud failure instead of a runaway loop.
void divide_by_root_factor(HtMap& work, const IntVec& alpha, int height_guard) {
  for (auto it = work.begin(); it != work.end(); ++it) {
    if (it->second == 0) continue;
    IntVec up = it->first + alpha;
    if (up.sum() > height_guard)
      throw std::logic_error("character division is not exact");
    work[up] += it->second;
  }
  for (auto it = work.begin(); it != work.end();) {
    if (it->second == 0)
      it = work.erase(it);
    else
      ++it;
  }
}

}  // namespace

FiniteCharacter finite_weyl_character(const RootSystem& rs, const IntVec& lambda_bar_fw) {
  const RatVec lam = to_rational(lambda_bar_fw);
  if (!is_dominant_integral(rs, lam))
    throw std::invalid_argument("finite_weyl_character: weight is not dominant integral");

  const RatVec rho = to_rational(rs.rho_bar_finite());
  const RatVec lam_rho = rat_add(lam, rho);

  HtMap work;
  const auto group = weyl_group(rs);
  for (const auto& w : group) {
    RatVec image(lam_rho.size());
    for (Eigen::Index i = 0; i < image.size(); ++i) {
      Rational acc = 0;
      for (Eigen::Index j = 0; j < image.size(); ++j)
        acc += Rational(w.fw_matrix(i, j)) * lam_rho[j];
      image[i] = acc;
    }
    const IntVec offset = rs.root_coords_of(rat_sub(lam, rat_sub(image, rho)));
    work[offset] += sign(w);
  }

  // Height guard: quotient offsets stay inside the weight polytope of
  // E(lambda_bar); intermediate quotients stay within that plus the height
  // of the remaining denominator factors.
  const IntVec span =
      rs.root_coords_of(rat_sub(lam, antidominant_representative(rs, lam)));
  int guard = span.sum() + 1;
  for (const IntVec& alpha : rs.positive_roots()) guard += RootSystem::height(alpha);

  for (const IntVec& alpha : rs.positive_roots())
    divide_by_root_factor(work, alpha, guard);

  FiniteCharacter out;
  for (const auto& [k, v] : work) out.add(k, v);

  if (out.coeff(IntVec::Zero(rs.rank())) != 1)
    throw std::logic_error("finite_weyl_character: leading coefficient is not 1");
  if (out.total() != weyl_dimension(rs, lambda_bar_fw))
    throw std::logic_error("finite_weyl_character: dimension check failed");
  return out;
}

FiniteCharacter freudenthal_character(const RootSystem& rs, const IntVec& lambda_bar_fw) {
  const int l = rs.rank();
  const RatVec lam = to_rational(lambda_bar_fw);
  if (!is_dominant_integral(rs, lam))
    throw std::invalid_argument("freudenthal_character: weight is not dominant integral");
  const RatVec rho = to_rational(rs.rho_bar_finite());

  // Every weight of E(lambda_bar) lies in the coordinate box between 0 and
  // lambda_bar - w0(lambda_bar) in the root basis.
  const IntVec box =
      rs.root_coords_of(rat_sub(lam, antidominant_representative(rs, lam)));

  std::vector<IntVec> dominant_offsets;
  {
    IntVec beta = IntVec::Zero(l);
    while (true) {
      if (is_dominant_integral(rs, rat_sub(lam, to_rational(rs.fw_of_root(beta)))))
        dominant_offsets.push_back(beta);
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
  std::sort(dominant_offsets.begin(), dominant_offsets.end(), HeightLexLess{});

  std::map<IntVec, Integer, LexLess> dominant_mult;
  const RatVec lam_rho = rat_add(lam, rho);
  const Rational top_norm = rs.form_weight_weight(lam_rho, lam_rho);

  for (const IntVec& beta : dominant_offsets) {
    if (beta.sum() == 0) {
      dominant_mult[beta] = 1;
      continue;
    }
    const RatVec mu = rat_sub(lam, to_rational(rs.fw_of_root(beta)));
    Rational rhs = 0;
    for (const IntVec& alpha : rs.positive_roots()) {
      for (int k = 1;; ++k) {
        IntVec beta_up = beta - k * alpha;
        bool in_box = true;
        for (int i = 0; i < l; ++i)
          if (beta_up[i] < 0) in_box = false;
        if (!in_box) break;
        // multiplicity of mu + k*alpha, looked up via its dominant conjugate
        const RatVec nu = rat_sub(lam, to_rational(rs.fw_of_root(beta_up)));
        const RatVec nu_dom = dominant_representative(rs, nu);
        const IntVec key = rs.root_coords_of(rat_sub(lam, nu_dom));
        auto it = dominant_mult.find(key);
        if (it == dominant_mult.end()) continue;
        rhs += 2 * Rational(it->second) * rs.form_weight_root(nu, alpha);
      }
    }
    const RatVec mu_rho = rat_add(mu, rho);
    const Rational denom = top_norm - rs.form_weight_weight(mu_rho, mu_rho);
    if (denom == 0)
      throw std::logic_error("freudenthal_character: vanishing denominator");
    dominant_mult[beta] = rational_to_integer(rhs / denom);
  }

  FiniteCharacter out;
  {
    IntVec beta = IntVec::Zero(l);
    while (true) {
      const RatVec mu = rat_sub(lam, to_rational(rs.fw_of_root(beta)));
      const RatVec mu_dom = dominant_representative(rs, mu);
      const IntVec key = rs.root_coords_of(rat_sub(lam, mu_dom));
      bool usable = true;
      for (int i = 0; i < l; ++i)
        if (key[i] < 0 || key[i] > box[i]) usable = false;
      if (usable) {
        auto it = dominant_mult.find(key);
        if (it != dominant_mult.end()) out.add(beta, it->second);
      }
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
  return out;
}

Integer weyl_dimension(const RootSystem& rs, const IntVec& lambda_bar_fw) {
  const RatVec lam = to_rational(lambda_bar_fw);
  const RatVec rho = to_rational(rs.rho_bar_finite());
  Rational dim = 1;
  for (const IntVec& alpha : rs.positive_roots()) {
    dim *= rs.form_weight_root(rat_add(lam, rho), alpha) /
           rs.form_weight_root(rho, alpha);
  }
  return rational_to_integer(dim);
}

}  // namespace critchar
