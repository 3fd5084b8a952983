#include "critchar/chevalley.hpp"

#include "critchar/exact_linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace critchar {

namespace {

struct DefiningRep {
  int dimv = 0;
  std::vector<RatMat> e, f;           // simple generator matrices
  std::vector<IntVec> weight_fw;      // weight of each basis vector
};

void put(RatMat& m, int row, int col, int v) { m(row - 1, col - 1) = v; }

DefiningRep defining_rep(const RootSystem& rs) {
  const int l = rs.rank();
  DefiningRep rep;
  const auto zero = [&](int d) { return rat_zero(d, d); };

  switch (rs.type()) {
    case 'A': {
      rep.dimv = l + 1;
      rep.e.assign(l, zero(rep.dimv));
      rep.f.assign(l, zero(rep.dimv));
      for (int i = 1; i <= l; ++i) {
        put(rep.e[i - 1], i, i + 1, 1);
        put(rep.f[i - 1], i + 1, i, 1);
      }
      for (int k = 1; k <= l + 1; ++k) {
        IntVec w = IntVec::Zero(l);
        if (k <= l) w[k - 1] += 1;
        if (k >= 2 && k - 1 <= l) w[k - 2] -= 1;
        rep.weight_fw.push_back(w);
      }
      break;
    }
    case 'B': {
      // so(2l+1) vector representation; the short-root sl2 acts as a
      // triplet through the zero weight, with the integral (1,2) ladder.
      rep.dimv = 2 * l + 1;
      rep.e.assign(l, zero(rep.dimv));
      rep.f.assign(l, zero(rep.dimv));
      for (int i = 1; i < l; ++i) {
        put(rep.e[i - 1], i, i + 1, 1);
        put(rep.e[i - 1], 2 * l + 1 - i, 2 * l + 2 - i, -1);
        put(rep.f[i - 1], i + 1, i, 1);
        put(rep.f[i - 1], 2 * l + 2 - i, 2 * l + 1 - i, -1);
      }
      put(rep.e[l - 1], l, l + 1, 2);
      put(rep.e[l - 1], l + 1, l + 2, -1);
      put(rep.f[l - 1], l + 1, l, 1);
      put(rep.f[l - 1], l + 2, l + 1, -2);
      const auto eps_fw = [&](int k) {
        IntVec w = IntVec::Zero(l);
        if (k < l) {
          w[k - 1] += 1;
          if (k >= 2) w[k - 2] -= 1;
        } else {
          w[l - 1] = 2;
          if (l >= 2) w[l - 2] = -1;
        }
        return w;
      };
      for (int k = 1; k <= l; ++k) rep.weight_fw.push_back(eps_fw(k));
      rep.weight_fw.push_back(IntVec::Zero(l));
      for (int k = l; k >= 1; --k) rep.weight_fw.push_back(IntVec(-eps_fw(k)));
      break;
    }
    case 'C': {
      rep.dimv = 2 * l;
      rep.e.assign(l, zero(rep.dimv));
      rep.f.assign(l, zero(rep.dimv));
      for (int i = 1; i < l; ++i) {
        put(rep.e[i - 1], i, i + 1, 1);
        put(rep.e[i - 1], 2 * l - i, 2 * l + 1 - i, -1);
        put(rep.f[i - 1], i + 1, i, 1);
        put(rep.f[i - 1], 2 * l + 1 - i, 2 * l - i, -1);
      }
      put(rep.e[l - 1], l, l + 1, 1);
      put(rep.f[l - 1], l + 1, l, 1);
      const auto eps_fw = [&](int k) {
        IntVec w = IntVec::Zero(l);
        w[k - 1] += 1;
        if (k >= 2) w[k - 2] -= 1;
        return w;
      };
      for (int k = 1; k <= l; ++k) rep.weight_fw.push_back(eps_fw(k));
      for (int k = l; k >= 1; --k) rep.weight_fw.push_back(IntVec(-eps_fw(k)));
      break;
    }
    case 'D': {
      rep.dimv = 2 * l;
      rep.e.assign(l, zero(rep.dimv));
      rep.f.assign(l, zero(rep.dimv));
      for (int i = 1; i < l; ++i) {
        put(rep.e[i - 1], i, i + 1, 1);
        put(rep.e[i - 1], 2 * l - i, 2 * l + 1 - i, -1);
        put(rep.f[i - 1], i + 1, i, 1);
        put(rep.f[i - 1], 2 * l + 1 - i, 2 * l - i, -1);
      }
      put(rep.e[l - 1], l - 1, l + 1, 1);
      put(rep.e[l - 1], l, l + 2, -1);
      put(rep.f[l - 1], l + 1, l - 1, 1);
      put(rep.f[l - 1], l + 2, l, -1);
      const auto eps_fw = [&](int k) {
        IntVec w = IntVec::Zero(l);
        if (k < l) {
          w[k - 1] += 1;
          if (k >= 2) w[k - 2] -= 1;
        }
        if (k == l - 1) w[l - 1] += 1;
        if (k == l) {
          w[l - 2] -= 1;
          w[l - 1] += 1;
        }
        return w;
      };
      for (int k = 1; k <= l; ++k) rep.weight_fw.push_back(eps_fw(k));
      for (int k = l; k >= 1; --k) rep.weight_fw.push_back(IntVec(-eps_fw(k)));
      break;
    }
    case 'G': {
      // Seven-dimensional representation: weights are the six short roots
      // and zero, ordered along a lowering chain from the highest weight.
      rep.dimv = 7;
      rep.e.assign(2, zero(7));
      rep.f.assign(2, zero(7));
      const int chain1[][3] = {{1, 2, 1}, {3, 4, 2}, {4, 5, 1}, {6, 7, 1}};
      for (auto [r, c, v] : chain1) put(rep.e[0], r, c, v);
      const int chain1f[][3] = {{2, 1, 1}, {4, 3, 1}, {5, 4, 2}, {7, 6, 1}};
      for (auto [r, c, v] : chain1f) put(rep.f[0], r, c, v);
      put(rep.e[1], 2, 3, 1);
      put(rep.e[1], 5, 6, 1);
      put(rep.f[1], 3, 2, 1);
      put(rep.f[1], 6, 5, 1);
      const int fw[7][2] = {{1, 0}, {-1, 1}, {2, -1}, {0, 0},
                            {-2, 1}, {1, -1}, {-1, 0}};
      for (auto& w : fw) {
        IntVec v(2);
        v << w[0], w[1];
        rep.weight_fw.push_back(v);
      }
      break;
    }
    default: {
      std::ostringstream os;
      os << "structure constants are not available for type " << rs.type();
      throw std::invalid_argument(os.str());
    }
  }
  return rep;
}

bool is_zero(const RatMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

Rational trace_of_product(const RatMat& a, const RatMat& b) {
  Rational t = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

RatMat bracket_of(const RatMat& a, const RatMat& b) {
  return rat_commutator(a, b);
}

// coef with m == coef * target, or throws.
Rational proportionality(const RatMat& m, const RatMat& target) {
  Rational coef = 0;
  for (Eigen::Index i = 0; i < target.rows() && coef == 0; ++i)
    for (Eigen::Index j = 0; j < target.cols() && coef == 0; ++j)
      if (target(i, j) != 0) coef = m(i, j) / target(i, j);
  for (Eigen::Index i = 0; i < target.rows(); ++i)
    for (Eigen::Index j = 0; j < target.cols(); ++j)
      if (m(i, j) != coef * target(i, j))
        throw std::logic_error("bracket is not proportional to the root vector");
  return coef;
}

}  // namespace

ChevalleyBasis ChevalleyBasis::build(const RootSystem& rs, Limits limits) {
  if (rs.rank() > limits.max_rank)
    throw std::invalid_argument(
        "structure_constants: rank exceeds the configured bound");
  ChevalleyBasis cb;
  cb.rs_ = rs;
  const int l = rs.rank();
  const int npos = static_cast<int>(rs.positive_roots().size());
  const DefiningRep rep = defining_rep(rs);

  // Cartan elements from the weight table, then the simple pairs checked
  // against them.
  std::vector<RatMat> hmat(l);
  for (int i = 0; i < l; ++i) {
    RatMat h = rat_zero(rep.dimv, rep.dimv);
    for (int k = 0; k < rep.dimv; ++k) h(k, k) = rep.weight_fw[k][i];
    hmat[i] = h;
  }
  for (int i = 0; i < l; ++i) {
    RatMat diff = bracket_of(rep.e[i], rep.f[i]);
    for (int r = 0; r < rep.dimv; ++r)
      for (int c = 0; c < rep.dimv; ++c) diff(r, c) -= hmat[i](r, c);
    if (!is_zero(diff))
      throw std::logic_error("defining representation: [e_i, f_i] != h_i");
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (!is_zero(bracket_of(rep.e[i], rep.f[j])))
        throw std::logic_error("defining representation: [e_i, f_j] != 0");
    }
  }

  // Root vectors by the height recursion.
  std::vector<RatMat> emat(npos), fmat(npos);
  const IntVec zero_root = IntVec::Zero(l);
  const auto coroot_diag = [&](int t) {
    RatMat d = rat_zero(rep.dimv, rep.dimv);
    const IntVec& cc = rs.coroot_coords()[t];
    for (int k = 0; k < rep.dimv; ++k) {
      Rational v = 0;
      for (int i = 0; i < l; ++i) v += Rational(cc[i]) * rep.weight_fw[k][i];
      d(k, k) = v;
    }
    return d;
  };
  for (int t = 0; t < npos; ++t) {
    const IntVec& gamma = rs.positive_roots()[t];
    if (RootSystem::height(gamma) == 1) {
      int i = 0;
      while (gamma[i] == 0) ++i;
      emat[t] = rep.e[i];
      fmat[t] = rep.f[i];
      continue;
    }
    int i = -1;
    IntVec beta;
    for (int k = 0; k < l; ++k) {
      IntVec cand = gamma;
      cand[k] -= 1;
      bool nonneg = true;
      for (int s = 0; s < l; ++s)
        if (cand[s] < 0) nonneg = false;
      if (nonneg && rs.is_root(cand)) {
        i = k;
        beta = cand;
        break;
      }
    }
    if (i < 0) throw std::logic_error("positive root without a simple summand");
    int p = 0;
    {
      IntVec down = beta;
      while (true) {
        down[i] -= 1;
        if (!rs.is_root(down)) break;
        ++p;
      }
    }
    const int tb = rs.positive_root_index(beta);
    const Rational n = p + 1;
    emat[t] = bracket_of(rep.e[i], emat[tb]);
    fmat[t] = bracket_of(rep.f[i], fmat[tb]);
    for (int r = 0; r < rep.dimv; ++r)
      for (int c = 0; c < rep.dimv; ++c) {
        emat[t](r, c) /= n;
        fmat[t](r, c) /= n;
      }
    if (is_zero(emat[t]) || is_zero(fmat[t]))
      throw std::logic_error("vanishing root vector in the height recursion");
    // normalize the sign of f_gamma so that [e_gamma, f_gamma] = gamma^vee
    RatMat h = bracket_of(emat[t], fmat[t]);
    const RatMat target = coroot_diag(t);
    const Rational c = proportionality(h, target);
    if (c == 1) {
      // keep
    } else if (c == -1) {
      for (int r = 0; r < rep.dimv; ++r)
        for (int cc = 0; cc < rep.dimv; ++cc) fmat[t](r, cc) = -fmat[t](r, cc);
    } else {
      throw std::logic_error("[e,f] is not +-coroot in the height recursion");
    }
  }

  // Assemble the basis: h_1..h_l, then e by root order, then f.
  for (int i = 0; i < l; ++i)
    cb.elements_.push_back({Kind::H, i, zero_root, hmat[i]});
  for (int t = 0; t < npos; ++t)
    cb.elements_.push_back({Kind::E, t, rs.positive_roots()[t], emat[t]});
  for (int t = 0; t < npos; ++t)
    cb.elements_.push_back({Kind::F, t, IntVec(-rs.positive_roots()[t]), fmat[t]});
  const int dim = cb.dim();
  cb.order_height_.resize(dim);
  for (int a = 0; a < dim; ++a)
    cb.order_height_[a] =
        cb.elements_[a].kind == Kind::H
            ? 0
            : RootSystem::height(rs.positive_roots()[cb.elements_[a].index]);

  // A set of representation weights whose coordinates are independent, used
  // to express Cartan-valued brackets in the h_i.
  std::vector<int> probe;
  {
    RatMat rows(0, l);
    for (int k = 0; k < rep.dimv && static_cast<int>(probe.size()) < l; ++k) {
      RatMat cand(rows.rows() + 1, l);
      cand.topRows(rows.rows()) = rows;
      for (int i = 0; i < l; ++i) cand(rows.rows(), i) = rep.weight_fw[k][i];
      if (bareiss_rank_rational(cand) == cand.rows()) {
        rows = cand;
        probe.push_back(k);
      }
    }
    if (static_cast<int>(probe.size()) != l)
      throw std::logic_error("representation weights do not span");
  }
  RatMat probe_matrix(l, l);
  for (int r = 0; r < l; ++r)
    for (int i = 0; i < l; ++i) probe_matrix(r, i) = rep.weight_fw[probe[r]][i];

  const auto decompose = [&](const RatMat& m, const IntVec& weight) {
    std::vector<std::pair<int, Rational>> out;
    if (is_zero(m)) return out;
    if (weight == zero_root) {
      RatVec rhs(l);
      for (int r = 0; r < l; ++r) rhs[r] = m(probe[r], probe[r]);
      RatVec c;
      if (!gauss_solve(probe_matrix, rhs, c))
        throw std::logic_error("Cartan decomposition failed");
      RatMat check = m;
      for (int i = 0; i < l; ++i)
        for (int r = 0; r < check.rows(); ++r)
          for (int cc = 0; cc < check.cols(); ++cc)
            check(r, cc) -= hmat[i](r, cc) * c[i];
      if (!is_zero(check))
        throw std::logic_error("bracket does not lie in the Cartan span");
      for (int i = 0; i < l; ++i)
        if (c[i] != 0) out.push_back({cb.h_index(i), c[i]});
      return out;
    }
    if (!rs.is_root(weight))
      throw std::logic_error("nonzero bracket at a non-root weight");
    bool positive = weight.sum() > 0;
    const int t = rs.positive_root_index(positive ? weight : IntVec(-weight));
    const int target = positive ? cb.e_index(t) : cb.f_index(t);
    const Rational coef = proportionality(m, cb.elements_[target].rep);
    out.push_back({target, coef});
    return out;
  };

  cb.brackets_.assign(dim, std::vector<std::vector<std::pair<int, Rational>>>(dim));
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const RatMat m = bracket_of(cb.elements_[a].rep, cb.elements_[b].rep);
      const IntVec w = cb.elements_[a].root + cb.elements_[b].root;
      cb.brackets_[a][b] = decompose(m, w);
    }
  }

  // Chevalley integrality: [e_alpha, e_beta] = +-(p+1) e_{alpha+beta}.
  for (int s = 0; s < npos; ++s) {
    for (int t = 0; t < npos; ++t) {
      const IntVec sum = rs.positive_roots()[s] + rs.positive_roots()[t];
      if (!rs.is_root(sum)) continue;
      const auto& br = cb.brackets_[cb.e_index(s)][cb.e_index(t)];
      if (br.size() != 1) throw std::logic_error("e-e bracket not simple");
      int p = 0;
      IntVec down = rs.positive_roots()[t];
      while (true) {
        down -= rs.positive_roots()[s];
        if (!rs.is_root(down)) break;
        ++p;
      }
      Rational expect = p + 1;
      if (br[0].second != expect && br[0].second != -expect)
        throw std::logic_error("structure constant is not +-(p+1)");
    }
  }

  // Invariant form from the trace form, normalized so (e_theta|f_theta) = 1,
  // which is (theta|theta) = 2.
  const int t_theta = rs.positive_root_index(rs.highest_root());
  const Rational kappa =
      Rational(1) / trace_of_product(emat[t_theta], fmat[t_theta]);
  cb.form_.resize(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      cb.form_(a, b) =
          kappa * trace_of_product(cb.elements_[a].rep, cb.elements_[b].rep);

  // Contravariance diagonal for the defining representation, giving the
  // Cartan antiinvolution as a transpose conjugation.
  {
    RatVec d = rat_vec_zero(rep.dimv);
    d[0] = 1;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 0; i < l; ++i) {
        for (int r = 0; r < rep.dimv; ++r) {
          for (int c = 0; c < rep.dimv; ++c) {
            if (rep.e[i](r, c) == 0) continue;
            // D e = f^T D entrywise: d_r * e(r,c) = f(c,r) * d_c
            if (d[r] != 0 && d[c] == 0) {
              d[c] = d[r] * rep.e[i](r, c) / rep.f[i](c, r);
              progress = true;
            } else if (d[c] != 0 && d[r] == 0) {
              d[r] = d[c] * rep.f[i](c, r) / rep.e[i](r, c);
              progress = true;
            }
          }
        }
      }
    }
    for (int k = 0; k < rep.dimv; ++k)
      if (d[k] == 0)
        throw std::logic_error("contravariance diagonal did not propagate");
    const auto omega_of = [&](const RatMat& m) {
      RatMat out(rep.dimv, rep.dimv);
      for (int r = 0; r < rep.dimv; ++r)
        for (int c = 0; c < rep.dimv; ++c) out(r, c) = m(c, r) * d[c] / d[r];
      return out;
    };
    cb.omega_index_.resize(dim);
    cb.omega_coef_.resize(dim);
    for (int a = 0; a < dim; ++a) {
      const Element& el = cb.elements_[a];
      int target;
      switch (el.kind) {
        case Kind::H: target = a; break;
        case Kind::E: target = cb.f_index(el.index); break;
        case Kind::F: target = cb.e_index(el.index); break;
        default: throw std::logic_error("unreachable");
      }
      const Rational coef =
          proportionality(omega_of(el.rep), cb.elements_[target].rep);
      cb.omega_index_[a] = target;
      cb.omega_coef_[a] = coef;
    }
  }

  return cb;
}

}  // namespace critchar
