#include "critchar/root_system.hpp"

#include "critchar/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace critchar {

Weight operator+(const Weight& a, const Weight& b) {
  Weight w;
  w.finite = rat_add(a.finite, b.finite);
  w.level = a.level + b.level;
  w.delta = a.delta + b.delta;
  return w;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight w;
  w.finite = rat_sub(a.finite, b.finite);
  w.level = a.level - b.level;
  w.delta = a.delta - b.delta;
  return w;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.level == b.level && a.delta == b.delta && a.finite == b.finite;
}

namespace {

IntMat cartan_matrix(char type, int rank) {
  const auto invalid = [&] {
    std::ostringstream os;
    os << "invalid simple type " << type << rank;
    return std::invalid_argument(os.str());
  };
  IntMat a = IntMat::Zero(rank, rank);
  const auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  };
  for (int i = 0; i < rank; ++i) a(i, i) = 2;
  switch (type) {
    case 'A':
      if (rank < 1) throw invalid();
      chain(rank);
      break;
    case 'B':
      if (rank < 2) throw invalid();
      chain(rank);
      a(rank - 1, rank - 2) = -2;  // alpha_l short
      break;
    case 'C':
      if (rank < 2) throw invalid();
      chain(rank);
      a(rank - 2, rank - 1) = -2;  // alpha_l long
      break;
    case 'D':
      if (rank < 4) throw invalid();
      chain(rank - 1);
      a(rank - 3, rank - 1) = -1;
      a(rank - 1, rank - 3) = -1;
      break;
    case 'E': {
      if (rank < 6 || rank > 8) throw invalid();
      // Bourbaki numbering: node 2 hangs off node 4 of the chain 1-3-4-5-...
      std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {2, 4}};
      for (int k = 4; k < rank; ++k) edges.push_back({k, k + 1});
      for (auto [u, v] : edges) {
        a(u - 1, v - 1) = -1;
        a(v - 1, u - 1) = -1;
      }
      break;
    }
    case 'F':
      if (rank != 4) throw invalid();
      chain(rank);
      a(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      if (rank != 2) throw invalid();
      a(0, 1) = -3;  // alpha_1 short
      a(1, 0) = -1;
      break;
    default:
      throw invalid();
  }
  return a;
}

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type, rank);

  {
    RatMat a(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) a(i, j) = rs.cartan_(i, j);
    rs.cartan_inv_ = gauss_invert(a);
  }

  // Positive roots by closing the simple roots under root strings. A root
  // beta extends to beta + alpha_i exactly when the alpha_i-string downward
  // from beta is longer than <beta, alpha_i^vee>.
  std::set<IntVec, LexLess> found;
  std::vector<IntVec> layer;
  for (int i = 0; i < rank; ++i) {
    IntVec e = IntVec::Zero(rank);
    e[i] = 1;
    layer.push_back(e);
    found.insert(e);
  }
  std::vector<IntVec> all(layer);
  while (!layer.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& beta : layer) {
      const IntVec pr = rs.cartan_ * beta;  // <beta, alpha_i^vee> per i
      for (int i = 0; i < rank; ++i) {
        IntVec down = beta;
        int q = 0;
        while (true) {
          down[i] -= 1;
          if (down.sum() <= 0 || !found.count(down)) break;
          ++q;
        }
        if (q - pr[i] <= 0) continue;
        IntVec up = beta;
        up[i] += 1;
        if (found.insert(up).second) {
          next.push_back(up);
          all.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), HeightLexLess{});
  rs.positive_roots_ = all;
  for (int t = 0; t < static_cast<int>(all.size()); ++t)
    rs.positive_index_[all[t]] = t;
  for (const IntVec& r : all) {
    rs.root_set_.insert(r);
    rs.root_set_.insert(IntVec(-r));
  }
  rs.highest_root_ = all.back();
  if (static_cast<int>(all.size()) > 1 &&
      height(all[all.size() - 2]) == height(rs.highest_root_))
    throw std::logic_error("highest root is not unique");

  // Symmetrizers d_i with d_i a_ij = d_j a_ji, scaled so (theta|theta) = 2.
  rs.sym_.assign(rank, Rational(0));
  rs.sym_[0] = 1;
  std::vector<int> todo = {0};
  std::vector<bool> seen(rank, false);
  seen[0] = true;
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < rank; ++j) {
      if (seen[j] || rs.cartan_(i, j) == 0) continue;
      rs.sym_[j] = rs.sym_[i] * Rational(rs.cartan_(i, j)) / rs.cartan_(j, i);
      seen[j] = true;
      todo.push_back(j);
    }
  }
  const auto norm_unscaled = [&](const IntVec& c) {
    Rational n = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        n += Rational(c[i]) * c[j] * rs.sym_[i] * rs.cartan_(i, j);
    return n;
  };
  const Rational scale = Rational(2) / norm_unscaled(rs.highest_root_);
  for (auto& d : rs.sym_) d *= scale;

  rs.fw_form_.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.fw_form_(i, j) = rs.sym_[i] * rs.cartan_inv_(i, j);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.fw_form_(i, j) != rs.fw_form_(j, i))
        throw std::logic_error("invariant form is not symmetric");

  for (const IntVec& r : rs.positive_roots_) {
    rs.root_norms_.push_back(rs.form_root_root(r, r));
    const Rational d_gamma = rs.root_norms_.back() / 2;
    IntVec cc(rank);
    for (int i = 0; i < rank; ++i) {
      const Rational v = Rational(r[i]) * rs.sym_[i] / d_gamma;
      const Integer vi = rational_to_integer(v);
      cc[i] = static_cast<int>(vi);
    }
    rs.coroot_coords_.push_back(cc);
  }

  rs.dual_coxeter_ =
      1 + rs.coroot_coords_[rs.positive_index_.at(rs.highest_root_)].sum();

  // Exponents from the height partition: the number of positive roots of
  // height k equals the number of exponents >= k.
  {
    std::vector<int> counts;
    for (const IntVec& r : rs.positive_roots_) {
      const int h = height(r);
      if (static_cast<int>(counts.size()) < h) counts.resize(h, 0);
      counts[h - 1] += 1;
    }
    for (size_t k = 0; k + 1 < counts.size(); ++k)
      if (counts[k] < counts[k + 1])
        throw std::logic_error("height partition is not decreasing");
    std::vector<int> exps;
    for (int i = 0; i < rank; ++i) {
      int d = 0;
      while (d < static_cast<int>(counts.size()) && counts[d] > i) ++d;
      exps.push_back(d);
    }
    std::sort(exps.begin(), exps.end());
    rs.exponents_ = exps;
  }

  return rs;
}

int RootSystem::positive_root_index(const IntVec& root) const {
  auto it = positive_index_.find(root);
  if (it == positive_index_.end())
    throw std::invalid_argument("not a positive root");
  return it->second;
}

IntVec RootSystem::root_coords_of(const RatVec& fw) const {
  const RatVec c = rat_mat_vec(cartan_inv_, fw);
  IntVec out(rank_);
  for (int i = 0; i < rank_; ++i) {
    const Integer v = rational_to_integer(c[i]);
    out[i] = static_cast<int>(v);
  }
  return out;
}

Rational RootSystem::form_weight_weight(const RatVec& a, const RatVec& b) const {
  Rational out = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out += a[i] * fw_form_(i, j) * b[j];
  return out;
}

Rational RootSystem::form_weight_root(const RatVec& fw, const IntVec& root) const {
  Rational out = 0;
  for (int i = 0; i < rank_; ++i) out += fw[i] * Rational(root[i]) * sym_[i];
  return out;
}

Rational RootSystem::form_root_root(const IntVec& a, const IntVec& b) const {
  Rational out = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      out += Rational(a[i]) * b[j] * sym_[i] * cartan_(i, j);
  return out;
}

Rational RootSystem::pairing_coroot_finite(const RatVec& fw, const IntVec& alpha) const {
  return 2 * form_weight_root(fw, alpha) / form_root_root(alpha, alpha);
}

Rational RootSystem::pairing_coroot(const Weight& mu, const IntVec& alpha) const {
  // Lambda0 and delta pair to zero with every finite coroot.
  return pairing_coroot_finite(mu.finite, alpha);
}

std::string RootSystem::debug_dump() const {
  std::ostringstream os;
  os << "critchar.v1 rootsystem " << type_ << " " << rank_ << "\n";
  os << "dual_coxeter " << dual_coxeter_ << "\n";
  os << "exponents";
  for (int d : exponents_) os << " " << d;
  os << "\n";
  for (const IntVec& r : positive_roots_) {
    os << "root";
    for (int i = 0; i < rank_; ++i) os << " " << r[i];
    os << "\n";
  }
  return os.str();
}

Rational pairing(const RootSystem& rs, const Weight& mu, const IntVec& alpha) {
  return rs.pairing_coroot(mu, alpha);
}

Rational pairing(const Weight& mu, CartanElem h) {
  return h == CartanElem::K ? mu.level : mu.delta;
}

std::vector<AffineRoot> positive_real_roots(const RootSystem& rs, int n_max) {
  if (n_max < 0) throw std::invalid_argument("positive_real_roots: n_max < 0");
  std::vector<AffineRoot> out;
  for (const IntVec& r : rs.positive_roots()) out.push_back({r, 0});
  for (int n = 1; n <= n_max; ++n) {
    for (const IntVec& r : rs.positive_roots()) {
      out.push_back({r, n});
      out.push_back({IntVec(-r), n});
    }
  }
  return out;
}

Weight critical_weight(const RootSystem& rs, const IntVec& lambda_bar_fw) {
  Weight w;
  w.finite = to_rational(lambda_bar_fw);
  w.level = -rs.dual_coxeter();
  w.delta = 0;
  return w;
}

bool is_dominant_integral(const RootSystem& rs, const RatVec& fw) {
  for (int i = 0; i < rs.rank(); ++i) {
    if (boost::multiprecision::denominator(fw[i]) != 1) return false;
    if (fw[i] < 0) return false;
  }
  return true;
}

bool is_admissible_highest_weight(const RootSystem& rs, const Weight& lambda) {
  return lambda.level == Rational(-rs.dual_coxeter()) &&
         is_dominant_integral(rs, lambda.finite);
}

}  // namespace critchar
