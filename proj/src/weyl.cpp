#include "critchar/weyl.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace critchar {

namespace {

std::vector<int> matrix_key(const IntMat& m) {
  std::vector<int> key;
  key.reserve(m.size());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) key.push_back(m(i, j));
  return key;
}

}  // namespace

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t cap) {
  const int l = rs.rank();
  std::vector<IntMat> gen_fw(l), gen_root(l);
  for (int i = 0; i < l; ++i) {
    IntMat s = IntMat::Identity(l, l);
    // s_i on fw coordinates: f -> f - f_i * (column i of the Cartan matrix)
    s.col(i) -= rs.cartan().col(i);
    gen_fw[i] = s;
    IntMat r = IntMat::Identity(l, l);
    r.row(i) -= rs.cartan().row(i);
    gen_root[i] = r;
  }

  std::vector<WeylElement> group;
  std::map<std::vector<int>, int> seen;
  WeylElement id;
  id.word = {};
  id.length = 0;
  id.fw_matrix = IntMat::Identity(l, l);
  id.root_matrix = IntMat::Identity(l, l);
  seen[matrix_key(id.fw_matrix)] = 0;
  group.push_back(id);

  std::deque<int> frontier = {0};
  while (!frontier.empty()) {
    const int at = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < l; ++i) {
      IntMat fw = gen_fw[i] * group[at].fw_matrix;
      auto key = matrix_key(fw);
      if (seen.count(key)) continue;
      if (group.size() >= cap)
        throw std::invalid_argument("weyl_group: order exceeds configured cap");
      WeylElement w;
      w.word = group[at].word;
      w.word.insert(w.word.begin(), i);  // s_i * w
      w.length = group[at].length + 1;
      w.fw_matrix = std::move(fw);
      w.root_matrix = gen_root[i] * group[at].root_matrix;
      seen[key] = static_cast<int>(group.size());
      frontier.push_back(static_cast<int>(group.size()));
      group.push_back(std::move(w));
    }
  }
  return group;
}

Weight weyl_action(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  (void)rs;
  Weight out = mu;
  RatVec f(mu.finite.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    Rational acc = 0;
    for (Eigen::Index j = 0; j < f.size(); ++j)
      acc += Rational(w.fw_matrix(i, j)) * mu.finite[j];
    f[i] = acc;
  }
  out.finite = std::move(f);
  return out;
}

Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  Weight rho;
  rho.finite = to_rational(rs.rho_bar_finite());
  rho.level = rs.dual_coxeter();
  rho.delta = 0;
  return weyl_action(rs, w, lambda + rho) - rho;
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const IntVec& alpha : rs.positive_roots()) {
    IntVec image = w.root_matrix * alpha;
    bool negative = true;
    for (Eigen::Index i = 0; i < image.size(); ++i)
      if (image[i] > 0) negative = false;
    if (!rs.is_root(image))
      throw std::logic_error("Weyl image of a root is not a root");
    if (negative) ++count;
  }
  return count;
}

RatVec dominant_representative(const RootSystem& rs, RatVec fw) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (fw[i] < 0) {
        const Rational c = fw[i];
        for (int k = 0; k < rs.rank(); ++k)
          fw[k] -= c * Rational(rs.cartan()(k, i));
        moved = true;
      }
    }
  }
  return fw;
}

RatVec antidominant_representative(const RootSystem& rs, RatVec fw) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (fw[i] > 0) {
        const Rational c = fw[i];
        for (int k = 0; k < rs.rank(); ++k)
          fw[k] -= c * Rational(rs.cartan()(k, i));
        moved = true;
      }
    }
  }
  return fw;
}

}  // namespace critchar
