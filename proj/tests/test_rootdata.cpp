#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critchar/root_system.hpp"
#include "critchar/weyl.hpp"

using namespace critchar;

namespace {

IntVec iv(std::initializer_list<int> xs) {
  IntVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("positive root counts match the classical tables") {
  struct Row {
    char type;
    int rank;
    int count;
  };
  const Row rows[] = {{'A', 1, 1},  {'A', 2, 3},  {'A', 3, 6},  {'A', 4, 10},
                      {'B', 2, 4},  {'B', 3, 9},  {'B', 4, 16}, {'C', 2, 4},
                      {'C', 3, 9},  {'C', 4, 16}, {'D', 4, 12}, {'D', 5, 20},
                      {'F', 4, 24}, {'G', 2, 6},  {'E', 6, 36}, {'E', 7, 63},
                      {'E', 8, 120}};
  for (const Row& r : rows) {
    const RootSystem rs = build_root_system(r.type, r.rank);
    CHECK(static_cast<int>(rs.positive_roots().size()) == r.count);
    for (const IntVec& root : rs.positive_roots())
      for (int i = 0; i < r.rank; ++i) CHECK(root[i] >= 0);
  }
}

TEST_CASE("dual Coxeter numbers and exponents") {
  CHECK(build_root_system('A', 1).dual_coxeter() == 2);
  CHECK(build_root_system('A', 2).dual_coxeter() == 3);
  CHECK(build_root_system('B', 3).dual_coxeter() == 5);
  CHECK(build_root_system('C', 2).dual_coxeter() == 3);
  CHECK(build_root_system('C', 3).dual_coxeter() == 4);
  CHECK(build_root_system('D', 4).dual_coxeter() == 6);
  CHECK(build_root_system('F', 4).dual_coxeter() == 9);
  CHECK(build_root_system('G', 2).dual_coxeter() == 4);
  CHECK(build_root_system('E', 6).dual_coxeter() == 12);
  CHECK(build_root_system('E', 7).dual_coxeter() == 18);
  CHECK(build_root_system('E', 8).dual_coxeter() == 30);

  CHECK(build_root_system('A', 1).exponents() == std::vector<int>{1});
  CHECK(build_root_system('A', 2).exponents() == std::vector<int>{1, 2});
  CHECK(build_root_system('B', 3).exponents() == std::vector<int>{1, 3, 5});
  CHECK(build_root_system('D', 4).exponents() == std::vector<int>{1, 3, 3, 5});
  CHECK(build_root_system('F', 4).exponents() == std::vector<int>{1, 5, 7, 11});
  CHECK(build_root_system('G', 2).exponents() == std::vector<int>{1, 5});
  CHECK(build_root_system('E', 8).exponents() ==
        std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("structural identities for every buildable system") {
  const std::pair<char, int> systems[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                                          {'B', 3}, {'C', 2}, {'C', 3}, {'D', 4},
                                          {'F', 4}, {'G', 2}};
  for (auto [t, l] : systems) {
    CAPTURE(t);
    CAPTURE(l);
    const RootSystem rs = build_root_system(t, l);
    // sum of exponents equals the number of positive roots
    int sum = 0;
    for (int d : rs.exponents()) sum += d;
    CHECK(sum == static_cast<int>(rs.positive_roots().size()));
    // max exponent + 1 is the Coxeter number, the highest root height + 1
    CHECK(rs.exponents().back() == RootSystem::height(rs.highest_root()));
    // h_dual two ways: marks of theta-vee, and 2(rho|theta)/(theta|theta)+1
    Weight rho;
    rho.finite = to_rational(rs.rho_bar_finite());
    const Rational via_pairing = rs.pairing_coroot(rho, rs.highest_root()) + 1;
    CHECK(Rational(rs.dual_coxeter()) == via_pairing);
    // <rho, alpha_i-vee> = 1 for every simple coroot
    for (int i = 0; i < l; ++i) {
      IntVec alpha = IntVec::Zero(l);
      alpha[i] = 1;
      CHECK(rs.pairing_coroot(rho, alpha) == Rational(1));
    }
    // (theta|theta) = 2 normalization
    CHECK(rs.form_root_root(rs.highest_root(), rs.highest_root()) == Rational(2));
  }
}

TEST_CASE("invalid type and rank combinations are rejected") {
  CHECK_THROWS_AS(build_root_system('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('F', 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('G', 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('H', 2), std::invalid_argument);
}

TEST_CASE("pairing against K, D and finite coroots") {
  const RootSystem rs = build_root_system('A', 1);
  const Weight lam = critical_weight(rs, iv({0}));
  CHECK(pairing(lam, CartanElem::K) == Rational(-2));
  CHECK(pairing(lam, CartanElem::D) == Rational(0));
  Weight delta;
  delta.finite = rat_vec_zero(1);
  delta.delta = 1;
  CHECK(pairing(rs, delta, iv({1})) == Rational(0));
  Weight rho;
  rho.finite = to_rational(rs.rho_bar_finite());
  rho.level = rs.dual_coxeter();
  CHECK(pairing(rs, rho, iv({1})) == Rational(1));
}

TEST_CASE("positive real roots by delta degree") {
  const RootSystem a1 = build_root_system('A', 1);
  CHECK(positive_real_roots(a1, 0).size() == 1);
  CHECK(positive_real_roots(a1, 1).size() == 3);
  CHECK_THROWS_AS(positive_real_roots(a1, -1), std::invalid_argument);
  const RootSystem a2 = build_root_system('A', 2);
  CHECK(positive_real_roots(a2, 2).size() == 15);
  for (const AffineRoot& r : positive_real_roots(a2, 2)) {
    CHECK(!(r.finite.isZero()));  // no imaginary roots
    if (r.delta_degree == 0) {
      for (int i = 0; i < 2; ++i) CHECK(r.finite[i] >= 0);
    }
  }
}

TEST_CASE("Weyl group orders, lengths and inversion counts") {
  const std::tuple<char, int, int> rows[] = {
      {'A', 1, 2},  {'A', 2, 6},  {'A', 3, 24}, {'B', 2, 8},  {'C', 2, 8},
      {'B', 3, 48}, {'C', 3, 48}, {'G', 2, 12}, {'D', 4, 192}};
  for (auto [t, l, order] : rows) {
    CAPTURE(t);
    CAPTURE(l);
    const RootSystem rs = build_root_system(t, l);
    const auto group = weyl_group(rs);
    CHECK(static_cast<int>(group.size()) == order);
    CHECK(group[0].length == 0);
    CHECK(group[0].word.empty());
    int max_len = 0;
    for (const WeylElement& w : group) {
      CHECK(static_cast<int>(w.word.size()) == w.length);
      CHECK(inversion_count(rs, w) == w.length);
      max_len = std::max(max_len, w.length);
    }
    CHECK(max_len == static_cast<int>(rs.positive_roots().size()));
  }
}

TEST_CASE("Weyl group cap is enforced") {
  const RootSystem rs = build_root_system('A', 3);
  CHECK_THROWS_AS(weyl_group(rs, 10), std::invalid_argument);
}

TEST_CASE("Weyl group permutes the roots (rank <= 4 systems)") {
  for (auto [t, l] : {std::pair<char, int>{'A', 4}, {'B', 4}, {'D', 4}, {'F', 4}}) {
    const RootSystem rs = build_root_system(t, l);
    const auto group = weyl_group(rs);
    for (const WeylElement& w : group) {
      for (const IntVec& alpha : rs.positive_roots()) {
        CHECK(rs.is_root(w.root_matrix * alpha));
      }
    }
  }
}

TEST_CASE("dot action on A1 examples") {
  const RootSystem rs = build_root_system('A', 1);
  const auto group = weyl_group(rs);
  const WeylElement& s = group[1];

  const Weight lam = critical_weight(rs, iv({0}));
  const Weight moved = dot_action(rs, s, lam);
  // s . (-2 Lambda0) = -2 Lambda0 - alpha, whose fw coordinate is -2
  CHECK(moved.level == Rational(-2));
  CHECK(moved.finite[0] == Rational(-2));

  const Weight lam2 = critical_weight(rs, iv({1}));
  const Weight moved2 = dot_action(rs, s, lam2);
  // s . (omega - 2 Lambda0) = omega - 2 Lambda0 - 2 alpha
  CHECK(moved2.finite[0] == Rational(1 - 4));
  CHECK(dot_action(rs, group[0], lam2) == lam2);
}

TEST_CASE("dot action is a group action on an A2 grid") {
  const RootSystem rs = build_root_system('A', 2);
  const auto group = weyl_group(rs);
  const auto find_product = [&](const WeylElement& a, const WeylElement& b) {
    const IntMat prod = a.fw_matrix * b.fw_matrix;
    for (const WeylElement& w : group)
      if (w.fw_matrix == prod) return &w;
    REQUIRE(false);
    return &group[0];
  };
  for (int x = -1; x <= 2; ++x) {
    for (int y = -1; y <= 2; ++y) {
      Weight lam;
      lam.finite = to_rational(iv({x, y}));
      lam.level = -3;
      for (const WeylElement& w1 : group) {
        for (const WeylElement& w2 : group) {
          const Weight lhs = dot_action(rs, *find_product(w1, w2), lam);
          const Weight rhs = dot_action(rs, w1, dot_action(rs, w2, lam));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("admissibility of highest weights") {
  const RootSystem rs = build_root_system('A', 1);
  CHECK(is_admissible_highest_weight(rs, critical_weight(rs, iv({0}))));
  Weight wrong_level;
  wrong_level.finite = to_rational(iv({1}));
  wrong_level.level = -3;
  CHECK(!is_admissible_highest_weight(rs, wrong_level));
  Weight non_dominant;
  non_dominant.finite = to_rational(iv({-1}));
  non_dominant.level = -2;
  CHECK(!is_admissible_highest_weight(rs, non_dominant));
}

TEST_CASE("debug dump is versioned and lists one root per line") {
  const RootSystem rs = build_root_system('A', 2);
  const std::string dump = rs.debug_dump();
  CHECK(dump.find("critchar.v1 rootsystem A 2") == 0);
  size_t lines = 0;
  for (char c : dump)
    if (c == '\n') ++lines;
  CHECK(lines == 3 + rs.positive_roots().size());
}
