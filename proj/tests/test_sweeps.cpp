#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critchar/formulas.hpp"

using namespace critchar;

namespace {

IntVec iv(std::initializer_list<int> xs) {
  IntVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

IntVec fundamental(int rank, int which) {
  IntVec v = IntVec::Zero(rank);
  v[which] = 1;
  return v;
}

}  // namespace

TEST_CASE("dimension table locks in the simple-root conventions") {
  // short fundamental of G2 is seven dimensional, the other is the adjoint
  const RootSystem g2 = build_root_system('G', 2);
  CHECK(weyl_dimension(g2, iv({1, 0})) == 7);
  CHECK(weyl_dimension(g2, iv({0, 1})) == 14);
  // B2: vector and spinor
  const RootSystem b2 = build_root_system('B', 2);
  CHECK(weyl_dimension(b2, iv({1, 0})) == 5);
  CHECK(weyl_dimension(b2, iv({0, 1})) == 4);
  // C2: defining and the five dimensional fundamental
  const RootSystem c2 = build_root_system('C', 2);
  CHECK(weyl_dimension(c2, iv({1, 0})) == 4);
  CHECK(weyl_dimension(c2, iv({0, 1})) == 5);
  // F4 adjoint and 26
  const RootSystem f4 = build_root_system('F', 4);
  CHECK(weyl_dimension(f4, iv({1, 0, 0, 0})) == 52);
  CHECK(weyl_dimension(f4, iv({0, 0, 0, 1})) == 26);
}

TEST_CASE("the two factor groups of the Weyl module multiply to the whole") {
  // ch V splits as (pure q factors) * (ch E times the loop root factors);
  // their product must reproduce the direct count 1, 3, 9 for A1.
  const RootSystem rs = build_root_system('A', 1);
  const Weight lam = critical_weight(rs, iv({0}));
  const int depth = 4;

  AffineCharacter pure = affine_unit(rs, depth);
  for (int n = 1; n <= depth; ++n)
    pure = mul_inverse_factor(pure, iv({0}), n, rs.rank());

  AffineCharacter loop(rs.type(), rs.rank(), lam, depth);
  loop.slice(0) = finite_weyl_character(rs, iv({0}));
  for (int n = 1; n <= depth; ++n)
    for (const IntVec& alpha : rs.positive_roots()) {
      loop = mul_inverse_factor(loop, alpha, n, 1);
      loop = mul_inverse_factor(loop, IntVec(-alpha), n, 1);
    }

  const AffineCharacter product = mul(pure, loop);
  const AffineCharacter direct = weyl_module_character(rs, lam, depth);
  CHECK(slices_equal(product, direct));
  CHECK(qdims(product).coeffs ==
        std::vector<Integer>{1, 3, 9, 22, 51});
}

TEST_CASE("factorization and multiplicities across rank <= 4 systems") {
  struct Row {
    char type;
    int rank;
    IntVec lambda;
    int depth;
  };
  std::vector<Row> rows;
  for (auto [t, l] : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}}) {
    rows.push_back({t, l, IntVec::Zero(l), 5});
    rows.push_back({t, l, fundamental(l, 0), 4});
    rows.push_back({t, l, [&] {
                      IntVec v = IntVec::Zero(l);
                      v[0] = 2;
                      v[l - 1] = 1;
                      return v;
                    }(),
                    3});
  }
  rows.push_back({'A', 4, IntVec::Zero(4), 4});
  rows.push_back({'B', 4, IntVec::Zero(4), 3});
  rows.push_back({'C', 4, fundamental(4, 0), 3});
  rows.push_back({'D', 4, IntVec::Zero(4), 4});
  rows.push_back({'D', 4, fundamental(4, 3), 3});
  rows.push_back({'F', 4, IntVec::Zero(4), 3});
  rows.push_back({'F', 4, fundamental(4, 3), 2});

  for (const Row& row : rows) {
    CAPTURE(row.type);
    CAPTURE(row.rank);
    CAPTURE(row.depth);
    const RootSystem rs = build_root_system(row.type, row.rank);
    const Weight lam = critical_weight(rs, row.lambda);
    CHECK(verify_factorization(rs, lam, row.depth).exact_match);
    CHECK(verify_decomposition(rs, lam, row.depth).exact_match);
  }
}

TEST_CASE("upper bound across rank 3 systems") {
  for (auto [t, l] : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}}) {
    const RootSystem rs = build_root_system(t, l);
    const Weight lam = critical_weight(rs, fundamental(l, 0));
    CHECK(check_upper_bound(rs, lam, 3).exact_match);
  }
}
