#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critchar/affine_character.hpp"
#include "critchar/finite_character.hpp"

#include <random>

using namespace critchar;

namespace {

IntVec iv(std::initializer_list<int> xs) {
  IntVec v(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

// Brute-force oracle: partitions of n into parts of the given sizes, with
// the given number of colours per part size.
long partition_count(int n, const std::vector<int>& sizes, int colours) {
  std::vector<long> table(n + 1, 0);
  table[0] = 1;
  for (int s : sizes)
    for (int c = 0; c < colours; ++c)
      for (int k = s; k <= n; ++k) table[k] += table[k - s];
  return table[n];
}

AffineCharacter random_character(const RootSystem& rs, std::mt19937& gen,
                                 int truncation) {
  std::uniform_int_distribution<int> coord(-2, 2);
  std::uniform_int_distribution<int> mult(-3, 3);
  std::uniform_int_distribution<int> terms(0, 3);
  Weight base;
  base.finite = rat_vec_zero(rs.rank());
  AffineCharacter c(rs.type(), rs.rank(), base, truncation);
  for (int n = 0; n <= truncation; ++n) {
    const int k = terms(gen);
    for (int t = 0; t < k; ++t) {
      IntVec off(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) off[i] = coord(gen);
      c.slice(n).add(off, mult(gen));
    }
  }
  return c;
}

}  // namespace

TEST_CASE("finite Weyl characters: frozen small cases") {
  const RootSystem a1 = build_root_system('A', 1);
  SUBCASE("trivial module") {
    const FiniteCharacter one = finite_weyl_character(a1, iv({0}));
    CHECK(one.support_size() == 1);
    CHECK(one.coeff(iv({0})) == 1);
  }
  SUBCASE("defining module of A1") {
    const FiniteCharacter ch = finite_weyl_character(a1, iv({1}));
    CHECK(ch.total() == 2);
    CHECK(ch.coeff(iv({0})) == 1);
    CHECK(ch.coeff(iv({1})) == 1);
  }
  SUBCASE("adjoint of A2 has multiplicity 2 at zero") {
    const RootSystem a2 = build_root_system('A', 2);
    const FiniteCharacter ch = finite_weyl_character(a2, iv({1, 1}));
    CHECK(ch.total() == 8);
    CHECK(ch.coeff(a2.highest_root()) == 2);  // weight zero = theta below top
  }
}

TEST_CASE("Freudenthal recursion: frozen small cases") {
  const RootSystem a1 = build_root_system('A', 1);
  const FiniteCharacter ch = freudenthal_character(a1, iv({2}));
  CHECK(ch.total() == 3);
  CHECK(ch.coeff(iv({0})) == 1);
  CHECK(ch.coeff(iv({1})) == 1);
  CHECK(ch.coeff(iv({2})) == 1);
  CHECK(freudenthal_character(a1, iv({0})).total() == 1);

  const RootSystem c2 = build_root_system('C', 2);
  CHECK(freudenthal_character(c2, iv({1, 0})).total() == 4);
  CHECK(weyl_dimension(c2, iv({1, 0})) == 4);
}

TEST_CASE("two independent finite-character routes agree (small sweep)") {
  for (auto [t, l] : {std::pair<char, int>{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    const RootSystem rs = build_root_system(t, l);
    std::vector<IntVec> weights;
    if (l == 1) {
      for (int a = 0; a <= 2; ++a) weights.push_back(iv({a}));
    } else {
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) weights.push_back(iv({a, b}));
    }
    for (const IntVec& w : weights) {
      CAPTURE(t);
      CAPTURE(w[0]);
      const FiniteCharacter lhs = finite_weyl_character(rs, w);
      const FiniteCharacter rhs = freudenthal_character(rs, w);
      CHECK(lhs == rhs);
      CHECK(lhs.total() == weyl_dimension(rs, w));
    }
  }
}

TEST_CASE("finite characters of modules are Weyl invariant") {
  const RootSystem a2 = build_root_system('A', 2);
  const IntVec lam = iv({2, 1});
  const FiniteCharacter ch = finite_weyl_character(a2, lam);
  const auto group = weyl_group(a2);
  const RatVec base = to_rational(lam);
  for (const WeylElement& w : group)
    for (const auto& [off, mult] : ch.terms())
      CHECK(ch.coeff(weyl_image_offset(a2, w, base, off)) == mult);
}

TEST_CASE("non-dominant weights are rejected") {
  const RootSystem a1 = build_root_system('A', 1);
  CHECK_THROWS_AS(finite_weyl_character(a1, iv({-1})), std::invalid_argument);
  CHECK_THROWS_AS(freudenthal_character(a1, iv({-1})), std::invalid_argument);
}

TEST_CASE("mul: unit, mixed systems, q-dimension homomorphism") {
  const RootSystem a1 = build_root_system('A', 1);
  std::mt19937 gen(7);
  const AffineCharacter unit = affine_unit(a1, 6);
  for (int rep = 0; rep < 20; ++rep) {
    const AffineCharacter c = random_character(a1, gen, 6);
    CHECK(slices_equal(mul(c, unit), c));
    const AffineCharacter d = random_character(a1, gen, 6);
    const QSeries lhs = qdims(mul(c, d));
    const QSeries rhs = qseries_mul(qdims(c), qdims(d));
    CHECK(lhs == rhs);
  }
  const RootSystem a2 = build_root_system('A', 2);
  CHECK_THROWS_AS(mul(affine_unit(a1, 3), affine_unit(a2, 3)),
                  std::invalid_argument);
}

TEST_CASE("mul is commutative and associative on random characters") {
  const RootSystem a1 = build_root_system('A', 1);
  const RootSystem b2 = build_root_system('B', 2);
  std::mt19937 gen(11);
  for (int rep = 0; rep < 60; ++rep) {
    const RootSystem& rs = rep % 2 == 0 ? a1 : b2;
    const AffineCharacter a = random_character(rs, gen, 4);
    const AffineCharacter b = random_character(rs, gen, 4);
    const AffineCharacter c = random_character(rs, gen, 4);
    CHECK(slices_equal(mul(a, b), mul(b, a)));
    CHECK(slices_equal(mul(mul(a, b), c), mul(a, mul(b, c))));
  }
}

TEST_CASE("mul_inverse_factor: partition generating functions") {
  const RootSystem a1 = build_root_system('A', 1);
  SUBCASE("single pure-q factor gives the all-ones series") {
    AffineCharacter c = mul_inverse_factor(affine_unit(a1, 5), iv({0}), 1, 1);
    for (int n = 0; n <= 5; ++n) CHECK(c.slice(n).total() == 1);
  }
  SUBCASE("one colour per part size gives partition numbers") {
    AffineCharacter c = affine_unit(a1, 5);
    for (int n = 1; n <= 5; ++n) c = mul_inverse_factor(c, iv({0}), n, 1);
    const QSeries q = qdims(c);
    std::vector<int> sizes = {1, 2, 3, 4, 5};
    for (int n = 0; n <= 5; ++n)
      CHECK(q.coeffs[n] == partition_count(n, sizes, 1));
    // frozen: 1, 1, 2, 3, 5, 7
    CHECK(q.coeffs == std::vector<Integer>{1, 1, 2, 3, 5, 7});
  }
  SUBCASE("two colours per part size") {
    AffineCharacter c = affine_unit(a1, 6);
    for (int n = 1; n <= 6; ++n) c = mul_inverse_factor(c, iv({0}), n, 2);
    const QSeries q = qdims(c);
    std::vector<int> sizes = {1, 2, 3, 4, 5, 6};
    for (int n = 0; n <= 6; ++n)
      CHECK(q.coeffs[n] == partition_count(n, sizes, 2));
  }
  SUBCASE("monomial geometric series") {
    const AffineCharacter c =
        mul_inverse_factor(affine_unit(a1, 4), iv({1}), 1, 1);
    for (int k = 0; k <= 4; ++k) {
      CHECK(c.slice(k).support_size() == 1);
      CHECK(c.slice(k).coeff(iv({k})) == 1);
    }
  }
  SUBCASE("degree-zero factors are rejected") {
    CHECK_THROWS_AS(mul_inverse_factor(affine_unit(a1, 3), iv({1}), 0, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("mul_inverse_factor round-trips against the explicit factor") {
  const RootSystem b2 = build_root_system('B', 2);
  std::mt19937 gen(23);
  for (int rep = 0; rep < 25; ++rep) {
    const AffineCharacter c = random_character(b2, gen, 5);
    const int n = 1 + rep % 3;
    const int m = 1 + rep % 2;
    const IntVec beta = iv({rep % 3 - 1, (rep / 3) % 3 - 1});
    const AffineCharacter back =
        mul_factor(mul_inverse_factor(c, beta, n, m), beta, n, m);
    CHECK(slices_equal(back, c));
  }
}

TEST_CASE("coefficient accessor bounds") {
  const RootSystem a1 = build_root_system('A', 1);
  const AffineCharacter unit = affine_unit(a1, 2);
  CHECK(coefficient(unit, iv({0}), 0) == 1);
  CHECK(coefficient(unit, iv({0}), 2) == 0);
  CHECK_THROWS_AS(coefficient(unit, iv({0}), 3), std::invalid_argument);
}
