#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace hopfpi;
using testing_support::mat;
using testing_support::random_matrix;
using testing_support::vec;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("-3/6").str(), "-1/2");
  EXPECT_EQ(Rational::parse("6/3").str(), "2");
  EXPECT_EQ(Rational::parse("+5").str(), "5");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(ModP, ArithmeticModSeven) {
  ModP::Scope scope(7);
  EXPECT_EQ(ModP::parse("3/2").str(), "5");
  EXPECT_EQ(ModP::parse("-1").str(), "6");
  EXPECT_EQ(ModP::parse("15").str(), "1");
  EXPECT_THROW(ModP::parse("1/7"), ParseError);
  for (long a = 1; a < 7; ++a) EXPECT_EQ(ModP(a) * ModP(a).inverse(), ModP(1)) << a;
}

TEST(ModP, ScopeRestoresModulus) {
  {
    ModP::Scope outer(5);
    {
      ModP::Scope inner(11);
      EXPECT_EQ(ModP::modulus(), 11u);
    }
    EXPECT_EQ(ModP::modulus(), 5u);
  }
  EXPECT_EQ(ModP::modulus(), 0u);
}

TEST(FieldSpec, Parse) {
  EXPECT_EQ(FieldSpec::parse("Q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("Fp:7").p, 7u);
  EXPECT_EQ(FieldSpec::parse("Fp:2147483647").str(), "Fp:2147483647");
  EXPECT_THROW(FieldSpec::parse("Fp:8"), ParseError);
  EXPECT_THROW(FieldSpec::parse("Fp:2147483648"), ParseError);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
  EXPECT_EQ(FieldSpec::parse("Fp:3").characteristic(), 3u);
  EXPECT_EQ(FieldSpec::rationals().characteristic(), 0u);
}

TEST(Rref, Examples) {
  auto id = rref(Matrix<Rational>::identity(3));
  EXPECT_EQ(id.reduced, Matrix<Rational>::identity(3));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));

  auto r = rref(mat({{2, 4}, {1, 2}}));
  EXPECT_EQ(r.reduced, mat({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));

  auto z = rref(Matrix<Rational>(2, 2));
  EXPECT_TRUE(z.reduced.is_zero());
  EXPECT_TRUE(z.pivots.empty());
}

TEST(Rref, HandEliminationWithFractions) {
  // [[3,1,2],[6,3,3]] -> row2 - 2 row1 = [0,1,-1]; row1/3 = [1,1/3,2/3]; row1 - row2/3 = [1,0,1]
  auto r = rref(mat({{3, 1, 2}, {6, 3, 3}}));
  EXPECT_EQ(r.reduced, mat({{1, 0, 1}, {0, 1, -1}}));
}

TEST(NullSpace, Examples) {
  EXPECT_EQ(null_space(Matrix<Rational>::identity(4)).dim(), 0u);
  const auto n = null_space(mat({{1, 1}, {1, 1}}));
  ASSERT_EQ(n.dim(), 1u);
  EXPECT_EQ(n.basis(), mat({{1, -1}}));
  const auto z = null_space(Matrix<Rational>(1, 3));
  EXPECT_EQ(z.basis(), Matrix<Rational>::identity(3));
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(Matrix<Rational>::identity(2), Matrix<Rational>::identity(3)), Matrix<Rational>::identity(6));
  EXPECT_EQ(kron(mat({{2}}), mat({{3}})), mat({{6}}));
  const auto k = kron(mat({{1, 0}, {0, 1}}), mat({{0, 1}, {1, 0}}));
  EXPECT_EQ(k, mat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
}

TEST(Kron, LeftFactorMajorIndex) {
  const auto a = mat({{1, 2}, {3, 4}});
  const auto b = mat({{5, 6, 7}});
  const auto k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(k(i * 1 + 0, j * 3 + l), a(i, j) * b(0, l));
}

TEST(SwapMap, Examples) {
  EXPECT_EQ(swap_map<Rational>(1, 5), Matrix<Rational>::identity(5));
  const auto s = swap_map<Rational>(2, 2);
  EXPECT_EQ(s.apply(unit_vector<Rational>(4, 1)), unit_vector<Rational>(4, 2));
  EXPECT_EQ(swap_map<Rational>(2, 3) * swap_map<Rational>(3, 2), Matrix<Rational>::identity(6));
}

TEST(SwapMap, SwapsTensorFactors) {
  std::mt19937 rng(11);
  const auto a = random_matrix(rng, 2, 2);
  const auto b = random_matrix(rng, 3, 3);
  EXPECT_EQ(swap_map<Rational>(2, 3) * kron(a, b), kron(b, a) * swap_map<Rational>(2, 3));
}

TEST(PermuteFactors, CyclicPermutationOfThreeFactors) {
  std::mt19937 rng(5);
  const auto u = random_matrix(rng, 2, 1).col(0);
  const auto v = random_matrix(rng, 3, 1).col(0);
  const auto w = random_matrix(rng, 2, 1).col(0);
  const auto p = permute_factors<Rational>({2, 3, 2}, {2, 0, 1});
  EXPECT_EQ(p.apply(kron(kron(u, v), w)), kron(kron(w, u), v));
}

TEST(SolveRightInverse, Examples) {
  EXPECT_EQ(*solve_right_inverse(Matrix<Rational>::identity(3)), Matrix<Rational>::identity(3));
  EXPECT_EQ(*solve_right_inverse(mat({{1, 1}})), mat({{1}, {0}}));
  EXPECT_FALSE(solve_right_inverse(mat({{0, 0}})).has_value());
}

TEST(Solve, ParticularSolutionAndInconsistency) {
  const auto a = mat({{1, 2}, {2, 4}});
  const auto x = solve(a, mat({{3}, {6}}));
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, mat({{3}, {6}}));
  EXPECT_FALSE(solve(a, mat({{3}, {5}})).has_value());
}

TEST(Subspace, CoordinatesAndEquality) {
  const auto s = Subspace<Rational>::span(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  const auto t = Subspace<Rational>::span(3, {vec({1, 2, 1}), vec({1, 0, -1})});
  EXPECT_EQ(s, t);
  EXPECT_TRUE(s.contains(vec({2, 3, 1})));
  EXPECT_FALSE(s.contains(vec({1, 0, 0})));
  const auto c = s.coordinates(vec({2, 3, 1}));
  ASSERT_TRUE(c);
  EXPECT_EQ(s.embedding().apply(*c), vec({2, 3, 1}));
}

TEST(Flatten, ColumnMajorRoundTrip) {
  const auto m = mat({{1, 2, 3}, {4, 5, 6}});
  const auto f = flatten(m);
  EXPECT_EQ(f, vec({1, 4, 2, 5, 3, 6}));
  EXPECT_EQ(unflatten<Rational>(f, 2, 3), m);
}

// Properties over random matrices.

TEST(ExactlinProperty, RrefIdempotent) {
  std::mt19937 rng(20260101);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 6);
    const auto once = rref(m).reduced;
    EXPECT_EQ(rref(once).reduced, once);
  }
}

TEST(ExactlinProperty, RankNullity) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 6, -1, 1);
    const auto n = null_space(m);
    EXPECT_EQ(rank(m) + n.dim(), m.cols());
    EXPECT_TRUE((m * n.embedding()).is_zero());
  }
}

TEST(ExactlinProperty, KronAssociative) {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const auto b = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const auto c = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
  }
}

TEST(ExactlinProperty, KronMixedProduct) {
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_matrix(rng, 2, 3);
    const auto b = random_matrix(rng, 3, 2);
    const auto c = random_matrix(rng, 3, 2);
    const auto d = random_matrix(rng, 2, 2);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(ExactlinProperty, SubspaceEqualityIsCanonical) {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, 3, 5);
    const auto mix = random_matrix(rng, 3, 3);
    const auto s = Subspace<Rational>::span(m);
    const auto u = Subspace<Rational>::span(mix * m);
    if (rank(mix) == 3)
      EXPECT_EQ(s, u);
    else
      EXPECT_TRUE(s.dim() >= u.dim());
  }
}

TEST(ExactlinProperty, InverseIsTwoSided) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, 4, 4);
    const auto inv = inverse(m);
    if (rank(m) < 4) {
      EXPECT_FALSE(inv);
      continue;
    }
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix<Rational>::identity(4));
    EXPECT_EQ(*inv * m, Matrix<Rational>::identity(4));
  }
}

TEST(ExactlinProperty, PrimeFieldRankNullity) {
  ModP::Scope scope(5);
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix<ModP>(rng, 1 + rng() % 4, 1 + rng() % 5, 0, 4);
    EXPECT_EQ(rank(m) + null_space(m).dim(), m.cols());
  }
}
