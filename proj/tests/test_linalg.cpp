#include <gtest/gtest.h>

#include <random>

#include "ttilt/linalg.hpp"

using namespace ttilt;

namespace {

Matrix<Rational> random_matrix(std::mt19937_64& rng, Index r, Index c, int density) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, 99);
  Matrix<Rational> m = zero_matrix<Rational>(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      if (keep(rng) < density) m(i, j) = Rational(val(rng));
  return m;
}

}  // namespace

TEST(Rational, ArithmeticStaysExactAcrossPromotion) {
  Rational big(INT64_MAX);
  Rational x = big * big;
  EXPECT_FALSE(x.is_small());
  EXPECT_EQ(x / big, big);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, FractionSumOverflowFallsBack) {
  Rational a(1, INT64_MAX), b(1, INT64_MAX - 1);
  Rational s = a + b;
  EXPECT_EQ(s - b, a);
}

TEST(Zp, FieldOperations) {
  Zp a(3, 7), b(5, 7);
  EXPECT_EQ((a * b).value(), 1);
  EXPECT_EQ((a * a.inverse()).value(), 1);
  EXPECT_EQ((a - b).value(), 5);
  EXPECT_EQ((a + Zp(4)).value(), 0);
  EXPECT_THROW(a + Zp(1, 5), std::exception);
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
}

TEST(Linalg, KernelAndSolveProperties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Index r = 1 + trial % 6, c = 1 + (trial * 5) % 7;
    Matrix<Rational> m = random_matrix(rng, r, c, 50);
    Matrix<Rational> k = kernel_basis<Rational>(m);
    EXPECT_EQ(rank<Rational>(m) + k.cols(), c);
    EXPECT_TRUE(is_zero<Rational>(mul<Rational>(m, k)));
    Matrix<Rational> x = random_matrix(rng, c, 2, 60);
    Matrix<Rational> b = mul<Rational>(m, x);
    auto sol = solve<Rational>(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(mul<Rational>(m, *sol), b);
  }
}

TEST(Linalg, InconsistentSystemHasNoSolution) {
  Matrix<Rational> a = zero_matrix<Rational>(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  Matrix<Rational> b = zero_matrix<Rational>(2, 1);
  b(0, 0) = 1;
  EXPECT_FALSE(solve<Rational>(a, b).has_value());
}

TEST(Linalg, SparseEchelonAgreesWithDense) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Index r = 2 + trial % 5, c = 3 + trial % 6;
    Matrix<Rational> m = random_matrix(rng, r, c, 40);
    SparseEchelon<Rational> e(c);
    for (Index i = 0; i < r; ++i) e.add(to_sparse<Rational>(m.row(i).transpose()));
    EXPECT_EQ(e.rank(), rank<Rational>(m));
    auto ker = e.kernel();
    EXPECT_EQ(static_cast<Index>(ker.size()), c - e.rank());
    for (const auto& v : ker) EXPECT_TRUE(is_zero<Rational>(mul<Rational>(m, to_dense<Rational>(v, c))));
  }
}

TEST(Linalg, SpanCoordsRecoversCombination) {
  std::mt19937_64 rng(3);
  Matrix<Rational> b = random_matrix(rng, 3, 6, 70);
  while (rank<Rational>(b) < 3) b = random_matrix(rng, 3, 6, 70);
  std::vector<SparseRow<Rational>> rows;
  for (Index i = 0; i < 3; ++i) rows.push_back(to_sparse<Rational>(b.row(i).transpose()));
  SpanCoords<Rational> sc(6, rows);
  Vector<Rational> coeff(3);
  coeff << Rational(2), Rational(-1, 2), Rational(5);
  Vector<Rational> v = b.transpose() * coeff;
  auto c = sc.coords(to_sparse<Rational>(v));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, coeff);
  Matrix<Rational> id = identity_matrix<Rational>(6);
  int outside = 0;
  for (Index i = 0; i < 6; ++i) outside += !sc.coords(to_sparse<Rational>(id.row(i).transpose())).has_value();
  EXPECT_GE(outside, 3);
}
