#include "sturmian/log_bound.hpp"
#include "sturmian/mat2.hpp"
#include "sturmian/quad_real.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace sturmian;

TEST(LogBound, EnclosesSmallIntegers) {
  for (long n : {1L, 2L, 3L, 10L, 1000003L, 1L << 40}) {
    const Bracket b = log_bound(BigInt(n));
    EXPECT_TRUE(b.contains(std::log(static_cast<double>(n)))) << n;
    EXPECT_LT(b.width(), 1e-12 * std::max(1.0, b.hi));
  }
}

TEST(LogBound, HugeIntegerFromBitLength) {
  BigInt n;
  mpz_ui_pow_ui(n.get_mpz_t(), 10, 100000);
  const Bracket b = log_bound(n);
  const double exact = 100000 * std::log(10.0);
  EXPECT_TRUE(b.lo <= exact + 1e-6 && exact - 1e-6 <= b.hi);
  EXPECT_LT(b.width() / exact, 1e-12);
  EXPECT_TRUE(log10_bound(n).contains(100000.0) || std::fabs(log10_bound(n).mid() - 100000.0) < 1e-6);
}

TEST(LogBound, RationalIsDifferenceOfLogs) {
  const Bracket b = log_bound(Rational(1, 3));
  EXPECT_TRUE(b.contains(-std::log(3.0)));
}

TEST(BracketArithmetic, RoundsOutward) {
  const Bracket third = Bracket::point(1.0) / Bracket::point(3.0);
  EXPECT_LE(third.lo, 1.0 / 3.0);
  EXPECT_GE(third.hi, 1.0 / 3.0);
  const Bracket sum = Bracket{1, 2} + Bracket{3, 4};
  EXPECT_LE(sum.lo, 4.0);
  EXPECT_GE(sum.hi, 6.0);
  const Bracket prod = Bracket{-1, 2} * Bracket{3, 4};
  EXPECT_LE(prod.lo, -4.0);
  EXPECT_GE(prod.hi, 8.0);
}

TEST(QuadRealArithmetic, GoldenPlusTwo) {
  const QuadReal golden(-1, 1, 5, 2);
  EXPECT_EQ(golden + QuadReal(2), QuadReal(3, 1, 5, 2));
  EXPECT_EQ(golden.conjugate(), QuadReal(-1, -1, 5, 2));
  EXPECT_LT(QuadReal(-1, 1, 2, 1), golden);
}

TEST(QuadRealArithmetic, FieldOperationsRoundTrip) {
  const QuadReal x(3, -2, 7, 5);
  const QuadReal y(1, 4, 7, 3);
  EXPECT_EQ((x * y) / y, x);
  EXPECT_EQ((x + y) - y, x);
  EXPECT_EQ(x * x.inverse(), QuadReal(1));
}

TEST(QuadRealArithmetic, SquareFactorsFold) {
  EXPECT_EQ(QuadReal::sqrt(8), QuadReal(0, 2, 2, 1));
  EXPECT_TRUE(QuadReal::sqrt(9).is_rational());
  EXPECT_EQ(QuadReal::sqrt(9), QuadReal(3));
}

TEST(QuadRealArithmetic, CompareAcrossRadicands) {
  EXPECT_LT(QuadReal::sqrt(2), QuadReal::sqrt(3));
  EXPECT_LT(QuadReal(1, 1, 2, 1), QuadReal(0, 1, 6, 1));
  EXPECT_GT(QuadReal::sqrt(10), QuadReal(Rational(316, 100)));
  EXPECT_LT(QuadReal::sqrt(10), QuadReal(Rational(317, 100)));
  // Field arithmetic does not mix radicands.
  EXPECT_THROW(QuadReal::sqrt(2) + QuadReal::sqrt(3), std::domain_error);
}

TEST(QuadRealArithmetic, Rendering) {
  EXPECT_EQ(QuadReal(-1, 1, 5, 2).radical(), "(-1+√5)/2");
  EXPECT_EQ(QuadReal(-1, 1, 2, 1).radical(), "-1+√2");
  EXPECT_EQ(QuadReal(0, 2, 3, 1).radical(), "2√3");
  EXPECT_EQ(QuadReal(-1, 1, 5, 2).decimal(10), "0.6180339887");
  EXPECT_EQ((-QuadReal(-1, 1, 5, 2)).decimal(4), "-0.6180");
}

TEST(QuadRealArithmetic, RandomCompareAgreesWithDoubles) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    const QuadReal x(d(rng), d(rng), 2, std::abs(d(rng)) + 1);
    const QuadReal y(d(rng), d(rng), 3, std::abs(d(rng)) + 1);
    const double gap = x.to_double() - y.to_double();
    if (std::fabs(gap) > 1e-9) EXPECT_EQ(compare(x, y), gap > 0 ? 1 : -1);
  }
}

TEST(Mat2Core, ElementaryAndHeight) {
  const Mat2 e = elementary(1);
  EXPECT_EQ(e(0, 0), 1);
  EXPECT_EQ(e(1, 1), 0);
  EXPECT_EQ(height(identity2()), 1);
  EXPECT_EQ(det2(e), -1);
  const Mat2 m = mul(elementary(1), elementary(2));
  EXPECT_EQ(height(m), 3);
  EXPECT_EQ(power(e, 10)(0, 0), 89);
}

TEST(Mat2Core, InverseUnimodular) {
  const std::vector<unsigned> letters = {1, 2, 2, 1, 3};
  const Mat2 m = letters_to_matrix(letters);
  EXPECT_EQ(mul(m, inverse_unimodular(m)), identity2());
}

TEST(Mat2Core, QuasiMultiplicativity) {
  EXPECT_TRUE(quasi_mult_check(elementary(1), elementary(1)));
  EXPECT_TRUE(quasi_mult_check(identity2(), identity2()));
}

TEST(Mat2Core, PurelyPeriodicValues) {
  EXPECT_EQ(purely_periodic_value(elementary(1)), QuadReal(-1, 1, 5, 2));
  EXPECT_EQ(purely_periodic_value(elementary(2)), QuadReal(-1, 1, 2, 1));
  const std::vector<unsigned> w = {2, 1, 1};
  EXPECT_EQ(purely_periodic_value(letters_to_matrix(w)), QuadReal(-2, 1, 10, 3));
}
