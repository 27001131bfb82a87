#include "sturmian/spectrum.hpp"

#include "sturmian/exponents.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace sturmian;

TEST(Substitution, FirstIterates) {
  EXPECT_EQ(psi_iterate(0).letters, (std::vector<unsigned>{1}));
  EXPECT_EQ(psi_iterate(1).letters, (std::vector<unsigned>{2}));
  EXPECT_EQ(psi_iterate(2).letters, (std::vector<unsigned>{2, 1, 1}));
  EXPECT_EQ(psi_iterate(3).letters, (std::vector<unsigned>{2, 1, 1, 2, 2}));
  EXPECT_THROW(psi_iterate(40, 1000), ResourceError);
}

TEST(Substitution, LetterCountsFollowRecursion) {
  std::size_t ones = 1, twos = 0;
  for (unsigned n = 0; n <= 20; ++n) {
    const SubstitutionWord w = psi_iterate(n);
    const auto c1 = static_cast<std::size_t>(std::count(w.letters.begin(), w.letters.end(), 1u));
    EXPECT_EQ(c1, ones);
    EXPECT_EQ(w.letters.size() - c1, twos);
    const std::size_t next_ones = 2 * twos, next_twos = ones + twos;
    ones = next_ones;
    twos = next_twos;
  }
}

TEST(Substitution, IteratesArePrefixesFromTwoOn) {
  for (unsigned n = 2; n < 15; ++n) {
    const auto a = psi_iterate(n).letters, b = psi_iterate(n + 1).letters;
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin())) << n;
  }
}

TEST(SigmaN, FirstValues) {
  EXPECT_EQ(sigma_n(0), QuadReal(-1, 1, 5, 2));
  EXPECT_EQ(sigma_n(1), QuadReal(-1, 1, 2, 1));
  EXPECT_EQ(sigma_n(2), QuadReal(-2, 1, 10, 3));
}

TEST(SigmaN, DecreasingTowardLimit) {
  // From n = 6 on sigma_n agrees with s beyond 30 digits.
  const RealEnclosure s = s_limit(30);
  QuadReal prev = sigma_n(0);
  QuadReal gap_prev = prev - QuadReal(s.lo);
  for (unsigned n = 1; n <= 5; ++n) {
    const QuadReal cur = sigma_n(n);
    EXPECT_LT(cur, prev);
    EXPECT_GT(cur, QuadReal(s.hi));
    const QuadReal gap = cur - QuadReal(s.lo);
    EXPECT_LT(gap, gap_prev);
    prev = cur;
    gap_prev = gap;
  }
}

TEST(SLimit, MatchesDeepEvaluation) {
  const auto letters = psi_iterate(18).letters;
  const mpq_class deep = oracle::cf_value(std::vector<unsigned>(letters.begin(), letters.begin() + 200));
  const RealEnclosure e = s_limit(25);
  EXPECT_LE(e.width(), Rational(1, BigInt("10000000000000000000000000")));
  EXPECT_NEAR(deep.get_d(), e.mid(), 1e-15);
  EXPECT_NEAR(e.mid(), 0.38674997071430, 1e-13);
}

TEST(SLimit, Nested) {
  RealEnclosure prev = s_limit(5);
  for (unsigned d = 6; d <= 30; d += 3) {
    const RealEnclosure e = s_limit(d);
    EXPECT_TRUE(prev.contains(e));
    prev = e;
  }
}

TEST(SpectrumTable, FirstRows) {
  const auto rows = spectrum_table(3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].hat_w2, QuadReal(3, 1, 5, 2));
  EXPECT_EQ(rows[1].hat_w2, QuadReal(1, 1, 2, 1));
  EXPECT_EQ(rows[2].hat_w2, QuadReal(4, 1, 10, 3));
  EXPECT_EQ(rows[0].hat_lambda2, QuadReal(-1, 1, 5, 2));
  EXPECT_EQ(rows[1].hat_lambda2, QuadReal(2, -1, 2, 1));
  EXPECT_EQ(rows[2].hat_lambda2, QuadReal(-2, 1, 10, 2));
}

TEST(SpectrumTable, HatLambdaConsistency) {
  for (const auto& r : spectrum_table(7)) {
    EXPECT_EQ(r.hat_lambda2, (QuadReal(1) + r.sigma) / (QuadReal(2) + r.sigma));
    EXPECT_EQ(r.hat_lambda2, QuadReal(1) - QuadReal(1) / r.hat_w2);
  }
}

TEST(SpectrumTable, RowsRealizedBySlopes) {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto pattern = spectrum_slope_pattern(n);
    auto reversed = psi_iterate(n).letters;
    std::reverse(reversed.begin(), reversed.end());
    EXPECT_EQ(pattern, reversed);
    const QuadReal s = sigma_exact(SlopeSequence::periodic(pattern));
    EXPECT_EQ(s, sigma_n(n)) << n;
    const TheoreticalExponents th = theoretical_exponents(s);
    EXPECT_EQ(th.hat_w2, spectrum_table(n + 1).back().hat_w2);
  }
}
