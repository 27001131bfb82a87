#include "sturmian/slope.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace sturmian;

TEST(SlopeSequence, Terms) {
  EXPECT_EQ(SlopeSequence::constant(1).term(5), 1u);
  EXPECT_EQ(SlopeSequence::periodic({2, 1}).term(3), 2u);
  EXPECT_EQ(SlopeSequence::with_prefix({3}, SlopeSequence::constant(1)).term(1), 3u);
  EXPECT_EQ(SlopeSequence::with_prefix({3}, SlopeSequence::constant(1)).term(2), 1u);
}

TEST(SlopeSequence, ParseAndSpecRoundTrip) {
  for (const char* text : {"const:1", "const:7", "periodic:1,2", "periodic:2,1,1", "explicit:3,1;tail=periodic:2,1",
                           "explicit:5;tail=const:2"}) {
    const SlopeSequence s = SlopeSequence::parse(text);
    EXPECT_EQ(s.spec(), text);
    EXPECT_EQ(SlopeSequence::parse(s.spec()).terms(20), s.terms(20));
  }
  EXPECT_EQ(SlopeSequence::parse("explicit:3,1;tail=periodic:2,1").terms(6), (std::vector<unsigned>{3, 1, 2, 1, 2, 1}));
}

TEST(SlopeSequence, ParseRejectsMalformed) {
  for (const char* text : {"", "const:", "const:0", "const:x", "periodic:", "periodic:1,,2", "explicit:1,2",
                           "explicit:1;tail=explicit:2;tail=const:1", "foo:1", "const:1,2", "periodic:-1"}) {
    EXPECT_THROW(SlopeSequence::parse(text), std::invalid_argument) << text;
  }
}

TEST(SlopeSequence, BoundAndPeriod) {
  const SlopeSequence s = SlopeSequence::parse("explicit:9;tail=periodic:1,3");
  EXPECT_EQ(s.bound(), 9u);
  EXPECT_EQ(s.preperiod(), 1u);
  EXPECT_EQ(s.period(), 2u);
  EXPECT_FALSE(SlopeSequence::generated("k", [](std::uint64_t k) { return unsigned(k); }).eventually_periodic());
}

TEST(ReverseCf, SmallValues) {
  EXPECT_EQ(reverse_cf_value(SlopeSequence::constant(1), 1), Rational(1));
  EXPECT_EQ(reverse_cf_value(SlopeSequence::constant(1), 3), Rational(3, 2));
  EXPECT_EQ(reverse_cf_value(SlopeSequence::constant(2), 2), Rational(5, 2));
}

TEST(ReverseCf, MatchesOracle) {
  const SlopeSequence s = SlopeSequence::parse("explicit:4,1;tail=periodic:3,1,2");
  const std::vector<unsigned> t = s.terms(15);
  for (std::uint64_t k = 1; k <= 15; ++k) {
    std::vector<unsigned> rev(t.rbegin() + static_cast<long>(15 - k), t.rend());
    // [s_k; s_{k-1}, ..., s_1] = 1 / [0; s_k, ..., s_1]
    EXPECT_EQ(reverse_cf_value(s, k), Rational(1 / oracle::cf_value(rev)));
  }
}

TEST(SigmaExact, ConstantSequences) {
  EXPECT_EQ(sigma_exact(SlopeSequence::constant(1)), QuadReal(-1, 1, 5, 2));
  EXPECT_EQ(sigma_exact(SlopeSequence::constant(2)), QuadReal(-1, 1, 2, 1));
  for (unsigned d = 1; d <= 9; ++d) {
    // 2 / (d + sqrt(d^2 + 4))
    EXPECT_EQ(sigma_exact(SlopeSequence::constant(d)),
              QuadReal(2) / (QuadReal(long(d)) + QuadReal::sqrt(BigInt(d * d + 4))));
  }
}

TEST(SigmaExact, PeriodicSequence) {
  EXPECT_EQ(sigma_exact(SlopeSequence::periodic({2, 1, 1})), QuadReal(-2, 1, 10, 3));
}

TEST(SigmaExact, PreperiodIsIrrelevant) {
  EXPECT_EQ(sigma_exact(SlopeSequence::parse("explicit:7,7,7;tail=const:2")), sigma_exact(SlopeSequence::constant(2)));
}

TEST(SigmaExact, GeneratedThrows) {
  EXPECT_THROW(sigma_exact(SlopeSequence::generated("k", [](std::uint64_t k) { return unsigned(k); })),
               std::domain_error);
}

TEST(SigmaEstimate, ConvergesToExact) {
  for (unsigned d : {1u, 2u}) {
    const SlopeSequence s = SlopeSequence::constant(d);
    const SigmaValue v = sigma_estimate(s, 30, 10);
    EXPECT_NEAR(v.estimate.get_d(), sigma_exact(s).to_double(), 1e-6);
  }
}

TEST(SigmaEstimate, WiderWindowNeverLarger) {
  const SlopeSequence s = SlopeSequence::periodic({1, 2});
  const SigmaValue wide = sigma_estimate(s, 40, 20);
  const SigmaValue narrow = sigma_estimate(s, 40, 10);
  EXPECT_LE(wide.estimate, narrow.estimate);
  EXPECT_LE(narrow.estimate, Rational(1 / reverse_cf_value(s, 40)));
}

TEST(SigmaEstimate, ErrorNonincreasingAlongPeriods) {
  const SlopeSequence s = SlopeSequence::parse("explicit:1,1,1;tail=periodic:3,1");
  const QuadReal exact = sigma_exact(s);
  double prev = 1e9;
  for (std::uint64_t k = 8; k <= 40; k += 2) {
    const double err = std::fabs(sigma_estimate(s, k).estimate.get_d() - exact.to_double());
    EXPECT_LE(err, prev + 1e-15);
    prev = err;
  }
  EXPECT_LT(prev, 1e-9);
}

TEST(SigmaEstimate, FlagsGrowingTerms) {
  const SlopeSequence s = SlopeSequence::generated("k", [](std::uint64_t k) { return unsigned(k); });
  EXPECT_TRUE(sigma_estimate(s, 30).unbounded);
  EXPECT_FALSE(sigma_estimate(SlopeSequence::constant(3), 30).unbounded);
}
