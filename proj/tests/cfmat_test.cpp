#include "sturmian/cfmat.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sturmian;

namespace {

oracle::M as_array(const Mat2& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

Word random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin;
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = coin(rng) ? Letter::A : Letter::B;
  return Word(out);
}

}  // namespace

TEST(WordToMatrix, Examples) {
  const Alphabet ab(1, 2);
  EXPECT_EQ(as_array(word_to_matrix(Word::from_symbols("a"), ab)), (oracle::M{1, 1, 1, 0}));
  EXPECT_EQ(as_array(word_to_matrix(Word::from_symbols("ab"), ab)), (oracle::M{3, 1, 2, 1}));
  EXPECT_EQ(word_to_matrix(Word(), ab), identity2());
  WordMatrices wm(ab, SlopeSequence::constant(1));
  EXPECT_EQ(height(wm.M(3)), 4);
}

TEST(WordToMatrix, MonoidMorphismAndDeterminant) {
  std::mt19937 rng(11);
  const Alphabet ab(2, 5);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 30);
    const Word v = random_word(rng, 30);
    EXPECT_EQ(word_to_matrix(u + v, ab), mul(word_to_matrix(u, ab), word_to_matrix(v, ab)));
    const Word w = u + v;
    EXPECT_EQ(det2(word_to_matrix(w, ab)), w.size() % 2 == 0 ? 1 : -1);
    EXPECT_EQ(as_array(word_to_matrix(w, ab)), oracle::word_matrix(w.symbols(), 2, 5));
  }
}

TEST(WordToMatrix, PalindromesAreSymmetric) {
  std::mt19937 rng(12);
  const Alphabet ab(1, 3);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 20);
    EXPECT_TRUE(is_symmetric(word_to_matrix(u + u.mirror(), ab)));
    EXPECT_TRUE(is_symmetric(word_to_matrix(u + Word::from_symbols("b") + u.mirror(), ab)));
  }
}

TEST(WordMatrices, BlockRecursionMatchesWords) {
  for (const char* spec : {"const:1", "const:3", "periodic:1,2", "explicit:3,1;tail=periodic:2,1"}) {
    const SlopeSequence s = SlopeSequence::parse(spec);
    const Alphabet ab(1, 4);
    WordMatrices wm(ab, s);
    const CharacteristicWord cw(s);
    for (int k = 0; k <= 8; ++k) {
      const Word w = cw.build(k);
      EXPECT_EQ(wm.M(k), word_to_matrix(w, ab)) << spec << " k=" << k;
      if (w.size() >= 2) {
        EXPECT_EQ(wm.M_trunc(k), word_to_matrix(truncate2(w), ab));
        EXPECT_EQ(mul(wm.M_trunc(k), wm.F(k)), wm.M(k));
      }
    }
  }
}

TEST(WordMatrices, PalindromeMatrixMatchesWord) {
  const SlopeSequence s = SlopeSequence::parse("periodic:2,1,3");
  const Alphabet ab(3, 1);
  WordMatrices wm(ab, s);
  const CharacteristicWord cw(s);
  for (std::uint64_t ell = 1; cw.palindrome_length(ell) <= 5000; ++ell) {
    const PalindromeIndex idx = cw.decompose(ell);
    EXPECT_EQ(wm.palindrome_matrix(idx.k, idx.t), word_to_matrix(cw.palindromic_prefix(ell), ab)) << ell;
  }
}

TEST(WordMatrices, HeightGrowthBounds) {
  for (const char* spec : {"const:1", "const:2", "periodic:1,3", "explicit:4;tail=const:1"}) {
    WordMatrices wm(Alphabet(1, 2), SlopeSequence::parse(spec));
    for (int k = 1; k <= 14; ++k) EXPECT_TRUE(wm.check_height_growth(k)) << spec << " k=" << k;
  }
}

TEST(WordMatrices, DigitBudgetAborts) {
  WordMatrices wm(Alphabet(1, 2), SlopeSequence::constant(1), 50);
  EXPECT_THROW(wm.extend_to(40), ResourceError);
  EXPECT_GT(wm.depth(), 5);
  EXPECT_LE(approx_decimal_digits(wm.X(wm.depth())), 50u);
}

TEST(Convergents, Fibonacci) {
  const auto c = convergents(Alphabet(1, 2), SlopeSequence::constant(1), 3);
  ASSERT_EQ(c.size(), 4u);
  const std::vector<std::pair<int, int>> expected = {{0, 1}, {1, 1}, {2, 3}, {3, 4}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(c[i].p, expected[i].first);
    EXPECT_EQ(c[i].q, expected[i].second);
  }
}

TEST(Convergents, DeterminantAndGrowth) {
  const auto c = convergents(Alphabet(2, 3), SlopeSequence::periodic({1, 2}), 60);
  for (std::size_t n = 1; n < c.size(); ++n) {
    const BigInt d = c[n - 1].p * c[n].q - c[n].p * c[n - 1].q;
    EXPECT_TRUE(d == 1 || d == -1);
    if (n >= 2) EXPECT_GT(c[n].q, c[n - 1].q);
  }
}

TEST(XiEnclosure, FibonacciValue) {
  const RealEnclosure e = xi_enclosure(Alphabet(1, 2), SlopeSequence::constant(1), 10);
  EXPECT_LE(e.width(), Rational(1, 1024));
  // [0; 1, 2, 1, 1, 2, 1, 2, 1, ...] evaluated from a long word prefix.
  const std::string w = oracle::mk(oracle::constant(1, 24), 22);
  const mpq_class deep = oracle::cf_value(oracle::letters(w, 1, 2));
  EXPECT_TRUE(e.contains(deep));
  EXPECT_NEAR(deep.get_d(), 0.7204844, 1e-6);
}

TEST(XiEnclosure, NestedAndShrinking) {
  const Alphabet ab(1, 2);
  const SlopeSequence s = SlopeSequence::constant(2);
  RealEnclosure prev = xi_enclosure(ab, s, 8);
  for (unsigned long bits = 9; bits <= 200; bits += 7) {
    const RealEnclosure e = xi_enclosure(ab, s, bits);
    EXPECT_LE(e.width(), Rational(1, BigInt(1) << bits));
    EXPECT_TRUE(prev.contains(e));
    prev = e;
  }
}

TEST(XiEnclosure, ContainsDeeperConvergents) {
  const Alphabet ab(1, 3);
  const SlopeSequence s = SlopeSequence::periodic({2, 1});
  const RealEnclosure e = xi_enclosure(ab, s, 30);
  const auto c = convergents(ab, s, 200);
  for (std::size_t n = 60; n < c.size(); ++n) EXPECT_TRUE(e.contains(Rational(c[n].p, c[n].q)));
}

TEST(Eta, ConvergesToReverseCf) {
  const EtaValue fib = eta(Alphabet(1, 2), SlopeSequence::constant(1), 12);
  EXPECT_EQ(fib.target, reverse_cf_value(SlopeSequence::constant(1), 13));
  EXPECT_LT(std::fabs(fib.estimate.mid() / fib.target.get_d() - 1), 0.02);
  const EtaValue two = eta(Alphabet(1, 2), SlopeSequence::constant(2), 10);
  EXPECT_LT(std::fabs(two.estimate.mid() / (1 + std::sqrt(2.0)) - 1), 0.02);
}

TEST(Eta, AboveOneAndTrendingToTarget) {
  WordMatrices wm(Alphabet(1, 2), SlopeSequence::periodic({1, 2}));
  double prev_even = 1e9, prev_odd = 1e9;
  for (int k = 3; k <= 16; ++k) {
    const EtaValue e = eta(wm, k);
    EXPECT_GT(e.estimate.lo, 1.0);
    const double err = std::fabs(e.estimate.mid() / e.target.get_d() - 1);
    double& prev = k % 2 ? prev_odd : prev_even;
    EXPECT_LE(err, prev * 1.05 + 1e-12) << k;
    prev = err;
  }
}
