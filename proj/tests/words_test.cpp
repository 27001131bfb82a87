#include "sturmian/words.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sturmian;

namespace {

const std::vector<std::string> kSlopes = {"const:1", "const:2", "const:3", "periodic:1,2", "periodic:2,1,1",
                                          "explicit:3,1;tail=periodic:2,1", "explicit:1,4;tail=const:1"};

std::vector<unsigned> oracle_terms(const SlopeSequence& s, int n) {
  std::vector<unsigned> out(n + 2, 0);
  for (int i = 1; i < n + 2; ++i) out[i] = s.term(static_cast<std::uint64_t>(i));
  return out;
}

}  // namespace

TEST(Word, Basics) {
  const Word w = Word::from_symbols("abaab");
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(w.symbols(), "abaab");
  EXPECT_EQ(w.render(Alphabet(1, 2)), "1,2,1,1,2");
  EXPECT_EQ(w.mirror().symbols(), "baaba");
  EXPECT_THROW(Word::from_symbols("abc"), std::invalid_argument);
  EXPECT_THROW(Alphabet(2, 2), std::invalid_argument);
}

TEST(Word, Truncate2) {
  EXPECT_EQ(truncate2(Word::from_symbols("abaab")).symbols(), "aba");
  EXPECT_TRUE(truncate2(Word::from_symbols("ab")).empty());
  EXPECT_THROW(truncate2(Word::from_symbols("a")), std::invalid_argument);
  const Word m3 = build_mk(SlopeSequence::constant(1), 3);
  EXPECT_EQ(truncate2(m3).symbols(), "a");
  EXPECT_EQ(CharacteristicWord::suffix_f(3).symbols(), "ba");
  EXPECT_EQ(CharacteristicWord::suffix_f(4).symbols(), "ab");
}

TEST(Word, Palindromes) {
  EXPECT_TRUE(is_palindrome(Word::from_symbols("aba")));
  EXPECT_FALSE(is_palindrome(Word::from_symbols("ab")));
  EXPECT_TRUE(is_palindrome(Word()));
}

TEST(BuildMk, FibonacciBlocks) {
  const SlopeSequence fib = SlopeSequence::constant(1);
  EXPECT_EQ(build_mk(fib, 2).symbols(), "ab");
  EXPECT_EQ(build_mk(fib, 5).symbols(), "abaababa");
  EXPECT_EQ(build_mk(SlopeSequence::constant(2), 1).symbols(), "ba");
}

TEST(BuildMk, MatchesStringRecursion) {
  for (const auto& spec : kSlopes) {
    const SlopeSequence s = SlopeSequence::parse(spec);
    const auto t = oracle_terms(s, 12);
    for (int k = 0; k <= 9; ++k) EXPECT_EQ(build_mk(s, k).symbols(), oracle::mk(t, k)) << spec << " k=" << k;
  }
}

TEST(BuildMk, EndingLetterAlternates) {
  for (const auto& spec : kSlopes) {
    const CharacteristicWord cw(SlopeSequence::parse(spec));
    for (int k = 0; k <= 8; ++k) {
      const Word w = cw.build(k);
      EXPECT_EQ(w[w.size() - 1], k % 2 == 0 ? Letter::B : Letter::A) << spec << " k=" << k;
    }
  }
}

TEST(WordPrefix, Fibonacci) {
  const SlopeSequence fib = SlopeSequence::constant(1);
  EXPECT_EQ(word_prefix(fib, 8).symbols(), "abaababa");
  EXPECT_EQ(word_prefix(fib, 3).symbols(), "aba");
  EXPECT_TRUE(word_prefix(fib, 0).empty());
}

TEST(WordPrefix, PositionalAccessAgrees) {
  for (const auto& spec : kSlopes) {
    const CharacteristicWord cw(SlopeSequence::parse(spec));
    const Word p = cw.prefix(3000);
    for (std::size_t i = 0; i < p.size(); ++i) ASSERT_EQ(cw.at(i), p[i]) << spec << " i=" << i;
  }
}

TEST(WordPrefix, FarLettersWithoutMaterializing) {
  // Far positions come from the recursion alone; compare with a materialized prefix.
  const CharacteristicWord small(SlopeSequence::constant(1), 100);
  const Word big = CharacteristicWord(SlopeSequence::constant(1)).prefix(500000);
  for (std::uint64_t i : {1000ull, 77777ull, 499999ull}) EXPECT_EQ(small.at(i), big[i]);
  EXPECT_THROW(small.prefix(1000), ResourceError);
}

TEST(PalindromicPrefix, Examples) {
  const SlopeSequence fib = SlopeSequence::constant(1);
  EXPECT_EQ(palindromic_prefix(fib, 2).symbols(), "a");
  EXPECT_EQ(palindromic_prefix(fib, 4).symbols(), "abaaba");
  EXPECT_EQ(palindromic_prefix(SlopeSequence::constant(2), 1).symbols(), "b");
}

TEST(PalindromicPrefix, DecomposeIndex) {
  const CharacteristicWord cw(SlopeSequence::constant(2));
  // ell_k = s_2 + ... + s_k = 2(k-1), t in 1..2
  const PalindromeIndex i5 = cw.decompose(5);
  EXPECT_EQ(i5.k, 3);
  EXPECT_EQ(i5.t, 1u);
  const PalindromeIndex i4 = cw.decompose(4);
  EXPECT_EQ(i4.k, 2);
  EXPECT_EQ(i4.t, 2u);
}

TEST(PalindromicPrefix, EnumerateAllPalindromicPrefixes) {
  // Besides the runs b^j with j < s_1 - 1 in front of the first a, every
  // palindromic prefix appears, in increasing order.
  for (const auto& spec : kSlopes) {
    const CharacteristicWord cw(SlopeSequence::parse(spec));
    const Word head = cw.prefix(20000);
    const auto z = palindromic_prefix_lengths(head);
    std::set<std::size_t> scan(z.begin(), z.end());
    std::set<std::size_t> enumerated = {0};
    for (unsigned j = 1; j + 1 < cw.s(1); ++j) enumerated.insert(j);
    std::uint64_t prev = 0;
    for (std::uint64_t ell = 1; cw.palindrome_length(ell) <= head.size(); ++ell) {
      const Word w = cw.palindromic_prefix(ell);
      EXPECT_TRUE(is_palindrome(w));
      EXPECT_TRUE(head.starts_with(w));
      if (ell > 1) EXPECT_GT(w.size(), prev);
      prev = w.size();
      enumerated.insert(w.size());
    }
    EXPECT_EQ(enumerated, scan) << spec;
  }
}

TEST(PalindromicPrefix, ZScanMatchesBruteForce) {
  const Word head = word_prefix(SlopeSequence::periodic({1, 3}), 400);
  std::vector<std::size_t> brute;
  const std::string s = head.symbols();
  for (std::size_t n = 0; n <= s.size(); ++n) {
    if (oracle::palindrome(s.substr(0, n))) brute.push_back(n);
  }
  EXPECT_EQ(palindromic_prefix_lengths(head), brute);
}

TEST(PalindromicPrefix, FibonacciLengths) {
  const CharacteristicWord cw(SlopeSequence::constant(1));
  const std::vector<std::uint64_t> expected = {0, 1, 3, 6, 11, 19, 32};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(cw.palindrome_length(i + 1), expected[i]);
}

TEST(Commutation, HoldsOnExamples) {
  EXPECT_TRUE(check_commutation(SlopeSequence::constant(1), 3));
  EXPECT_TRUE(check_commutation(SlopeSequence::constant(2), 4));
  EXPECT_TRUE(check_commutation(SlopeSequence::periodic({1, 2}), 5));
}

TEST(Commutation, HoldsAcrossSlopes) {
  for (const auto& spec : kSlopes) {
    const CharacteristicWord cw(SlopeSequence::parse(spec));
    for (int k = 1; k <= 8; ++k) EXPECT_TRUE(cw.check_commutation(k)) << spec << " k=" << k;
    for (int k = 2; k <= 7; ++k) {
      if (cw.length(k - 1) >= 2) EXPECT_TRUE(cw.check_power_prefix(k)) << spec << " k=" << k;
    }
  }
}

TEST(CommonPrefix, Examples) {
  EXPECT_EQ(common_prefix_length(SlopeSequence::constant(1), 3), 6u);
  EXPECT_EQ(common_prefix_length(SlopeSequence::constant(1), 4), 11u);
  const CharacteristicWord cw(SlopeSequence::constant(2));
  EXPECT_EQ(cw.common_prefix_length(3), 3 * cw.length(3) + cw.length(2) - 2);
}

TEST(CommonPrefix, ScanEqualsFormula) {
  for (const auto& spec : kSlopes) {
    const SlopeSequence s = SlopeSequence::parse(spec);
    const CharacteristicWord cw(s);
    const auto t = oracle_terms(s, 12);
    const std::string phi = oracle::mk(t, 11);
    for (int k = 1; k <= 7; ++k) {
      const std::string mk = oracle::mk(t, k);
      std::size_t n = 0;
      while (n < phi.size() && phi[n] == mk[n % mk.size()]) ++n;
      ASSERT_LT(n, phi.size());
      EXPECT_EQ(cw.common_prefix_length(k), n) << spec << " k=" << k;
      EXPECT_EQ(cw.common_prefix_formula(k), n) << spec << " k=" << k;
    }
  }
}

TEST(CharacteristicWord, LengthsTabulated) {
  const CharacteristicWord cw(SlopeSequence::constant(1));
  EXPECT_EQ(cw.length(10), 89u);
  EXPECT_GE(cw.max_index(), 80);
  EXPECT_THROW(cw.build(40), ResourceError);
}
