#pragma once

#include "sturmian/slope.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

inline constexpr std::size_t kDefaultMaxWordLen = 1000000;

enum class Letter : std::uint8_t { A, B };

/// Two distinct positive integers standing for the letters a and b.
struct Alphabet {
  unsigned a = 1;
  unsigned b = 2;

  Alphabet() = default;
  Alphabet(unsigned a_value, unsigned b_value);

  unsigned value(Letter l) const { return l == Letter::A ? a : b; }
  unsigned max_letter() const { return a > b ? a : b; }
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Symbols 'a' and 'b'; anything else throws std::invalid_argument.
  static Word from_symbols(std::string_view symbols);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  void append(const Word& w) { letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end()); }
  void push_back(Letter l) { letters_.push_back(l); }
  Word prefix(std::size_t n) const;
  Word mirror() const;
  bool starts_with(const Word& w) const;

  /// "abaab" form.
  std::string symbols() const;
  /// Comma-separated letter values, e.g. "1,2,1".
  std::string render(const Alphabet& alphabet) const;
  std::vector<unsigned> values(const Alphabet& alphabet) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word operator+(Word lhs, const Word& rhs);
Word repeat(const Word& w, std::uint64_t times);

bool is_palindrome(const Word& w);

/// w without its last two letters; throws std::invalid_argument if |w| < 2.
Word truncate2(const Word& w);

/// ell = ell_k + t with ell_k = s_2 + ... + s_k (ell_1 = 0), 1 <= t <= s_{k+1}.
struct PalindromeIndex {
  std::uint64_t ell = 0;
  int k = 0;
  std::uint64_t t = 0;
};

/// The characteristic word m_phi and its building blocks m_k.
///
/// Lengths |m_k| are tabulated at construction (up to 2^62). Words are only
/// materialized below `max_word_len`; single letters are always available
/// positionally from the recursion.
class CharacteristicWord {
 public:
  explicit CharacteristicWord(SlopeSequence seq, std::size_t max_word_len = kDefaultMaxWordLen);

  const SlopeSequence& slope() const { return seq_; }
  std::size_t max_word_len() const { return cap_; }

  /// s_k, from the tabulated terms.
  unsigned s(int k) const;
  /// Largest k whose length is tabulated.
  int max_index() const { return static_cast<int>(lengths_.size()) - 1; }
  std::uint64_t length(int k) const;

  Word build(int k) const;
  Word prefix(std::size_t n) const;
  /// Letter i (0-based) of m_phi.
  Letter at(std::uint64_t i) const;
  /// Letter i (0-based) of m_k.
  Letter at_in(int k, std::uint64_t i) const;
  /// The two letters removed by truncate2 from m_k (k >= 2): ab for even k, ba for odd k.
  static Word suffix_f(int k);

  PalindromeIndex decompose(std::uint64_t ell) const;
  std::uint64_t palindrome_length(std::uint64_t ell) const;
  /// (m_k^t m_{k-1})' assembled from its factors.
  Word palindromic_prefix(std::uint64_t ell) const;

  /// k >= 3: m_k m'_{k-1} == m_{k-1} m'_k. k = 1, 2: (m_k m_{k-1})' == (m_{k-1} m_k)'.
  bool check_commutation(int k) const;
  /// m_{k+2} begins with m_k^{1+s_{k+1}} m'_{k-1} f_k (needs |m_{k-1}| >= 2).
  bool check_power_prefix(int k) const;
  /// Length of the longest common prefix of m_phi and m_k m_k m_k ..., by scanning.
  std::uint64_t common_prefix_length(int k) const;
  /// (1 + s_{k+1}) |m_k| + |m_{k-1}| - 2.
  std::uint64_t common_prefix_formula(int k) const;

 private:
  void require_materializable(std::uint64_t len, const char* what) const;

  SlopeSequence seq_;
  std::size_t cap_;
  std::vector<unsigned> terms_;          // terms_[k] = s_k, index 0 unused
  std::vector<std::uint64_t> lengths_;   // lengths_[k] = |m_k|
};

Word build_mk(const SlopeSequence& seq, int k, std::size_t max_word_len = kDefaultMaxWordLen);
Word word_prefix(const SlopeSequence& seq, std::size_t n);
Word palindromic_prefix(const SlopeSequence& seq, std::uint64_t ell);
bool check_commutation(const SlopeSequence& seq, int k);
std::uint64_t common_prefix_length(const SlopeSequence& seq, int k);

/// Every n such that the length-n prefix of w is a palindrome (n = 0 included), by a Z-function scan.
std::vector<std::size_t> palindromic_prefix_lengths(const Word& w);

}  // namespace sturmian
