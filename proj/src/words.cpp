#include "sturmian/words.hpp"

#include "sturmian/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sturmian {
namespace {

constexpr std::uint64_t kLengthLimit = std::uint64_t{1} << 62;

}  // namespace

Alphabet::Alphabet(unsigned a_value, unsigned b_value) : a(a_value), b(b_value) {
  if (a == 0 || b == 0) throw std::invalid_argument("alphabet: letters must be positive integers");
  if (a == b) throw std::invalid_argument("alphabet: letters must be distinct");
}

Word Word::from_symbols(std::string_view symbols) {
  std::vector<Letter> letters;
  letters.reserve(symbols.size());
  for (char c : symbols) {
    if (c == 'a') {
      letters.push_back(Letter::A);
    } else if (c == 'b') {
      letters.push_back(Letter::B);
    } else {
      throw std::invalid_argument("word: symbols must be 'a' or 'b'");
    }
  }
  return Word(std::move(letters));
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::mirror() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

bool Word::starts_with(const Word& w) const {
  return w.size() <= size() && std::equal(w.letters_.begin(), w.letters_.end(), letters_.begin());
}

std::string Word::symbols() const {
  std::string out;
  out.reserve(size());
  for (Letter l : letters_) out.push_back(l == Letter::A ? 'a' : 'b');
  return out;
}

std::string Word::render(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(alphabet.value(letters_[i]));
  }
  return out;
}

std::vector<unsigned> Word::values(const Alphabet& alphabet) const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (Letter l : letters_) out.push_back(alphabet.value(l));
  return out;
}

Word operator+(Word lhs, const Word& rhs) {
  lhs.append(rhs);
  return lhs;
}

Word repeat(const Word& w, std::uint64_t times) {
  Word out;
  for (std::uint64_t i = 0; i < times; ++i) out.append(w);
  return out;
}

bool is_palindrome(const Word& w) {
  const auto& l = w.letters();
  return std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2), l.rbegin());
}

Word truncate2(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("truncate2: word has fewer than two letters");
  return w.prefix(w.size() - 2);
}

CharacteristicWord::CharacteristicWord(SlopeSequence seq, std::size_t max_word_len)
    : seq_(std::move(seq)), cap_(max_word_len) {
  terms_ = {0, seq_.term(1)};
  lengths_ = {1, terms_[1]};
  for (int k = 1;; ++k) {
    const unsigned next_term = seq_.term(static_cast<std::uint64_t>(k) + 1);
    terms_.push_back(next_term);
    const unsigned __int128 next =
        static_cast<unsigned __int128>(next_term) * lengths_[k] + lengths_[k - 1];
    if (next > kLengthLimit) break;
    lengths_.push_back(static_cast<std::uint64_t>(next));
  }
}

unsigned CharacteristicWord::s(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) >= terms_.size()) {
    throw ResourceError("characteristic word: slope index " + std::to_string(k) + " beyond tabulated range");
  }
  return terms_[static_cast<std::size_t>(k)];
}

std::uint64_t CharacteristicWord::length(int k) const {
  if (k < 0) throw std::out_of_range("characteristic word: negative index");
  if (k > max_index()) throw ResourceError("characteristic word: |m_" + std::to_string(k) + "| exceeds 2^62");
  return lengths_[static_cast<std::size_t>(k)];
}

void CharacteristicWord::require_materializable(std::uint64_t len, const char* what) const {
  if (len > cap_) {
    throw ResourceError(std::string(what) + ": word length " + std::to_string(len) + " exceeds cap " +
                        std::to_string(cap_));
  }
}

Word CharacteristicWord::build(int k) const {
  require_materializable(length(k), "build_mk");
  Word prev = Word::from_symbols("b");
  if (k == 0) return prev;
  Word cur = repeat(prev, s(1) - 1);
  cur.push_back(Letter::A);
  for (int j = 1; j < k; ++j) {
    Word next = repeat(cur, s(j + 1));
    next.append(prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word CharacteristicWord::prefix(std::size_t n) const {
  if (n == 0) return {};
  require_materializable(n, "word_prefix");
  int k = 1;
  while (length(k) < n) ++k;
  if (k == 1) return build(1).prefix(n);
  const Word block = build(k - 1);
  const Word tail = build(k - 2);
  Word out;
  for (unsigned j = 0; j < s(k) && out.size() < n; ++j) out.append(block);
  if (out.size() < n) out.append(tail);
  return out.prefix(n);
}

Letter CharacteristicWord::at_in(int k, std::uint64_t i) const {
  if (i >= length(k)) throw std::out_of_range("characteristic word: position beyond |m_k|");
  for (;;) {
    if (k == 0) return Letter::B;
    if (k == 1) return i + 1 < s(1) ? Letter::B : Letter::A;
    const std::uint64_t block = static_cast<std::uint64_t>(s(k)) * lengths_[static_cast<std::size_t>(k - 1)];
    if (i < block) {
      i %= lengths_[static_cast<std::size_t>(k - 1)];
      k -= 1;
    } else {
      i -= block;
      k -= 2;
    }
  }
}

Letter CharacteristicWord::at(std::uint64_t i) const {
  int k = 1;
  while (length(k) <= i) ++k;
  return at_in(k, i);
}

Word CharacteristicWord::suffix_f(int k) {
  if (k < 2) throw std::invalid_argument("suffix_f: defined for k >= 2");
  return Word::from_symbols(k % 2 == 0 ? "ab" : "ba");
}

PalindromeIndex CharacteristicWord::decompose(std::uint64_t ell) const {
  if (ell == 0) throw std::invalid_argument("palindrome index: ell must be >= 1");
  PalindromeIndex idx;
  idx.ell = ell;
  idx.k = 1;
  std::uint64_t ell_k = 0;
  while (ell > ell_k + s(idx.k + 1)) {
    ell_k += s(idx.k + 1);
    ++idx.k;
  }
  idx.t = ell - ell_k;
  return idx;
}

std::uint64_t CharacteristicWord::palindrome_length(std::uint64_t ell) const {
  const PalindromeIndex idx = decompose(ell);
  const unsigned __int128 len = static_cast<unsigned __int128>(idx.t) * length(idx.k) + length(idx.k - 1);
  if (len > kLengthLimit) throw ResourceError("palindrome_length: length exceeds 2^62");
  return static_cast<std::uint64_t>(len) - 2;
}

Word CharacteristicWord::palindromic_prefix(std::uint64_t ell) const {
  const PalindromeIndex idx = decompose(ell);
  require_materializable(palindrome_length(ell) + 2, "palindromic_prefix");
  Word w = repeat(build(idx.k), idx.t);
  w.append(build(idx.k - 1));
  return truncate2(w);
}

bool CharacteristicWord::check_commutation(int k) const {
  if (k < 1) throw std::invalid_argument("check_commutation: k must be >= 1");
  const Word mk = build(k);
  const Word mk1 = build(k - 1);
  if (k >= 3) return mk + truncate2(mk1) == mk1 + truncate2(mk);
  return truncate2(mk + mk1) == truncate2(mk1 + mk);
}

bool CharacteristicWord::check_power_prefix(int k) const {
  if (k < 2) throw std::invalid_argument("check_power_prefix: k must be >= 2");
  const Word mk1 = build(k - 1);
  if (mk1.size() < 2) throw std::invalid_argument("check_power_prefix: |m_{k-1}| < 2");
  Word expected = repeat(build(k), 1 + static_cast<std::uint64_t>(s(k + 1)));
  expected.append(truncate2(mk1));
  expected.append(suffix_f(k));
  return build(k + 2).starts_with(expected);
}

std::uint64_t CharacteristicWord::common_prefix_length(int k) const {
  const Word period = build(k);
  const std::uint64_t p = period.size();
  // Materialize a generous window, then fall back to positional letters.
  const std::uint64_t window = std::min<std::uint64_t>(cap_, common_prefix_formula(k) + 2);
  const Word head = prefix(static_cast<std::size_t>(window));
  std::uint64_t i = 0;
  for (; i < head.size(); ++i) {
    if (head[i] != period[i % p]) return i;
  }
  const std::uint64_t limit = length(max_index());
  for (; i < limit; ++i) {
    if (at(i) != period[i % p]) return i;
  }
  throw ResourceError("common_prefix_length: no disagreement within tabulated length");
}

std::uint64_t CharacteristicWord::common_prefix_formula(int k) const {
  if (k < 1) throw std::invalid_argument("common_prefix_formula: k must be >= 1");
  return (1 + static_cast<std::uint64_t>(s(k + 1))) * length(k) + length(k - 1) - 2;
}

Word build_mk(const SlopeSequence& seq, int k, std::size_t max_word_len) {
  return CharacteristicWord(seq, max_word_len).build(k);
}

Word word_prefix(const SlopeSequence& seq, std::size_t n) { return CharacteristicWord(seq).prefix(n); }

Word palindromic_prefix(const SlopeSequence& seq, std::uint64_t ell) {
  return CharacteristicWord(seq).palindromic_prefix(ell);
}

bool check_commutation(const SlopeSequence& seq, int k) { return CharacteristicWord(seq).check_commutation(k); }

std::uint64_t common_prefix_length(const SlopeSequence& seq, int k) {
  return CharacteristicWord(seq).common_prefix_length(k);
}

std::vector<std::size_t> palindromic_prefix_lengths(const Word& w) {
  const std::size_t n = w.size();
  // s = w # mirror(w); prefix of length L is a palindrome iff the suffix of
  // s of length L matches the prefix of s.
  std::vector<int> s;
  s.reserve(2 * n + 1);
  for (Letter l : w.letters()) s.push_back(static_cast<int>(l));
  s.push_back(2);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) s.push_back(static_cast<int>(*it));
  const std::size_t m = s.size();
  std::vector<std::size_t> z(m, 0);
  for (std::size_t i = 1, l = 0, r = 0; i < m; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < m && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  std::vector<std::size_t> out{0};
  for (std::size_t len = 1; len <= n; ++len) {
    if (z[m - len] == len) out.push_back(len);
  }
  return out;
}

}  // namespace sturmian
