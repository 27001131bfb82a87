#pragma once

#include "sturmian/bigint.hpp"
#include "sturmian/log_bound.hpp"
#include "sturmian/mat2.hpp"
#include "sturmian/slope.hpp"
#include "sturmian/words.hpp"

#include <cstdint>
#include <deque>
#include <vector>

namespace sturmian {

/// Product of the elementary matrices of the letters of w, in order.
Mat2 word_to_matrix(const Word& w, const Alphabet& alphabet);

struct Convergent {
  BigInt p;
  BigInt q;
  std::uint64_t index = 0;
};

/// Closed rational interval.
struct RealEnclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return Rational(hi - lo); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RealEnclosure& e) const { return lo <= e.lo && e.hi <= hi; }
  double mid() const { return Rational((lo + hi) / 2).get_d(); }
};

/// The block matrices M_k = matrix(m_k), computed by the recursion
/// M_{k+1} = M_k^{s_{k+1}} M_{k-1} and extended on demand.
///
/// Every new matrix is checked against the digit budget; crossing it
/// throws ResourceError and leaves the computed prefix intact.
class WordMatrices {
 public:
  WordMatrices(Alphabet alphabet, SlopeSequence seq, std::size_t digit_budget = kDefaultDigitBudget);

  const Alphabet& alphabet() const { return alphabet_; }
  const SlopeSequence& slope() const { return seq_; }
  std::size_t digit_budget() const { return budget_; }

  /// Largest k computed so far.
  int depth() const { return static_cast<int>(m_.size()) - 1; }
  void extend_to(int k);

  const Mat2& M(int k);
  /// M'_k: matrix of m_k without its last two letters (needs |m_k| >= 2).
  Mat2 M_trunc(int k);
  /// Matrix of the last two letters of m_k (F_k for k >= 2).
  Mat2 F(int k);
  BigInt X(int k) { return height(M(k)); }
  Bracket log_X(int k);

  /// Matrix of the palindrome (m_k^t m_{k-1})', k >= 1, t >= 0.
  Mat2 palindrome_matrix(int k, std::uint64_t t);

  /// 2^{-s} X_k^s X_{k-1} <= X_{k+1} <= 2^s X_k^s X_{k-1} with s = s_{k+1}, exactly.
  bool check_height_growth(int k);

  /// Shortest prefix of m_phi whose matrix satisfies q_N q_{N-1} >= 2^bits.
  Mat2 shortest_prefix_matrix(unsigned long bits);

 private:
  Mat2 last_two_inverse(Letter x, Letter y) const;
  Mat2 E(Letter l) const { return elementary(alphabet_.value(l)); }

  Alphabet alphabet_;
  SlopeSequence seq_;
  std::size_t budget_;
  // deque: references from M() survive later extensions.
  std::deque<Mat2> m_;
};

/// The convergents p_n/q_n of xi = [0; l_1, l_2, ...], n = 0..N, where l_i
/// are the letters of m_phi.
std::vector<Convergent> convergents(const Alphabet& alphabet, const SlopeSequence& seq, std::size_t n);

/// Consecutive convergents around xi with width <= 2^-min_bits.
RealEnclosure xi_enclosure(WordMatrices& wm, unsigned long min_bits);
RealEnclosure xi_enclosure(const Alphabet& alphabet, const SlopeSequence& seq, unsigned long min_bits,
                           std::size_t digit_budget = kDefaultDigitBudget);

struct EtaValue {
  /// log X_{k+1} / log X_k, certified.
  Bracket estimate;
  /// [s_{k+1}; s_k, ..., s_1].
  Rational target;
};

/// Throws std::domain_error when X_k = 1.
EtaValue eta(WordMatrices& wm, int k);
EtaValue eta(const Alphabet& alphabet, const SlopeSequence& seq, int k);

}  // namespace sturmian
