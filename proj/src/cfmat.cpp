#include "sturmian/cfmat.hpp"

#include <stdexcept>

namespace sturmian {
namespace {

bool wide_enough(const Mat2& m, unsigned long bits) {
  const BigInt prod = m(0, 0) * m(0, 1);
  return prod > 0 && mpz_sizeinbase(prod.get_mpz_t(), 2) > bits;
}

}  // namespace

Mat2 word_to_matrix(const Word& w, const Alphabet& alphabet) {
  const Mat2 ea = elementary(alphabet.a);
  const Mat2 eb = elementary(alphabet.b);
  Mat2 m = identity2();
  for (Letter l : w.letters()) m = mul(m, l == Letter::A ? ea : eb);
  return m;
}

WordMatrices::WordMatrices(Alphabet alphabet, SlopeSequence seq, std::size_t digit_budget)
    : alphabet_(alphabet), seq_(std::move(seq)), budget_(digit_budget) {
  m_.push_back(E(Letter::B));
  m_.push_back(mul(power(E(Letter::B), seq_.term(1) - 1), E(Letter::A)));
}

void WordMatrices::extend_to(int k) {
  while (depth() < k) {
    const int j = depth();
    Mat2 next = mul(power(m_[j], seq_.term(static_cast<std::uint64_t>(j) + 1)), m_[j - 1]);
    check_digit_budget(height(next), budget_, "word matrix");
    m_.push_back(std::move(next));
  }
}

const Mat2& WordMatrices::M(int k) {
  if (k < 0) throw std::out_of_range("word matrix: negative index");
  extend_to(k);
  return m_[static_cast<std::size_t>(k)];
}

Mat2 WordMatrices::last_two_inverse(Letter x, Letter y) const {
  return inverse_unimodular(mul(E(x), E(y)));
}

Mat2 WordMatrices::F(int k) {
  if (k >= 2) {
    return k % 2 == 0 ? mul(E(Letter::A), E(Letter::B)) : mul(E(Letter::B), E(Letter::A));
  }
  if (k == 1 && seq_.term(1) >= 2) return mul(E(Letter::B), E(Letter::A));
  throw std::invalid_argument("F_k: m_k has fewer than two letters");
}

Mat2 WordMatrices::M_trunc(int k) { return mul(M(k), inverse_unimodular(F(k))); }

Bracket WordMatrices::log_X(int k) { return log_bound(X(k)); }

Mat2 WordMatrices::palindrome_matrix(int k, std::uint64_t t) {
  if (k < 1) throw std::invalid_argument("palindrome_matrix: k must be >= 1");
  // Last letter of m_j is b for even j and a for odd j.
  const auto last = [](int j) { return j % 2 == 0 ? Letter::B : Letter::A; };
  const bool short_tail = k - 1 == 0 || (k - 1 == 1 && seq_.term(1) == 1);
  Letter x, y;
  if (!short_tail) {
    // m_{k-1} ends with ab (k-1 even) or ba (k-1 odd).
    x = (k - 1) % 2 == 0 ? Letter::A : Letter::B;
    y = last(k - 1);
  } else {
    if (t == 0) throw std::invalid_argument("palindrome_matrix: word has fewer than two letters");
    x = last(k);
    y = last(k - 1);
  }
  const Mat2 full = mul(power(M(k), static_cast<unsigned long>(t)), M(k - 1));
  return mul(full, last_two_inverse(x, y));
}

bool WordMatrices::check_height_growth(int k) {
  if (k < 1) throw std::invalid_argument("check_height_growth: k must be >= 1");
  const unsigned s = seq_.term(static_cast<std::uint64_t>(k) + 1);
  BigInt base;
  mpz_pow_ui(base.get_mpz_t(), X(k).get_mpz_t(), s);
  base *= X(k - 1);
  BigInt two_s;
  mpz_ui_pow_ui(two_s.get_mpz_t(), 2, s);
  const BigInt next = X(k + 1);
  return base <= two_s * next && next <= two_s * base;
}

Mat2 WordMatrices::shortest_prefix_matrix(unsigned long bits) {
  int k = 1;
  while (!wide_enough(M(k), bits)) ++k;
  // Descend through m_j = m_{j-1}^{s_j} m_{j-2}, keeping the accumulated
  // prefix p below the threshold.
  Mat2 p = identity2();
  int j = k;
  for (;;) {
    if (j <= 1) {
      const unsigned bs = j == 0 ? 1 : seq_.term(1) - 1;
      for (unsigned i = 0; i < bs; ++i) {
        p = mul(p, E(Letter::B));
        if (wide_enough(p, bits)) return p;
      }
      if (j == 0) throw std::logic_error("shortest_prefix_matrix: descent failed");
      p = mul(p, E(Letter::A));
      if (!wide_enough(p, bits)) throw std::logic_error("shortest_prefix_matrix: descent failed");
      return p;
    }
    const unsigned s = seq_.term(static_cast<std::uint64_t>(j));
    bool descended = false;
    for (unsigned r = 0; r < s; ++r) {
      Mat2 q = mul(p, m_[j - 1]);
      if (wide_enough(q, bits)) {
        j -= 1;
        descended = true;
        break;
      }
      p = std::move(q);
    }
    if (!descended) j -= 2;
  }
}

std::vector<Convergent> convergents(const Alphabet& alphabet, const SlopeSequence& seq, std::size_t n) {
  const Word letters = CharacteristicWord(seq).prefix(n);
  std::vector<Convergent> out;
  out.reserve(n + 1);
  BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
  out.push_back({p, q, 0});
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned l = alphabet.value(letters[i]);
    BigInt p_next = l * p + p_prev;
    BigInt q_next = l * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({p, q, i + 1});
  }
  return out;
}

RealEnclosure xi_enclosure(WordMatrices& wm, unsigned long min_bits) {
  if (min_bits == 0) throw std::invalid_argument("xi_enclosure: min_bits must be >= 1");
  const Mat2 m = wm.shortest_prefix_matrix(min_bits);
  Rational x(m(1, 0), m(0, 0));
  Rational y(m(1, 1), m(0, 1));
  x.canonicalize();
  y.canonicalize();
  return x < y ? RealEnclosure{x, y} : RealEnclosure{y, x};
}

RealEnclosure xi_enclosure(const Alphabet& alphabet, const SlopeSequence& seq, unsigned long min_bits,
                           std::size_t digit_budget) {
  WordMatrices wm(alphabet, seq, digit_budget);
  return xi_enclosure(wm, min_bits);
}

EtaValue eta(WordMatrices& wm, int k) {
  if (k < 1) throw std::invalid_argument("eta: k must be >= 1");
  if (wm.X(k) == 1) throw std::domain_error("eta: X_k = 1, log undefined");
  EtaValue out;
  out.estimate = wm.log_X(k + 1) / wm.log_X(k);
  out.target = reverse_cf_value(wm.slope(), static_cast<std::uint64_t>(k) + 1);
  return out;
}

EtaValue eta(const Alphabet& alphabet, const SlopeSequence& seq, int k) {
  WordMatrices wm(alphabet, seq);
  return eta(wm, k);
}

}  // namespace sturmian
