#include "sturmian/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturmian {

SubstitutionWord psi_iterate(unsigned n, std::size_t max_len) {
  SubstitutionWord w{{1}, 0};
  while (w.generation < n) {
    const auto twos = static_cast<std::size_t>(std::count(w.letters.begin(), w.letters.end(), 2U));
    const std::size_t len = 3 * twos + (w.letters.size() - twos);
    if (len > max_len) throw ResourceError("psi_iterate: iterate longer than " + std::to_string(max_len));
    std::vector<unsigned> next;
    next.reserve(len);
    for (unsigned l : w.letters) {
      if (l == 1) {
        next.push_back(2);
      } else {
        next.insert(next.end(), {2, 1, 1});
      }
    }
    w.letters = std::move(next);
    ++w.generation;
  }
  return w;
}

QuadReal sigma_n(unsigned n) { return purely_periodic_value(letters_to_matrix(psi_iterate(n).letters)); }

RealEnclosure s_limit(unsigned digits) {
  if (digits > 30) throw std::invalid_argument("s_limit: digits must be <= 30");
  BigInt need = 1;
  mpz_ui_pow_ui(need.get_mpz_t(), 10, digits);
  SubstitutionWord prev = psi_iterate(2);
  for (;;) {
    SubstitutionWord cur = psi_iterate(prev.generation + 1);
    if (!std::equal(prev.letters.begin(), prev.letters.end(), cur.letters.begin())) {
      throw std::logic_error("s_limit: iterate " + std::to_string(prev.generation) + " is not a prefix of the next");
    }
    // Convergents of [0; prev] bracket s since prev is a prefix of the limit word.
    BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
    for (unsigned l : prev.letters) {
      BigInt p_next = l * p + p_prev;
      BigInt q_next = l * q + q_prev;
      p_prev = std::move(p);
      q_prev = std::move(q);
      p = std::move(p_next);
      q = std::move(q_next);
      if (q * q_prev >= need) {
        Rational x(p, q), y(p_prev, q_prev);
        x.canonicalize();
        y.canonicalize();
        return x < y ? RealEnclosure{x, y} : RealEnclosure{y, x};
      }
    }
    prev = std::move(cur);
  }
}

std::vector<SpectrumRow> spectrum_table(unsigned rows) {
  if (rows == 0) throw std::invalid_argument("spectrum_table: need at least one row");
  std::vector<SpectrumRow> out;
  for (unsigned n = 0; n < rows; ++n) {
    SpectrumRow r;
    r.n = n;
    r.sigma = sigma_n(n);
    r.hat_w2 = QuadReal(2) + r.sigma;
    r.hat_lambda2 = (QuadReal(1) + r.sigma) / r.hat_w2;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<unsigned> spectrum_slope_pattern(unsigned n) {
  std::vector<unsigned> w = psi_iterate(n).letters;
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace sturmian
