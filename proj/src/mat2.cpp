#include "sturmian/mat2.hpp"

#include <stdexcept>

namespace sturmian {

Mat2 elementary(const BigInt& letter) {
  Mat2 m;
  m << letter, 1, 1, 0;
  return m;
}

Mat2 power(const Mat2& m, unsigned long e) {
  Mat2 result = identity2();
  Mat2 base = m;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Mat2 inverse_unimodular(const Mat2& m) {
  const BigInt d = det2(m);
  if (d != 1 && d != -1) throw std::domain_error("inverse_unimodular: determinant is not +-1");
  Mat2 inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  if (d == -1) inv = (-inv).eval();
  return inv;
}

Mat2 letters_to_matrix(std::span<const unsigned> letters) {
  Mat2 m = identity2();
  for (unsigned l : letters) m = mul(m, elementary(l));
  return m;
}

bool quasi_mult_check(const Mat2& m, const Mat2& n) {
  const BigInt lower = height(m) * height(n);
  const BigInt h = height(mul(m, n));
  return lower <= h && h <= 2 * lower;
}

QuadReal purely_periodic_value(const Mat2& period) {
  const BigInt c2 = period(0, 1);
  const BigInt c1 = period(0, 0) - period(1, 1);
  const BigInt c0 = -period(1, 0);
  if (c2 <= 0 || c0 >= 0) throw std::domain_error("purely_periodic_value: not a continued-fraction period matrix");
  // c0/c2 < 0: exactly one positive root, (-c1 + sqrt(disc)) / (2 c2).
  const BigInt disc = c1 * c1 - 4 * c2 * c0;
  QuadReal root(-c1, 1, disc, 2 * c2);
  if (root.sign() <= 0 || compare(root, QuadReal(1)) >= 0) {
    throw std::logic_error("purely_periodic_value: root outside (0, 1)");
  }
  return root;
}

}  // namespace sturmian
