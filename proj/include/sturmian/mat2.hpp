#pragma once

#include "sturmian/bigint.hpp"
#include "sturmian/quad_real.hpp"

#include <Eigen/Core>

#include <span>

namespace sturmian {

using Mat2 = Eigen::Matrix<BigInt, 2, 2>;

/// The continued-fraction step matrix [[l, 1], [1, 0]].
Mat2 elementary(const BigInt& letter);

inline Mat2 identity2() { return Mat2::Identity(); }

/// Height: max absolute value of the entries.
template <typename Derived>
BigInt height(const Eigen::MatrixBase<Derived>& m) {
  BigInt h = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const BigInt a = ::abs(BigInt(m(i, j)));
      if (a > h) h = a;
    }
  }
  return h;
}

template <typename Derived>
BigInt det2(const Eigen::MatrixBase<Derived>& m) {
  return BigInt(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
}

template <typename Derived>
BigInt trace2(const Eigen::MatrixBase<Derived>& m) {
  return BigInt(m(0, 0) + m(1, 1));
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  return m(0, 1) == m(1, 0);
}

/// Product with the intermediate evaluated eagerly (big-integer entries
/// make Eigen's lazy coefficient product recompute shared terms).
inline Mat2 mul(const Mat2& x, const Mat2& y) {
  Mat2 out;
  out(0, 0) = x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0);
  out(0, 1) = x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1);
  out(1, 0) = x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0);
  out(1, 1) = x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1);
  return out;
}

Mat2 power(const Mat2& m, unsigned long e);

/// Inverse of a matrix with determinant +-1 (exact, integral).
Mat2 inverse_unimodular(const Mat2& m);

/// Matrix of a letter sequence: product of elementary matrices in order.
Mat2 letters_to_matrix(std::span<const unsigned> letters);

/// Checks H(M)H(N) <= H(MN) <= 2 H(M)H(N) exactly. Meant for nonnegative
/// matrices without a zero row or column.
bool quasi_mult_check(const Mat2& m, const Mat2& n);

/// Value of the purely periodic continued fraction [0; w, w, ...] where
/// `period` is the matrix of the word w. It is the root in (0, 1) of
/// m01 T^2 + (m00 - m11) T - m10.
QuadReal purely_periodic_value(const Mat2& period);

}  // namespace sturmian
