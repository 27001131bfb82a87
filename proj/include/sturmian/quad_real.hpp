#pragma once

#include "sturmian/bigint.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace sturmian {

/// Exact real quadratic number (p + q*sqrt(D)) / r.
///
/// Kept canonical: r > 0, gcd(p, q, r) = 1, and D is either 0 (with q = 0)
/// or a non-square. Small square factors of D are folded into q, so equal
/// fields usually share a radicand; equality and ordering never rely on it.
class QuadReal {
 public:
  QuadReal();
  QuadReal(long value);  // NOLINT(google-explicit-constructor)
  explicit QuadReal(const Rational& value);
  QuadReal(BigInt p, BigInt q, BigInt radicand, BigInt r);

  /// sqrt(D) for D >= 0.
  static QuadReal sqrt(const BigInt& radicand);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& radicand() const { return d_; }
  const BigInt& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  Rational rational_part() const;
  int sign() const;

  /// sqrt(D) -> -sqrt(D).
  QuadReal conjugate() const;
  QuadReal inverse() const;
  QuadReal abs() const { return sign() < 0 ? -*this : *this; }

  /// floor(value * 10^digits), exact.
  BigInt floor_scaled(unsigned digits) const;

  /// "(p+q√D)/r" with unit coefficients and trivial denominators elided.
  std::string radical() const;
  /// Truncated decimal expansion with the given number of fractional digits.
  std::string decimal(unsigned digits) const;
  double to_double() const;

  friend QuadReal operator+(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator-(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator*(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator/(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator-(const QuadReal& x);

  /// Works across different radicands (three-term sign determination).
  friend int compare(const QuadReal& x, const QuadReal& y);
  friend bool operator==(const QuadReal& x, const QuadReal& y) { return compare(x, y) == 0; }
  friend std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y) {
    const int c = compare(x, y);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void normalize();

  BigInt p_;
  BigInt q_;
  BigInt d_;
  BigInt r_;
};

QuadReal operator+(const QuadReal& x, const QuadReal& y);
QuadReal operator-(const QuadReal& x, const QuadReal& y);
QuadReal operator*(const QuadReal& x, const QuadReal& y);
QuadReal operator/(const QuadReal& x, const QuadReal& y);
QuadReal operator-(const QuadReal& x);
int compare(const QuadReal& x, const QuadReal& y);

std::ostream& operator<<(std::ostream& os, const QuadReal& x);

/// Sign of a + b*sqrt(D) for D >= 0 not a perfect square (or b = 0).
int sign_of(const BigInt& a, const BigInt& b, const BigInt& radicand);

}  // namespace sturmian
