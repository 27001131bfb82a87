#pragma once

#include "sturmian/bigint.hpp"

#include <iosfwd>

namespace sturmian {

/// Closed interval of doubles. Every operation rounds outward, so a bracket
/// computed from certified inputs stays certified.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  static Bracket point(double v) { return {v, v}; }

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool positive() const { return lo > 0.0; }
};

Bracket operator+(const Bracket& x, const Bracket& y);
Bracket operator-(const Bracket& x, const Bracket& y);
Bracket operator-(const Bracket& x);
Bracket operator*(const Bracket& x, double k);
Bracket operator*(const Bracket& x, const Bracket& y);
/// Requires y to exclude zero.
Bracket operator/(const Bracket& x, const Bracket& y);
Bracket hull(const Bracket& x, const Bracket& y);
/// Widens both ends outward by one ulp.
Bracket widen(const Bracket& x);

std::ostream& operator<<(std::ostream& os, const Bracket& b);

/// Certified natural logarithm of a positive big integer.
///
/// The bit length fixes log2 n to within one; the top 64 bits then pin
/// log n between log(t) + s*ln2 and log(t+1) + s*ln2, a relative width below
/// 2^-63. Evaluation is in long double and the result is rounded outward.
Bracket log_bound(const BigInt& n);

/// Certified natural logarithm of a positive rational.
Bracket log_bound(const Rational& x);

/// log10 bracket, convenient for the "log10 X >= 500" depth gates.
Bracket log10_bound(const BigInt& n);

}  // namespace sturmian
