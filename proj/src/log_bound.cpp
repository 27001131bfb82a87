#include "sturmian/log_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace sturmian {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double v) { return std::nextafter(v, -kInf); }
double up(double v) { return std::nextafter(v, kInf); }

// long double -> double conversion may round either way; two ulps outward
// covers it plus the libm error of the long double evaluation.
double down2(long double v) { return down(down(static_cast<double>(v))); }
double up2(long double v) { return up(up(static_cast<double>(v))); }

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
constexpr long double kLn10 = 2.302585092994045684017991454684364208L;

}  // namespace

Bracket operator+(const Bracket& x, const Bracket& y) { return {down(x.lo + y.lo), up(x.hi + y.hi)}; }

Bracket operator-(const Bracket& x, const Bracket& y) { return {down(x.lo - y.hi), up(x.hi - y.lo)}; }

Bracket operator-(const Bracket& x) { return {-x.hi, -x.lo}; }

Bracket operator*(const Bracket& x, double k) {
  double a = x.lo * k;
  double b = x.hi * k;
  return {down(std::min(a, b)), up(std::max(a, b))};
}

Bracket operator*(const Bracket& x, const Bracket& y) {
  const double c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}

Bracket operator/(const Bracket& x, const Bracket& y) {
  if (y.lo <= 0.0 && y.hi >= 0.0) throw std::domain_error("bracket division by an interval containing zero");
  const double c[4] = {x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi};
  return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}

Bracket hull(const Bracket& x, const Bracket& y) { return {std::min(x.lo, y.lo), std::max(x.hi, y.hi)}; }

Bracket widen(const Bracket& x) { return {down(x.lo), up(x.hi)}; }

std::ostream& operator<<(std::ostream& os, const Bracket& b) { return os << '[' << b.lo << ", " << b.hi << ']'; }

Bracket log_bound(const BigInt& n) {
  if (sgn(n) <= 0) throw std::domain_error("log_bound: argument must be positive");
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 64) {
    const long double v = std::log(static_cast<long double>(mpz_get_ui(n.get_mpz_t())));
    return {down2(v), up2(v)};
  }
  const std::size_t shift = bits - 64;
  mpz_class top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), n.get_mpz_t(), shift);
  const long double t = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
  const long double base = static_cast<long double>(shift) * kLn2;
  const long double lo = std::log(t) + base;
  const long double hi = std::log(t + 1.0L) + base;
  return {down2(lo), up2(hi)};
}

Bracket log_bound(const Rational& x) {
  if (sgn(x) <= 0) throw std::domain_error("log_bound: argument must be positive");
  return log_bound(BigInt(x.get_num())) - log_bound(BigInt(x.get_den()));
}

Bracket log10_bound(const BigInt& n) {
  const Bracket ln = log_bound(n);
  return {down2(static_cast<long double>(ln.lo) / kLn10), up2(static_cast<long double>(ln.hi) / kLn10)};
}

}  // namespace sturmian
