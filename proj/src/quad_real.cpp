#include "sturmian/quad_real.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace sturmian {
namespace {

constexpr unsigned long kSquareSieveLimit = 1000;

const BigInt& common_radicand(const QuadReal& x, const QuadReal& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw std::domain_error("QuadReal arithmetic across different quadratic fields");
}

BigInt pow10(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

// floor(t * sqrt(D)) for D >= 0 non-square (or t == 0).
BigInt floor_mul_sqrt(const BigInt& t, const BigInt& radicand) {
  if (t == 0 || radicand == 0) return 0;
  BigInt sq = t * t * radicand;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  if (t > 0) return root;
  // t*sqrt(D) is irrational, so -root is strictly above it.
  return -root - 1;
}

}  // namespace

int sign_of(const BigInt& a, const BigInt& b, const BigInt& radicand) {
  const int sa = sgn(a);
  const int sb = (radicand == 0) ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const BigInt lhs = a * a;
  const BigInt rhs = b * b * radicand;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

QuadReal::QuadReal() : p_(0), q_(0), d_(0), r_(1) {}

QuadReal::QuadReal(long value) : p_(value), q_(0), d_(0), r_(1) {}

QuadReal::QuadReal(const Rational& value) : p_(value.get_num()), q_(0), d_(0), r_(value.get_den()) { normalize(); }

QuadReal::QuadReal(BigInt p, BigInt q, BigInt radicand, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)), r_(std::move(r)) {
  if (r_ == 0) throw std::domain_error("QuadReal: zero denominator");
  if (d_ < 0) throw std::domain_error("QuadReal: negative radicand");
  normalize();
}

QuadReal QuadReal::sqrt(const BigInt& radicand) { return QuadReal(0, 1, radicand, 1); }

void QuadReal::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else {
    for (unsigned long f = 2; f <= kSquareSieveLimit; ++f) {
      const unsigned long f2 = f * f;
      while (mpz_divisible_ui_p(d_.get_mpz_t(), f2) != 0) {
        mpz_divexact_ui(d_.get_mpz_t(), d_.get_mpz_t(), f2);
        q_ *= f;
      }
      if (d_ < f2) break;
    }
    if (mpz_perfect_square_p(d_.get_mpz_t()) != 0) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
      p_ += q_ * root;
      q_ = 0;
      d_ = 0;
    }
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r_.get_mpz_t(), r_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational QuadReal::rational_part() const {
  Rational out(p_, r_);
  out.canonicalize();
  return out;
}

int QuadReal::sign() const { return sign_of(p_, q_, d_); }

QuadReal QuadReal::conjugate() const { return QuadReal(p_, -q_, d_, r_); }

QuadReal QuadReal::inverse() const {
  // r / (p + q√D) = r (p - q√D) / (p² - q² D)
  const BigInt norm = p_ * p_ - q_ * q_ * d_;
  if (norm == 0) throw std::domain_error("QuadReal: inverse of zero");
  return QuadReal(r_ * p_, -(r_ * q_), d_, norm);
}

BigInt QuadReal::floor_scaled(unsigned digits) const {
  const BigInt scale = pow10(digits);
  BigInt numer = p_ * scale + floor_mul_sqrt(q_ * scale, d_);
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), numer.get_mpz_t(), r_.get_mpz_t());
  return out;
}

std::string QuadReal::radical() const {
  if (is_rational()) {
    if (r_ == 1) return p_.get_str();
    return p_.get_str() + "/" + r_.get_str();
  }
  std::string body;
  if (p_ != 0) body = p_.get_str();
  const BigInt aq = ::abs(q_);
  if (q_ < 0) {
    body += "-";
  } else if (p_ != 0) {
    body += "+";
  }
  if (aq != 1) body += aq.get_str();
  body += "√" + d_.get_str();
  if (r_ == 1) return body;
  return "(" + body + ")/" + r_.get_str();
}

std::string QuadReal::decimal(unsigned digits) const {
  const bool negative = sign() < 0;
  const BigInt scaled = (negative ? -*this : *this).floor_scaled(digits);
  std::string text = scaled.get_str();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  std::string out = negative ? "-" : "";
  out += text.substr(0, text.size() - digits);
  if (digits > 0) out += "." + text.substr(text.size() - digits);
  return out;
}

double QuadReal::to_double() const {
  // 40 digits is far beyond double precision and keeps this exact up to rounding.
  return std::stod(decimal(40));
}

QuadReal operator+(const QuadReal& x, const QuadReal& y) {
  const BigInt& d = common_radicand(x, y);
  return QuadReal(x.p() * y.r() + y.p() * x.r(), x.q() * y.r() + y.q() * x.r(), d, x.r() * y.r());
}

QuadReal operator-(const QuadReal& x) { return QuadReal(-x.p(), -x.q(), x.radicand(), x.r()); }

QuadReal operator-(const QuadReal& x, const QuadReal& y) { return x + (-y); }

QuadReal operator*(const QuadReal& x, const QuadReal& y) {
  const BigInt& d = common_radicand(x, y);
  return QuadReal(x.p() * y.p() + x.q() * y.q() * d, x.p() * y.q() + x.q() * y.p(), d, x.r() * y.r());
}

QuadReal operator/(const QuadReal& x, const QuadReal& y) { return x * y.inverse(); }

int compare(const QuadReal& x, const QuadReal& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) return (x - y).sign();
  // r1 r2 (x - y) = A + B√D1 + C√D2
  const BigInt a = x.p() * y.r() - y.p() * x.r();
  const BigInt b = x.q() * y.r();
  const BigInt c = -(y.q() * x.r());
  const int s1 = sign_of(a, b, x.radicand());
  const int s2 = sgn(c);
  if (s2 == 0) return s1;
  if (s1 == 0 || s1 == s2) return s1 == 0 ? s2 : s1;
  // Opposite signs: compare (A + B√D1)² with C² D2.
  const int t = sign_of(a * a + b * b * x.radicand() - c * c * y.radicand(), 2 * a * b, x.radicand());
  if (t == 0) return 0;
  return t > 0 ? s1 : s2;
}

std::ostream& operator<<(std::ostream& os, const QuadReal& x) { return os << x.radical(); }

}  // namespace sturmian
