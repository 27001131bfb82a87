#include "sturmian/approx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sturmian {
namespace {

BigInt abs_big(const BigInt& x) { return BigInt(::abs(x)); }

Mat2 J() {
  Mat2 j;
  j << 0, 1, -1, 0;
  return j;
}

// Enclosure of |f| given f at the two ends of a monotone stretch.
RealEnclosure abs_hull(const Rational& u, const Rational& v) {
  const Rational au = ::abs(u);
  const Rational av = ::abs(v);
  if (sgn(u) * sgn(v) <= 0) return {Rational(0), std::max(au, av)};
  return {std::min(au, av), std::max(au, av)};
}

}  // namespace

BigInt QuadraticSurd::height() const { return std::max({abs_big(c2), abs_big(c1), abs_big(c0)}); }

QuadraticSurd alpha_k(WordMatrices& wm, int k) {
  if (k < 2) throw std::invalid_argument("alpha_k: k must be >= 2");
  const Mat2 x = wm.M_trunc(k);
  if (!is_symmetric(x)) throw std::logic_error("alpha_k: M'_k is not symmetric");
  const Mat2 f = wm.F(k);
  const BigInt& x0 = x(0, 0);
  const BigInt& x1 = x(0, 1);
  const BigInt& x2 = x(1, 1);
  const BigInt& f0 = f(0, 0);
  const BigInt& f1 = f(0, 1);
  const BigInt& f2 = f(1, 0);
  const BigInt& f3 = f(1, 1);

  QuadraticSurd s;
  s.k = k;
  s.c2 = f1 * x0 + f3 * x1;
  s.c1 = f0 * x0 + (f2 - f1) * x1 - f3 * x2;
  s.c0 = -f0 * x1 - f2 * x2;
  BigInt g = gcd(gcd(s.c2, s.c1), s.c0);
  if (s.c2 < 0) g = -g;
  s.c2 /= g;
  s.c1 /= g;
  s.c0 /= g;

  const BigInt disc = s.discriminant();
  if (disc <= 0) throw std::logic_error("alpha_k: nonpositive discriminant");
  const QuadReal zero(0), one(1);
  for (long sign : {1L, -1L}) {
    QuadReal r(BigInt(-s.c1), BigInt(sign), disc, BigInt(2 * s.c2));
    if (compare(r, zero) > 0 && compare(r, one) < 0) {
      s.root = std::move(r);
      return s;
    }
  }
  throw std::logic_error("alpha_k: no root in (0, 1)");
}

QuadraticSurd alpha_k(const Alphabet& alphabet, const SlopeSequence& seq, int k) {
  WordMatrices wm(alphabet, seq);
  return alpha_k(wm, k);
}

QuadReal conjugate_gap(const QuadraticSurd& s) { return QuadReal(0, 1, s.discriminant(), s.c2); }

Bracket disagreement_constant(const Alphabet& alphabet) {
  const double b = static_cast<double>(alphabet.max_letter()) + 2.0;
  return widen(Bracket::point(3.0 * std::log(b)));
}

DistanceBracket disagreement_distance(WordMatrices& wm, int k) {
  if (k < 3) throw std::invalid_argument("disagreement_distance: k must be >= 3");
  DistanceBracket out;
  out.qN = mul(wm.M(k), wm.M_trunc(k + 1))(0, 0);
  const Bracket top = -(log_bound(out.qN) * 2.0);
  const Bracket c = disagreement_constant(wm.alphabet());
  out.log_distance = {widen(top - c).lo, top.hi};
  return out;
}

ApproxTriple ApproxTriple::from_matrix(const Mat2& m, std::uint64_t ell) {
  if (!is_symmetric(m)) throw std::logic_error("triple: matrix is not symmetric");
  return {m(0, 0), m(0, 1), m(1, 1), ell};
}

Mat2 ApproxTriple::matrix() const {
  Mat2 m;
  m << x0, x1, x1, x2;
  return m;
}

BigInt ApproxTriple::height() const { return std::max({abs_big(x0), abs_big(x1), abs_big(x2)}); }

std::uint64_t ell_of(const SlopeSequence& seq, int k) {
  if (k < 1) throw std::invalid_argument("ell_of: k must be >= 1");
  std::uint64_t ell = 0;
  for (int j = 2; j <= k; ++j) ell += seq.term(static_cast<std::uint64_t>(j));
  return ell;
}

ApproxTriple triple_from_index(WordMatrices& wm, std::uint64_t ell) {
  if (ell == 0) throw std::invalid_argument("triple_from_index: ell must be >= 1");
  int k = 1;
  std::uint64_t ell_k = 0;
  while (ell > ell_k + wm.slope().term(static_cast<std::uint64_t>(k) + 1)) {
    ell_k += wm.slope().term(static_cast<std::uint64_t>(k) + 1);
    ++k;
  }
  return ApproxTriple::from_matrix(wm.palindrome_matrix(k, ell - ell_k), ell);
}

ApproxTriple triple_from_index(const Alphabet& alphabet, const SlopeSequence& seq, std::uint64_t ell) {
  WordMatrices wm(alphabet, seq);
  return triple_from_index(wm, ell);
}

RealEnclosure L_value(const ApproxTriple& t, const RealEnclosure& xi) {
  if (xi.lo < 0) throw std::invalid_argument("L_value: enclosure must lie in [0, inf)");
  const auto lin = [&](const Rational& x) { return Rational(t.x0 * x - t.x1); };
  const auto quad = [&](const Rational& x) { return Rational(t.x0 * x * x - t.x2); };
  const RealEnclosure e1 = abs_hull(lin(xi.lo), lin(xi.hi));
  const RealEnclosure e2 = abs_hull(quad(xi.lo), quad(xi.hi));
  RealEnclosure out{std::max(e1.lo, e2.lo), std::max(e1.hi, e2.hi)};
  if (out.lo <= 0) throw PrecisionError("L_value: enclosure of xi too wide to bound L away from 0");
  return out;
}

BigInt det3_direct(const ApproxTriple& x, const ApproxTriple& y, const ApproxTriple& z) {
  return BigInt(x.x0 * (y.x1 * z.x2 - y.x2 * z.x1) - x.x1 * (y.x0 * z.x2 - y.x2 * z.x0) +
                x.x2 * (y.x0 * z.x1 - y.x1 * z.x0));
}

BigInt det3_trace(const ApproxTriple& x, const ApproxTriple& y, const ApproxTriple& z) {
  const Mat2 j = J();
  const Mat2 p = mul(mul(mul(mul(mul(j, x.matrix()), j), z.matrix()), j), y.matrix());
  return trace2(p);
}

BigInt det3(const ApproxTriple& x, const ApproxTriple& y, const ApproxTriple& z) {
  const BigInt direct = det3_direct(x, y, z);
  if (direct != kDet3TraceSign * det3_trace(x, y, z)) {
    throw std::logic_error("det3: direct expansion and trace formula disagree");
  }
  return direct;
}

bool check_collinearity(WordMatrices& wm, int k) {
  if (k < 3) throw std::invalid_argument("check_collinearity: k must be >= 3");
  const SlopeSequence& seq = wm.slope();
  const std::uint64_t ell_k = ell_of(seq, k);
  const std::uint64_t s_next = seq.term(static_cast<std::uint64_t>(k) + 1);
  std::vector<ApproxTriple> pts{triple_from_index(wm, ell_of(seq, k - 1))};
  for (std::uint64_t t = 1; t <= s_next + 1; ++t) pts.push_back(triple_from_index(wm, ell_k + t));
  for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
    if (det3(pts[i], pts[i + 1], pts[i + 2]) != 0) return false;
  }
  return true;
}

RecurrenceCheck ch_recurrence_check(WordMatrices& wm, int k, std::uint64_t t) {
  if (k < 3) throw std::invalid_argument("ch_recurrence_check: k must be >= 3");
  const SlopeSequence& seq = wm.slope();
  const std::uint64_t s_next = seq.term(static_cast<std::uint64_t>(k) + 1);
  if (t >= s_next) throw std::invalid_argument("ch_recurrence_check: need t < s_{k+1}");
  const std::uint64_t ell_k = ell_of(seq, k);
  const auto point = [&](std::uint64_t j) {
    return triple_from_index(wm, j == 0 ? ell_of(seq, k - 1) : ell_k + j);
  };
  const ApproxTriple p0 = point(t);
  const ApproxTriple p1 = point(t + 1);
  const ApproxTriple p2 = point(t + 2);
  const BigInt tr = trace2(wm.M(k));
  RecurrenceCheck out;
  for (int eps : {1, -1}) {
    if (p2.x0 == tr * p1.x0 + eps * p0.x0 && p2.x1 == tr * p1.x1 + eps * p0.x1 &&
        p2.x2 == tr * p1.x2 + eps * p0.x2) {
      out.holds = true;
      out.epsilon = eps;
      out.matches_cayley_hamilton = BigInt(eps) == BigInt(-det2(wm.M(k)));
      break;
    }
  }
  return out;
}

}  // namespace sturmian
