#include "sturmian/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sturmian {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

QuadReal golden_sigma() { return QuadReal(-1, 1, 5, 2); }

struct BlockIndex {
  int k = 1;
  std::uint64_t t = 0;
};

BlockIndex decompose_ell(const SlopeSequence& seq, std::uint64_t ell) {
  BlockIndex idx;
  std::uint64_t ell_k = 0;
  while (ell > ell_k + seq.term(static_cast<std::uint64_t>(idx.k) + 1)) {
    ell_k += seq.term(static_cast<std::uint64_t>(idx.k) + 1);
    ++idx.k;
  }
  idx.t = ell - ell_k;
  return idx;
}

double log10_lo(const BigInt& n) { return log10_bound(n).lo; }

const QuadReal& min_of(const QuadReal& x, const QuadReal& y) { return compare(x, y) <= 0 ? x : y; }
const QuadReal& max_of(const QuadReal& x, const QuadReal& y) { return compare(x, y) >= 0 ? x : y; }

AuditItem le(std::string name, const QuadReal& lhs, const QuadReal& rhs) {
  const int c = compare(lhs, rhs);
  return {std::move(name), c <= 0, c == 0};
}

std::vector<ApproxTriple> triples_upto(WordMatrices& wm, std::uint64_t last) {
  std::vector<ApproxTriple> out;
  out.reserve(last);
  for (std::uint64_t ell = 1; ell <= last; ++ell) out.push_back(triple_from_index(wm, ell));
  return out;
}

}  // namespace

TheoreticalExponents theoretical_exponents(const QuadReal& sigma) {
  if (sigma.sign() <= 0 || compare(sigma, golden_sigma()) > 0) {
    throw std::domain_error("theoretical_exponents: sigma must lie in (0, (sqrt5-1)/2]");
  }
  TheoreticalExponents th;
  th.sigma = sigma;
  th.w2 = QuadReal(1) + QuadReal(2) / sigma;
  th.w2star = th.w2;
  th.lambda2 = QuadReal(1);
  th.hat_w2 = QuadReal(2) + sigma;
  th.hat_w2star = th.hat_w2;
  th.hat_lambda2 = (QuadReal(1) + sigma) / (QuadReal(2) + sigma);
  return th;
}

TheoreticalExponents theoretical_exponents_unbounded() {
  TheoreticalExponents th;
  th.sigma = QuadReal(0);
  th.lambda2 = QuadReal(1);
  th.hat_w2 = QuadReal(2);
  th.hat_w2star = QuadReal(2);
  th.hat_lambda2 = QuadReal(Rational(1, 2));
  return th;
}

TailLimit EstimateTable::tail(std::size_t count) const {
  if (rows.empty()) throw std::logic_error("tail: empty table");
  count = std::clamp<std::size_t>(count, 1, rows.size());
  TailLimit out;
  out.rows = count;
  const std::size_t first = rows.size() - count;
  out.first_index = rows[first].index;
  out.last_index = rows.back().index;
  out.value = rows[first].estimate;
  for (std::size_t i = first + 1; i < rows.size(); ++i) {
    const Bracket& e = rows[i].estimate;
    if (kind == LimitKind::Limsup) {
      out.value = {std::max(out.value.lo, e.lo), std::max(out.value.hi, e.hi)};
    } else {
      out.value = {std::min(out.value.lo, e.lo), std::min(out.value.hi, e.hi)};
    }
  }
  return out;
}

std::size_t EstimateTable::rows_above(double gate) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const EstimateRow& r) { return r.log10_height >= gate; }));
}

std::optional<TailLimit> EstimateTable::gated_tail(double gate, std::size_t count) const {
  EstimateTable gated{quantity, kind, {}, target};
  for (const auto& r : rows) {
    if (r.log10_height >= gate) gated.rows.push_back(r);
  }
  if (gated.rows.size() < count) return std::nullopt;
  return gated.tail(count);
}

EstimateTable estimate_w2star(WordMatrices& wm, int depth) {
  if (depth < 3) throw std::invalid_argument("estimate_w2star: depth must be >= 3");
  EstimateTable table{"w2star", LimitKind::Limsup, {}, kNaN};
  for (int k = 3; k <= depth; ++k) {
    const QuadraticSurd s = alpha_k(wm, k);
    const DistanceBracket d = disagreement_distance(wm, k);
    EstimateRow row;
    row.index = static_cast<std::uint64_t>(k);
    row.estimate = (-d.log_distance) / log_bound(s.height()) - Bracket::point(1.0);
    row.log10_height = log10_lo(wm.X(k));
    row.cross_check = 1.0 + 2.0 * eta(wm, k).estimate.mid();
    table.rows.push_back(row);
  }
  return table;
}

EstimateTable estimate_hat_w2(WordMatrices& wm, int depth) {
  if (depth < 3) throw std::invalid_argument("estimate_hat_w2: depth must be >= 3");
  EstimateTable table{"hat_w2", LimitKind::Liminf, {}, kNaN};
  std::optional<QuadraticSurd> next;
  for (int k = 3; k <= depth; ++k) {
    const QuadraticSurd s = next ? *next : alpha_k(wm, k);
    next = alpha_k(wm, k + 1);
    const DistanceBracket d = disagreement_distance(wm, k);
    EstimateRow row;
    row.index = static_cast<std::uint64_t>(k);
    row.estimate = (-d.log_distance - log_bound(s.height())) / log_bound(next->height());
    row.log10_height = log10_lo(wm.X(k));
    row.cross_check = 2.0 + 1.0 / eta(wm, k).estimate.mid();
    table.rows.push_back(row);
  }
  return table;
}

EstimateTable estimate_lambda2(WordMatrices& wm, std::uint64_t lmax) {
  if (lmax < 1) throw std::invalid_argument("estimate_lambda2: lmax must be >= 1");
  EstimateTable table{"lambda2", LimitKind::Limsup, {}, 1.0};
  const std::vector<ApproxTriple> xs = triples_upto(wm, lmax);
  BigInt top = 1;
  for (const auto& x : xs) top = std::max(top, x.height());
  // L(x) is about 1/x0 and the enclosure error is about x0 * width, so
  // twice the bit length of the largest x0 plus a margin suffices.
  const unsigned long bits = 2 * mpz_sizeinbase(top.get_mpz_t(), 2) + 64;
  const RealEnclosure xi = xi_enclosure(wm, bits);
  for (const auto& x : xs) {
    const BigInt h = x.height();
    if (h <= 1) continue;
    const RealEnclosure L = L_value(x, xi);
    const Bracket log_l{log_bound(L.lo).lo, log_bound(L.hi).hi};
    EstimateRow row;
    row.index = x.ell;
    row.estimate = (-log_l) / log_bound(h);
    row.log10_height = log10_lo(h);
    row.cross_check = kNaN;
    table.rows.push_back(row);
  }
  return table;
}

EstimateTable estimate_hat_lambda2(WordMatrices& wm, std::uint64_t lmax) {
  if (lmax < 1) throw std::invalid_argument("estimate_hat_lambda2: lmax must be >= 1");
  EstimateTable table{"hat_lambda2", LimitKind::Liminf, {}, kNaN};
  const std::vector<ApproxTriple> xs = triples_upto(wm, lmax + 1);
  for (std::uint64_t ell = 1; ell <= lmax; ++ell) {
    const BigInt h = xs[ell - 1].height();
    if (h <= 1) continue;
    EstimateRow row;
    row.index = ell;
    row.estimate = log_bound(h) / log_bound(xs[ell].height());
    row.log10_height = log10_lo(h);
    row.cross_check = kNaN;
    const BlockIndex idx = decompose_ell(wm.slope(), ell);
    if (idx.k >= 3 && wm.X(idx.k - 1) > 1) {
      const double inv_eta = 1.0 / eta(wm, idx.k - 1).estimate.mid();
      const double t = static_cast<double>(idx.t);
      row.cross_check = (t + inv_eta) / (t + 1.0 + inv_eta);
    }
    table.rows.push_back(row);
  }
  return table;
}

std::vector<AuditItem> inequality_audit(const TheoreticalExponents& th) {
  if (!th.w2 || !th.w2star) return {};
  const QuadReal& w2 = *th.w2;
  const QuadReal& w2s = *th.w2star;
  const QuadReal& hw2 = th.hat_w2;
  const QuadReal& hw2s = th.hat_w2star;
  const QuadReal w2p = th.lambda2.inverse();
  const QuadReal hw2p = th.hat_lambda2.inverse();
  const QuadReal one(1), two(2), three(3);
  const QuadReal sharp_hat_w2(3, 1, 5, 2);
  const QuadReal sharp_hat_w2p(1, 1, 5, 2);

  std::vector<AuditItem> out;
  out.push_back(le("2 <= hat_w2", two, hw2));
  out.push_back(le("hat_w2 <= w2", hw2, w2));
  out.push_back(le("1/2 <= hat_lambda2", QuadReal(Rational(1, 2)), th.hat_lambda2));
  out.push_back(le("hat_lambda2 <= min(1, lambda2)", th.hat_lambda2, min_of(one, th.lambda2)));
  out.push_back(le("1 <= hat_w2star", one, hw2s));
  out.push_back(le("hat_w2star <= min(w2star, hat_w2)", hw2s, min_of(w2s, hw2)));
  out.push_back(le("max(w2star, hat_w2) <= w2", max_of(w2s, hw2), w2));
  out.push_back(le("w2/(w2-1) <= hat_w2star", w2 / (w2 - one), hw2s));
  out.push_back(le("hat_w2/(hat_w2-1) <= w2star", hw2 / (hw2 - one), w2s));
  out.push_back(le("2/(w2-1) <= w2'", two / (w2 - one), w2p));
  out.push_back(le("w2' <= (w2+2)/w2", w2p, (w2 + two) / w2));
  out.push_back(le("(w2+2)/w2 <= 2", (w2 + two) / w2, two));
  out.push_back(le("2/(hat_w2-1) <= hat_w2'", two / (hw2 - one), hw2p));
  out.push_back(le("hat_w2' <= (hat_w2+2)/hat_w2", hw2p, (hw2 + two) / hw2));
  out.push_back(le("(hat_w2+2)/hat_w2 <= 2", (hw2 + two) / hw2, two));
  out.push_back(le("hat_w2' <= w2star", hw2p, w2s));
  out.push_back(le("1 <= hat_w2'", one, hw2p));
  out.push_back(le("hat_w2 <= 3", hw2, three));
  out.push_back(le("(1+sqrt5)/2 <= hat_w2'", sharp_hat_w2p, hw2p));
  out.push_back(le("hat_w2 <= (3+sqrt5)/2", hw2, sharp_hat_w2));
  out.push_back(le("hat_w2star <= (3+sqrt5)/2", hw2s, sharp_hat_w2));
  return out;
}

ExponentReport exponent_report(const Alphabet& alphabet, const SlopeSequence& seq, int depth, std::uint64_t lmax,
                               std::size_t digit_budget) {
  ExponentReport rep;
  rep.slope_spec = seq.spec();
  rep.alphabet = alphabet;
  rep.requested_depth = depth;
  rep.requested_lmax = lmax;
  WordMatrices wm(alphabet, seq, digit_budget);
  try {
    wm.extend_to(depth + 1);
  } catch (const ResourceError&) {
    depth = wm.depth() - 1;
    if (depth < 3) throw;
  }
  lmax = std::min(lmax, ell_of(seq, depth));
  rep.depth = depth;
  rep.lmax = lmax;
  rep.sigma = sigma_estimate(seq, static_cast<std::uint64_t>(depth));
  rep.unbounded = rep.sigma.unbounded;
  if (rep.sigma.exact) {
    rep.theoretical = theoretical_exponents(*rep.sigma.exact);
  } else if (rep.unbounded) {
    rep.theoretical = theoretical_exponents_unbounded();
  } else {
    rep.theoretical = theoretical_exponents(QuadReal(rep.sigma.estimate));
  }
  const TheoreticalExponents& th = rep.theoretical;
  const double inf = std::numeric_limits<double>::infinity();

  rep.tables.push_back(estimate_w2star(wm, depth));
  rep.tables.back().target = th.w2star ? th.w2star->to_double() : inf;
  rep.tables.push_back(estimate_hat_w2(wm, depth));
  rep.tables.back().target = th.hat_w2.to_double();
  rep.tables.push_back(estimate_lambda2(wm, lmax));
  rep.tables.back().target = th.lambda2.to_double();
  rep.tables.push_back(estimate_hat_lambda2(wm, lmax));
  rep.tables.back().target = th.hat_lambda2.to_double();
  rep.audit = inequality_audit(th);
  return rep;
}

RealEnclosure beta_value(const SlopeSequence& seq, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("beta_value: terms must be >= 1");
  const Word w = CharacteristicWord(seq, std::max(terms, kDefaultMaxWordLen)).prefix(terms);
  BigInt num = 0;
  for (std::size_t j = 0; j < terms; ++j) {
    num <<= 1;
    if (w[j] == Letter::A) num += 1;
  }
  BigInt den = 1;
  den <<= terms;
  Rational lo(num, den);
  lo.canonicalize();
  Rational hi = lo + Rational(2, den);
  hi.canonicalize();
  return {lo, hi};
}

std::vector<BigInt> rational_cf(const Rational& x) {
  std::vector<BigInt> out;
  BigInt n = x.get_num();
  BigInt d = x.get_den();
  while (d != 0) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    BigInt r = n - q * d;
    out.push_back(q);
    n = d;
    d = r;
  }
  return out;
}

BetaEstimate estimate_w1_beta(const SlopeSequence& seq, std::size_t terms) {
  BetaEstimate out;
  out.terms = terms;
  const RealEnclosure beta = beta_value(seq, terms);
  std::vector<BigInt> lo = rational_cf(beta.lo);
  std::vector<BigInt> hi = rational_cf(beta.hi);
  // The last quotient of a finite expansion is not shared by nearby irrationals.
  lo.pop_back();
  hi.pop_back();
  const std::size_t common =
      static_cast<std::size_t>(std::mismatch(lo.begin(), lo.end(), hi.begin(), hi.end()).first - lo.begin());
  out.certified_quotients.assign(lo.begin(), lo.begin() + static_cast<std::ptrdiff_t>(common));
  if (out.certified_quotients.size() < 8) {
    throw PrecisionError("estimate_w1_beta: fewer than 8 certified partial quotients; raise terms");
  }

  std::vector<BigInt> q{1};
  BigInt q_prev = 0;
  for (std::size_t n = 1; n < out.certified_quotients.size(); ++n) {
    BigInt next = out.certified_quotients[n] * q.back() + q_prev;
    q_prev = q.back();
    q.push_back(std::move(next));
  }
  out.table = {"w1_beta", LimitKind::Limsup, {}, kNaN};
  for (std::size_t n = 1; n + 1 < q.size(); ++n) {
    if (q[n] <= 1) continue;
    EstimateRow row;
    row.index = n;
    row.estimate = log_bound(q[n + 1]) / log_bound(q[n]);
    row.log10_height = log10_lo(q[n]);
    row.cross_check = kNaN;
    out.table.rows.push_back(row);
  }
  if (seq.eventually_periodic()) out.table.target = sigma_exact(seq).inverse().to_double();
  out.limit = out.table.tail();
  return out;
}

}  // namespace sturmian
