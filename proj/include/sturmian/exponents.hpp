#pragma once

#include "sturmian/approx.hpp"
#include "sturmian/cfmat.hpp"
#include "sturmian/log_bound.hpp"
#include "sturmian/quad_real.hpp"
#include "sturmian/slope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sturmian {

/// The six exponents at xi_phi. An empty optional stands for +infinity.
struct TheoreticalExponents {
  QuadReal sigma;
  std::optional<QuadReal> w2, w2star;
  QuadReal lambda2, hat_w2, hat_w2star, hat_lambda2;
};

/// Requires 0 < sigma <= (sqrt5 - 1)/2; throws std::domain_error otherwise.
TheoreticalExponents theoretical_exponents(const QuadReal& sigma);
/// sigma = 0: w2 and w2* infinite, the remaining values at their sigma -> 0 limits.
TheoreticalExponents theoretical_exponents_unbounded();

enum class LimitKind { Limsup, Liminf };

struct EstimateRow {
  std::uint64_t index = 0;
  Bracket estimate;
  /// log10 of the height that drives this row (X_k or X'_ell), for depth gates.
  double log10_height = 0.0;
  /// Independent prediction of the same quantity, NaN when absent.
  double cross_check = 0.0;
};

struct TailLimit {
  Bracket value;
  std::uint64_t first_index = 0;
  std::uint64_t last_index = 0;
  std::size_t rows = 0;
};

struct EstimateTable {
  std::string quantity;
  LimitKind kind = LimitKind::Limsup;
  std::vector<EstimateRow> rows;
  double target = 0.0;

  /// Limit over the last `count` rows (all rows if count exceeds the size).
  TailLimit tail(std::size_t count) const;
  /// Default window: the last ceil(n/3) rows.
  TailLimit tail() const { return tail((rows.size() + 2) / 3); }
  /// Limit over the last `count` rows with log10_height >= gate.
  std::optional<TailLimit> gated_tail(double gate, std::size_t count) const;
  std::size_t rows_above(double gate) const;
};

/// Rows k = 3..K: -log|xi - alpha_k| / log H(alpha_k) - 1; limsup -> 1 + 2/sigma.
EstimateTable estimate_w2star(WordMatrices& wm, int depth);
/// Rows k = 3..K: (-log|xi - alpha_k| - log H(alpha_k)) / log H(alpha_{k+1}); liminf -> 2 + sigma.
EstimateTable estimate_hat_w2(WordMatrices& wm, int depth);
/// Rows ell = 1..Lmax with X'_ell > 1: -log L(x_ell) / log X'_ell; limsup -> 1.
EstimateTable estimate_lambda2(WordMatrices& wm, std::uint64_t lmax);
/// Rows ell = 1..Lmax with X'_ell > 1: log X'_ell / log X'_{ell+1}; liminf -> (1+sigma)/(2+sigma).
EstimateTable estimate_hat_lambda2(WordMatrices& wm, std::uint64_t lmax);

struct AuditItem {
  std::string name;
  bool holds = false;
  /// Both sides are equal.
  bool equality = false;
};

/// Every chain for n = 2, exactly, with w'_2 = 1/lambda_2 and hat w'_2 = 1/hat lambda_2.
std::vector<AuditItem> inequality_audit(const TheoreticalExponents& th);

struct ExponentReport {
  std::string slope_spec;
  Alphabet alphabet;
  /// Depth and palindrome depth actually used; lower than requested when the
  /// digit budget cuts the computation short.
  int depth = 0;
  std::uint64_t lmax = 0;
  int requested_depth = 0;
  std::uint64_t requested_lmax = 0;
  SigmaValue sigma;
  bool unbounded = false;
  TheoreticalExponents theoretical;
  std::vector<EstimateTable> tables;
  std::vector<AuditItem> audit;
};

/// Clamps depth and lmax to what the digit budget allows (throws
/// ResourceError if not even depth 3 fits).
ExponentReport exponent_report(const Alphabet& alphabet, const SlopeSequence& seq, int depth, std::uint64_t lmax,
                               std::size_t digit_budget = kDefaultDigitBudget);

/// sum l_j / 2^j over the first `terms` letters of m_phi with a = 1, b = 0,
/// enclosed in [S, S + 2^(1 - terms)].
RealEnclosure beta_value(const SlopeSequence& seq, std::size_t terms);

/// Partial quotients of x (a rational), a_0 first.
std::vector<BigInt> rational_cf(const Rational& x);

struct BetaEstimate {
  std::size_t terms = 0;
  /// Partial quotients shared by both ends of the enclosure, last ones dropped.
  std::vector<BigInt> certified_quotients;
  /// Rows n: log q_{n+1} / log q_n; limsup -> 1/sigma.
  EstimateTable table;
  TailLimit limit;
};

/// Throws PrecisionError when fewer than 8 quotients are certified.
BetaEstimate estimate_w1_beta(const SlopeSequence& seq, std::size_t terms);

}  // namespace sturmian
