#pragma once

#include "sturmian/cfmat.hpp"
#include "sturmian/quad_real.hpp"

#include <cstdint>
#include <vector>

namespace sturmian {

/// A quadratic irrational with primitive minimal polynomial c2 T^2 + c1 T + c0.
struct QuadraticSurd {
  BigInt c2, c1, c0;
  QuadReal root;
  int k = 0;

  BigInt discriminant() const { return BigInt(c1 * c1 - 4 * c2 * c0); }
  BigInt height() const;
};

/// alpha_k = [0; m_k, m_k, ...] from the trinomial built on M'_k and F_k, k >= 2.
QuadraticSurd alpha_k(WordMatrices& wm, int k);
QuadraticSurd alpha_k(const Alphabet& alphabet, const SlopeSequence& seq, int k);

/// |alpha' - alpha| = sqrt(disc) / c2.
QuadReal conjugate_gap(const QuadraticSurd& s);

/// Additive constant of the lower end of the disagreement bracket.
Bracket disagreement_constant(const Alphabet& alphabet);

struct DistanceBracket {
  /// Top-left entry of M_k M'_{k+1}.
  BigInt qN;
  /// Certified enclosure of log|xi - alpha_k|.
  Bracket log_distance;
};

/// log|xi - alpha_k| in [-2 log q_N - C, -2 log q_N], k >= 3.
DistanceBracket disagreement_distance(WordMatrices& wm, int k);

/// A palindromic simultaneous approximation triple: the entries of the
/// symmetric matrix [[x0, x1], [x1, x2]].
struct ApproxTriple {
  BigInt x0, x1, x2;
  std::uint64_t ell = 0;

  static ApproxTriple from_matrix(const Mat2& m, std::uint64_t ell = 0);
  Mat2 matrix() const;
  BigInt det() const { return BigInt(x0 * x2 - x1 * x1); }
  BigInt height() const;
};

/// Triple of the ell-th palindromic prefix (m_k^t m_{k-1})', via block matrices.
ApproxTriple triple_from_index(WordMatrices& wm, std::uint64_t ell);
ApproxTriple triple_from_index(const Alphabet& alphabet, const SlopeSequence& seq, std::uint64_t ell);

/// ell_k = s_2 + ... + s_k (ell_1 = 0).
std::uint64_t ell_of(const SlopeSequence& seq, int k);

/// L(x) = max(|x0 xi - x1|, |x0 xi^2 - x2|) over the enclosure of xi.
/// Throws PrecisionError when the enclosure cannot separate L from 0.
RealEnclosure L_value(const ApproxTriple& t, const RealEnclosure& xi);

BigInt det3_direct(const ApproxTriple& x, const ApproxTriple& y, const ApproxTriple& z);
/// trace(J x J z J y), J = [[0, 1], [-1, 0]].
BigInt det3_trace(const ApproxTriple& x, const ApproxTriple& y, const ApproxTriple& z);
/// Sign relating the two routes: det3_direct = kDet3TraceSign * det3_trace.
inline constexpr int kDet3TraceSign = 1;
/// Both routes; throws std::logic_error if they disagree.
BigInt det3(const ApproxTriple& x, const ApproxTriple& y, const ApproxTriple& z);

/// det3 vanishes on every consecutive triple of x_{ell_{k-1}}, x_{ell_k+1}, ..., x_{ell_{k+1}+1}.
bool check_collinearity(WordMatrices& wm, int k);

struct RecurrenceCheck {
  bool holds = false;
  int epsilon = 0;
  /// epsilon == -det(M_k).
  bool matches_cayley_hamilton = false;
};

/// x_{ell_k+t+2} = trace(M_k) x_{ell_k+t+1} + eps x_{ell_k+t}, with x_{ell_k+0}
/// read as x_{ell_{k-1}}; 0 <= t < s_{k+1}.
RecurrenceCheck ch_recurrence_check(WordMatrices& wm, int k, std::uint64_t t);

}  // namespace sturmian
