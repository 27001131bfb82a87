#pragma once

#include "sturmian/bigint.hpp"
#include "sturmian/quad_real.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

/// The partial quotients s_1, s_2, ... of the angle [0; s_1, s_2, ...].
///
/// Text syntax: `const:d`, `periodic:p1,p2,...`, `explicit:a1,a2,...;tail=<spec>`
/// where the tail is itself `const:` or `periodic:`. Generated sequences
/// exist only through the library (they have no exact sigma).
class SlopeSequence {
 public:
  enum class Mode { Constant, Periodic, Explicit, Generated };

  static SlopeSequence constant(unsigned d);
  static SlopeSequence periodic(std::vector<unsigned> pattern);
  static SlopeSequence with_prefix(std::vector<unsigned> prefix, const SlopeSequence& tail);
  static SlopeSequence generated(std::string name, std::function<unsigned(std::uint64_t)> term);

  /// Throws std::invalid_argument on malformed text.
  static SlopeSequence parse(std::string_view text);

  /// s_k for k >= 1.
  unsigned term(std::uint64_t k) const;
  std::vector<unsigned> terms(std::uint64_t count) const;

  Mode mode() const { return mode_; }
  bool eventually_periodic() const { return mode_ != Mode::Generated; }
  /// Repeating block of an eventually periodic sequence (a constant has period 1).
  const std::vector<unsigned>& tail_pattern() const;
  std::size_t preperiod() const { return prefix_.size(); }
  std::size_t period() const { return tail_pattern().size(); }
  /// Maximum term, when the sequence is known to be bounded.
  std::optional<unsigned> bound() const;

  /// Canonical text form; parse(spec()) reproduces the sequence.
  std::string spec() const;

 private:
  SlopeSequence() = default;

  Mode mode_ = Mode::Constant;
  std::vector<unsigned> prefix_;
  std::vector<unsigned> pattern_;
  std::string name_;
  std::shared_ptr<const std::function<unsigned(std::uint64_t)>> generator_;
};

/// Exact value of [s_k; s_{k-1}, ..., s_1].
Rational reverse_cf_value(const SlopeSequence& seq, std::uint64_t k);

/// sigma = 1 / limsup_k [s_k; ..., s_1], exactly, for eventually periodic
/// sequences. Throws std::domain_error otherwise.
QuadReal sigma_exact(const SlopeSequence& seq);

struct SigmaValue {
  std::optional<QuadReal> exact;
  Rational estimate;
  /// Indices k with window_begin < k <= window_end were used.
  std::uint64_t window_begin = 0;
  std::uint64_t window_end = 0;
  /// Window maximum of s_k exceeds everything before the window.
  bool unbounded = false;
};

/// estimate = 1 / max { [s_k; ..., s_1] : K - window < k <= K }.
SigmaValue sigma_estimate(const SlopeSequence& seq, std::uint64_t depth, std::uint64_t window);
/// Default window ceil(K / 2).
SigmaValue sigma_estimate(const SlopeSequence& seq, std::uint64_t depth);

}  // namespace sturmian
