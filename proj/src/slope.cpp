#include "sturmian/slope.hpp"

#include "sturmian/mat2.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace sturmian {
namespace {

unsigned parse_positive(std::string_view text) {
  unsigned value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0) {
    throw std::invalid_argument("slope: expected a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<unsigned> parse_list(std::string_view text) {
  std::vector<unsigned> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_positive(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("slope: trailing comma");
  }
  if (out.empty()) throw std::invalid_argument("slope: empty list");
  return out;
}

std::string join(const std::vector<unsigned>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void require_positive(const std::vector<unsigned>& v, const char* what) {
  if (std::any_of(v.begin(), v.end(), [](unsigned x) { return x == 0; })) {
    throw std::invalid_argument(std::string(what) + ": terms must be >= 1");
  }
}

}  // namespace

SlopeSequence SlopeSequence::constant(unsigned d) {
  if (d == 0) throw std::invalid_argument("slope: constant term must be >= 1");
  SlopeSequence s;
  s.mode_ = Mode::Constant;
  s.pattern_ = {d};
  return s;
}

SlopeSequence SlopeSequence::periodic(std::vector<unsigned> pattern) {
  if (pattern.empty()) throw std::invalid_argument("slope: empty periodic pattern");
  require_positive(pattern, "slope");
  SlopeSequence s;
  s.mode_ = Mode::Periodic;
  s.pattern_ = std::move(pattern);
  return s;
}

SlopeSequence SlopeSequence::with_prefix(std::vector<unsigned> prefix, const SlopeSequence& tail) {
  if (tail.mode_ != Mode::Constant && tail.mode_ != Mode::Periodic) {
    throw std::invalid_argument("slope: explicit tail must be constant or periodic");
  }
  require_positive(prefix, "slope");
  SlopeSequence s = tail;
  s.prefix_ = std::move(prefix);
  s.mode_ = s.prefix_.empty() ? tail.mode_ : Mode::Explicit;
  s.name_ = tail.mode_ == Mode::Constant ? "const" : "periodic";
  return s;
}

SlopeSequence SlopeSequence::generated(std::string name, std::function<unsigned(std::uint64_t)> term) {
  SlopeSequence s;
  s.mode_ = Mode::Generated;
  s.name_ = std::move(name);
  s.generator_ = std::make_shared<const std::function<unsigned(std::uint64_t)>>(std::move(term));
  return s;
}

SlopeSequence SlopeSequence::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("slope: missing ':' in '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "const") return constant(parse_positive(body));
  if (kind == "periodic") return periodic(parse_list(body));
  if (kind == "explicit") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("slope: explicit form needs ';tail=<spec>'");
    const std::string_view tail_text = body.substr(semi + 1);
    if (tail_text.substr(0, 5) != "tail=") throw std::invalid_argument("slope: expected 'tail=' after ';'");
    const SlopeSequence tail = parse(tail_text.substr(5));
    if (tail.mode_ == Mode::Explicit) throw std::invalid_argument("slope: nested explicit tails are not allowed");
    return with_prefix(parse_list(body.substr(0, semi)), tail);
  }
  throw std::invalid_argument("slope: unknown kind '" + std::string(kind) + "'");
}

unsigned SlopeSequence::term(std::uint64_t k) const {
  if (k == 0) throw std::out_of_range("slope: indices start at 1");
  if (mode_ == Mode::Generated) {
    const unsigned v = (*generator_)(k);
    if (v == 0) throw std::logic_error("slope: generator produced 0");
    return v;
  }
  if (k <= prefix_.size()) return prefix_[k - 1];
  const std::uint64_t j = k - prefix_.size();
  return pattern_[(j - 1) % pattern_.size()];
}

std::vector<unsigned> SlopeSequence::terms(std::uint64_t count) const {
  std::vector<unsigned> out;
  out.reserve(count);
  for (std::uint64_t k = 1; k <= count; ++k) out.push_back(term(k));
  return out;
}

const std::vector<unsigned>& SlopeSequence::tail_pattern() const {
  if (mode_ == Mode::Generated) throw std::domain_error("slope: generated sequences have no periodic tail");
  return pattern_;
}

std::optional<unsigned> SlopeSequence::bound() const {
  if (mode_ == Mode::Generated) return std::nullopt;
  unsigned m = *std::max_element(pattern_.begin(), pattern_.end());
  for (unsigned v : prefix_) m = std::max(m, v);
  return m;
}

std::string SlopeSequence::spec() const {
  const bool is_const = pattern_.size() == 1 && (mode_ == Mode::Constant || name_ == "const");
  const std::string tail = is_const ? "const:" + std::to_string(pattern_.front()) : "periodic:" + join(pattern_);
  switch (mode_) {
    case Mode::Constant:
    case Mode::Periodic:
      return tail;
    case Mode::Explicit:
      return "explicit:" + join(prefix_) + ";tail=" + tail;
    case Mode::Generated:
      return "generated:" + name_;
  }
  return {};
}

Rational reverse_cf_value(const SlopeSequence& seq, std::uint64_t k) {
  if (k == 0) throw std::out_of_range("reverse_cf_value: k must be >= 1");
  Rational value = seq.term(1);
  for (std::uint64_t j = 2; j <= k; ++j) {
    value = Rational(seq.term(j)) + 1 / value;
  }
  value.canonicalize();
  return value;
}

QuadReal sigma_exact(const SlopeSequence& seq) {
  if (!seq.eventually_periodic()) {
    throw std::domain_error("sigma_exact: sequence has no known eventually periodic tail");
  }
  const auto& pattern = seq.tail_pattern();
  if (pattern.size() == 1) {
    // 2 / (d + sqrt(d^2 + 4)) = (sqrt(d^2 + 4) - d) / 2
    const long d = pattern.front();
    return QuadReal(-d, 1, d * d + 4, 2);
  }
  // Along k = j (mod p), [s_k; s_{k-1}, ...] tends to the purely periodic
  // fraction whose period is the reversed pattern read from position j.
  const std::size_t p = pattern.size();
  std::optional<QuadReal> best;
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<unsigned> period(p);
    for (std::size_t i = 0; i < p; ++i) period[i] = pattern[(j + p - i) % p];
    QuadReal reciprocal = purely_periodic_value(letters_to_matrix(period));
    if (!best || reciprocal < *best) best = std::move(reciprocal);
  }
  return *best;
}

SigmaValue sigma_estimate(const SlopeSequence& seq, std::uint64_t depth, std::uint64_t window) {
  if (window == 0 || window > depth) throw std::invalid_argument("sigma_estimate: need 1 <= window <= K");
  SigmaValue out;
  out.window_begin = depth - window;
  out.window_end = depth;
  Rational best = 0;
  // One backward pass per k keeps every value exact; K is small in practice.
  for (std::uint64_t k = out.window_begin + 1; k <= depth; ++k) {
    Rational v = reverse_cf_value(seq, k);
    if (v > best) best = v;
  }
  out.estimate = 1 / best;
  out.estimate.canonicalize();
  if (seq.eventually_periodic()) {
    out.exact = sigma_exact(seq);
  } else {
    unsigned before = 0;
    unsigned inside = 0;
    for (std::uint64_t k = 1; k <= depth; ++k) {
      unsigned& slot = k <= out.window_begin ? before : inside;
      slot = std::max(slot, seq.term(k));
    }
    out.unbounded = inside > before;
  }
  return out;
}

SigmaValue sigma_estimate(const SlopeSequence& seq, std::uint64_t depth) {
  return sigma_estimate(seq, depth, (depth + 1) / 2);
}

}  // namespace sturmian
