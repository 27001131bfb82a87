#pragma once

#include "sturmian/cfmat.hpp"
#include "sturmian/quad_real.hpp"

#include <cstddef>
#include <vector>

namespace sturmian {

/// psi^n(1) for the substitution 1 -> 2, 2 -> 211.
struct SubstitutionWord {
  std::vector<unsigned> letters;
  unsigned generation = 0;
};

inline constexpr std::size_t kMaxSubstitutionLength = 50000000;

/// Throws ResourceError when the iterate would exceed `max_len` letters.
SubstitutionWord psi_iterate(unsigned n, std::size_t max_len = kMaxSubstitutionLength);

/// [0; psi^n(1), psi^n(1), ...], exactly.
QuadReal sigma_n(unsigned n);

/// Enclosure of s = [0; limit word] of width <= 10^-digits, digits <= 30.
/// Checks that successive iterates agree on the prefix that is used.
RealEnclosure s_limit(unsigned digits);

struct SpectrumRow {
  unsigned n = 0;
  QuadReal sigma;
  QuadReal hat_w2;
  QuadReal hat_lambda2;
};

/// Rows n = 0..N-1.
std::vector<SpectrumRow> spectrum_table(unsigned rows);

/// The slope pattern realizing row n: the reverse of psi^n(1).
std::vector<unsigned> spectrum_slope_pattern(unsigned n);

}  // namespace sturmian
