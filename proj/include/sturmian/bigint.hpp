#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sturmian {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a computation would exceed its digit budget or word-length cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enclosure is too wide to certify the requested statement.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultDigitBudget = 200000;

/// Number of decimal digits of |n|; may overcount by one (GMP sizeinbase).
inline std::size_t approx_decimal_digits(const BigInt& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 10);
}

inline void check_digit_budget(const BigInt& n, std::size_t budget, const char* what) {
  if (approx_decimal_digits(n) > budget) {
    throw ResourceError(std::string(what) + ": integer exceeds digit budget of " +
                        std::to_string(budget) + " decimal digits");
  }
}

inline std::string to_decimal(const BigInt& n) { return n.get_str(10); }

inline std::string to_decimal(const Rational& q) { return q.get_str(10); }

}  // namespace sturmian

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
