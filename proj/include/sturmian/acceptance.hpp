#pragma once

#include "sturmian/report.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sturmian {

struct SlopePair {
  std::string slope;
  unsigned a = 1;
  unsigned b = 2;

  friend bool operator==(const SlopePair&, const SlopePair&) = default;
};

/// Pinned settings of the acceptance run.
struct AcceptanceConfig {
  /// Relative tolerance for exponent tail limits.
  double tolerance = 0.02;
  double beta_tolerance = 0.05;
  /// Rows count only once log10 of their height reaches this.
  double log10_gate = 500.0;
  std::size_t beta_terms = 2000;
  std::size_t quasi_pairs = 1000;
  std::uint64_t seed = 20240917;
  /// Words are materialized up to this length for the combinatorial checks.
  std::size_t word_cap = 200000;
  /// Matrix depth for the determinant and alignment identities.
  int matrix_depth = 12;
  int max_depth = 60;
  std::size_t digit_budget = kDefaultDigitBudget;

  std::vector<SlopePair> identity_pairs = {
      {"const:1", 1, 2}, {"const:2", 1, 3}, {"periodic:1,2", 2, 1}, {"const:3", 3, 5},
      {"explicit:3,1;tail=periodic:2,1", 1, 4}};
  std::vector<SlopePair> exponent_pairs = {
      {"const:1", 1, 2}, {"const:2", 1, 2}, {"const:3", 1, 2}, {"periodic:1,2", 1, 2}};

  /// Adds a pair to both lists unless already present.
  void include(const SlopePair& p);
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  Json data;
};

CriterionResult criterion_identities(const AcceptanceConfig& cfg);
CriterionResult criterion_quadratic_heights(const AcceptanceConfig& cfg);
CriterionResult criterion_exponents(const AcceptanceConfig& cfg);
CriterionResult criterion_spectrum(const AcceptanceConfig& cfg);
CriterionResult criterion_audit(const AcceptanceConfig& cfg);
CriterionResult criterion_beta(const AcceptanceConfig& cfg);
CriterionResult criterion_determinism(const AcceptanceConfig& cfg);

/// Criteria 1..7 in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

/// "criterion 3 PASS exponent limits: ..." style line.
std::string summary_line(const CriterionResult& r);

Json acceptance_json(const AcceptanceConfig& cfg, const std::vector<CriterionResult>& results);

/// Relative distance from target to the nearest point of the bracket (0 if inside).
double relative_miss(const Bracket& b, double target);

/// The limit reproduction for one slope, deepened until the gate is met.
struct ExponentReproduction {
  SlopePair pair;
  int depth = 0;
  std::uint64_t lmax = 0;
  std::vector<EstimateTable> tables;
  std::vector<std::optional<TailLimit>> limits;
  std::vector<double> misses;
  bool passed = false;
};

ExponentReproduction reproduce_exponents(const SlopePair& pair, const AcceptanceConfig& cfg);

}  // namespace sturmian
