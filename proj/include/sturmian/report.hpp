#pragma once

#include "sturmian/config.hpp"
#include "sturmian/exponents.hpp"
#include "sturmian/log_bound.hpp"
#include "sturmian/quad_real.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sturmian {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// One CSV line. err_lo and err_hi are the distances from the estimate to
/// the ends of its certified bracket; NaN prints as an empty cell.
struct CsvRow {
  std::string index;
  std::string quantity;
  double estimate = 0.0;
  double err_lo = 0.0;
  double err_hi = 0.0;
  double target = 0.0;
};

struct Report {
  Json json;
  std::vector<CsvRow> csv;
};

std::string render_json(const Json& j);
/// Header: index,quantity,estimate,err_lo,err_hi,target
std::string render_csv(const std::vector<CsvRow>& rows);

Json envelope(const std::string& command);
Json quad_json(const QuadReal& x, unsigned digits = 30);
Json bracket_json(const Bracket& b);
Json table_json(const EstimateTable& t, const TailLimit& tail);
CsvRow csv_row(std::string index, std::string quantity, const Bracket& b, double target);

/// Tail window of ceil(window * rows) rows.
TailLimit window_tail(const EstimateTable& t, double window);

Json exponent_report_json(const ExponentReport& rep, double window);
std::vector<CsvRow> exponent_report_csv(const ExponentReport& rep, double window);

Report word_report(const RunConfig& cfg);
Report approx_report(const RunConfig& cfg);
Report exponents_report(const RunConfig& cfg);
Report spectrum_report(const RunConfig& cfg);
Report beta_report(const RunConfig& cfg);

}  // namespace sturmian
