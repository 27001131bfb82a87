#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace sturmian {

/// Raised on malformed or out-of-range configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv, Both };

struct RunConfig {
  unsigned a = 1;
  unsigned b = 2;
  std::string slope = "const:1";
  int depth = 16;
  std::uint64_t lmax = 25;
  unsigned long bits = 256;
  std::size_t digit_budget = 200000;
  /// Fraction of the rows forming the tail window.
  double window = 1.0 / 3.0;
  OutputFormat format = OutputFormat::Json;
  std::string out;
  double tolerance = 0.02;
  std::size_t max_word_len = 1000000;
  unsigned rows = 3;
  std::size_t terms = 2000;

  /// Throws ConfigError on a broken invariant.
  void validate() const;
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "STURMIAN_OUT_DIR";

/// `key = value` lines; '#' starts a comment. Unknown keys are errors.
std::map<std::string, std::string> read_config_file(const std::string& path);
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Applies one key (flag spelling without the dashes, '-' or '_' accepted).
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

OutputFormat parse_format(const std::string& text);
std::string format_name(OutputFormat f);

}  // namespace sturmian
