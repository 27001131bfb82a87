#include "sturmian/config.hpp"

#include "sturmian/slope.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sturmian {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) throw ConfigError("config: bad value '" + value + "' for " + key);
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad value '" + value + "' for " + key);
  }
}

}  // namespace

void RunConfig::validate() const {
  if (a == 0 || b == 0) throw ConfigError("config: letters a and b must be positive");
  if (a == b) throw ConfigError("config: letters a and b must differ");
  if (depth < 3) throw ConfigError("config: depth must be >= 3");
  if (lmax < 1) throw ConfigError("config: lmax must be >= 1");
  if (bits < 64) throw ConfigError("config: bits must be >= 64");
  if (digit_budget == 0) throw ConfigError("config: digit-budget must be positive");
  if (!(window > 0.0 && window <= 1.0)) throw ConfigError("config: window must lie in (0, 1]");
  if (!(tolerance > 0.0 && tolerance <= 0.2)) throw ConfigError("config: tolerance must lie in (0, 0.2]");
  if (max_word_len < 2) throw ConfigError("config: max-word-len must be >= 2");
  if (rows == 0) throw ConfigError("config: rows must be >= 1");
  if (terms == 0) throw ConfigError("config: terms must be >= 1");
  try {
    (void)SlopeSequence::parse(slope);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty()) throw ConfigError("config: line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "both") return OutputFormat::Both;
  throw ConfigError("config: format must be json, csv or both");
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Both: return "both";
  }
  return {};
}

void apply_setting(RunConfig& cfg, const std::string& raw_key, const std::string& value) {
  std::string key = raw_key;
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "a") cfg.a = parse_number<unsigned>(key, value);
  else if (key == "b") cfg.b = parse_number<unsigned>(key, value);
  else if (key == "slope") cfg.slope = value;
  else if (key == "depth") cfg.depth = parse_number<int>(key, value);
  else if (key == "lmax") cfg.lmax = parse_number<std::uint64_t>(key, value);
  else if (key == "bits") cfg.bits = parse_number<unsigned long>(key, value);
  else if (key == "digit-budget") cfg.digit_budget = parse_number<std::size_t>(key, value);
  else if (key == "window") cfg.window = parse_double(key, value);
  else if (key == "format") cfg.format = parse_format(value);
  else if (key == "out") cfg.out = value;
  else if (key == "tolerance") cfg.tolerance = parse_double(key, value);
  else if (key == "max-word-len") cfg.max_word_len = parse_number<std::size_t>(key, value);
  else if (key == "rows") cfg.rows = parse_number<unsigned>(key, value);
  else if (key == "terms") cfg.terms = parse_number<std::size_t>(key, value);
  else throw ConfigError("config: unknown key '" + raw_key + "'");
}

}  // namespace sturmian
