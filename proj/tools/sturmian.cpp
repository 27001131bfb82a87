// Command-line driver for the Sturmian continued-fraction toolkit.
#include "sturmian/acceptance.hpp"
#include "sturmian/config.hpp"
#include "sturmian/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace {

using namespace sturmian;

constexpr int kExitCheck = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

void emit(const std::string& command, const RunConfig& cfg, const Report& rep) {
  const std::string json = render_json(rep.json);
  const std::string csv = render_csv(rep.csv);
  std::filesystem::path stem;
  if (!cfg.out.empty()) {
    stem = cfg.out;
  } else if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
    stem = std::filesystem::path(dir) / command;
  }
  if (stem.empty()) {
    if (cfg.format != OutputFormat::Csv) std::cout << json;
    if (cfg.format != OutputFormat::Json) std::cout << csv;
    return;
  }
  // With a single format an explicit --out names the file itself.
  const bool exact = !cfg.out.empty() && cfg.format != OutputFormat::Both;
  if (cfg.format != OutputFormat::Csv) write_file(exact ? stem : std::filesystem::path(stem.string() + ".json"), json);
  if (cfg.format != OutputFormat::Json) write_file(exact ? stem : std::filesystem::path(stem.string() + ".csv"), csv);
}

int run_verify(const RunConfig& cfg) {
  AcceptanceConfig acc;
  acc.tolerance = cfg.tolerance;
  acc.digit_budget = cfg.digit_budget;
  acc.word_cap = std::min(acc.word_cap, cfg.max_word_len);
  acc.include({SlopeSequence::parse(cfg.slope).spec(), cfg.a, cfg.b});
  const std::vector<CriterionResult> results = run_acceptance(acc);
  Report rep{acceptance_json(acc, results), {}};
  bool ok = true;
  for (const auto& r : results) {
    std::cerr << summary_line(r) << "\n";
    rep.csv.push_back({std::to_string(r.id), r.title, r.passed ? 1.0 : 0.0, 0.0, 0.0, 1.0});
    ok = ok && r.passed;
  }
  emit("verify", cfg, rep);
  return ok ? 0 : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for Sturmian continued fractions"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key = value file; flags override it");

  // Flag values are collected as text and applied after the config file.
  std::map<std::string, std::string> flags;
  const std::vector<std::pair<std::string, std::string>> specs = {
      {"slope", "slope sequence: const:d, periodic:p1,p2,..., explicit:...;tail=..."},
      {"a", "letter a (positive integer)"},
      {"b", "letter b (positive integer, != a)"},
      {"depth", "block depth K"},
      {"lmax", "palindrome depth"},
      {"bits", "precision of the xi enclosure in bits"},
      {"digit-budget", "abort when an integer exceeds this many digits"},
      {"window", "tail window as a fraction of the rows"},
      {"format", "json, csv or both"},
      {"out", "output file (stem when --format both)"},
      {"tolerance", "relative tolerance for verify"},
      {"max-word-len", "longest word to materialize"},
      {"rows", "spectrum rows"},
      {"terms", "beta-series terms"}};
  for (const auto& [name, help] : specs) {
    app.add_option_function<std::string>(
           "--" + name, [&flags, key = name](const std::string& v) { flags[key] = v; }, help)
        ->take_last();
  }

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"word", "characteristic word, palindromic prefixes, combinatorial checks"},
      {"approx", "quadratic approximants, triples, determinant checks"},
      {"exponents", "exponent estimates, targets and inequality audit"},
      {"spectrum", "top of the spectrum and its limit point"},
      {"beta", "irrationality exponent of the binary beta-series"},
      {"verify", "run the acceptance suite; exit 1 on any failure"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      for (const auto& [k, v] : read_config_file(config_path)) apply_setting(cfg, k, v);
    }
    for (const auto& [k, v] : flags) apply_setting(cfg, k, v);
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (command == "verify") return run_verify(cfg);
    if (command == "word") emit(command, cfg, word_report(cfg));
    if (command == "approx") emit(command, cfg, approx_report(cfg));
    if (command == "exponents") {
      const Report rep = exponents_report(cfg);
      emit(command, cfg, rep);
      for (const auto& a : rep.json["report"]["audit"]) {
        if (!a["holds"].get<bool>()) return kExitCheck;
      }
    }
    if (command == "spectrum") emit(command, cfg, spectrum_report(cfg));
    if (command == "beta") emit(command, cfg, beta_report(cfg));
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const ResourceError& e) {
    std::cerr << e.what() << "\n";
    return kExitResource;
  } catch (const PrecisionError& e) {
    std::cerr << e.what() << "\n";
    return kExitResource;
  }
  return 0;
}
