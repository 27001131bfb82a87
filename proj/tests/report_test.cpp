#include "sturmian/config.hpp"
#include "sturmian/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

using namespace sturmian;

TEST(Config, ParseText) {
  const auto kv = parse_config_text("# comment\nslope = periodic:1,2\n\n digit_budget=5000 # trailing\nformat = csv\n");
  EXPECT_EQ(kv.at("slope"), "periodic:1,2");
  EXPECT_EQ(kv.at("digit-budget"), "5000");
  EXPECT_EQ(kv.at("format"), "csv");
  EXPECT_THROW(parse_config_text("no equals sign\n"), ConfigError);
}

TEST(Config, ApplySettings) {
  RunConfig cfg;
  for (const auto& [k, v] : parse_config_text("a = 3\nb = 1\ndepth = 9\nlmax = 12\nwindow = 0.5\ntolerance = 0.05\n")) {
    apply_setting(cfg, k, v);
  }
  EXPECT_EQ(cfg.a, 3u);
  EXPECT_EQ(cfg.b, 1u);
  EXPECT_EQ(cfg.depth, 9);
  EXPECT_EQ(cfg.lmax, 12u);
  EXPECT_DOUBLE_EQ(cfg.window, 0.5);
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_THROW(apply_setting(cfg, "colour", "red"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "depth", "deep"), ConfigError);
}

TEST(Config, ValidateRejectsBrokenInvariants) {
  const auto broken = [](auto edit) {
    RunConfig cfg;
    edit(cfg);
    return cfg;
  };
  EXPECT_THROW(broken([](RunConfig& c) { c.a = c.b = 2; }).validate(), ConfigError);
  EXPECT_THROW(broken([](RunConfig& c) { c.depth = 2; }).validate(), ConfigError);
  EXPECT_THROW(broken([](RunConfig& c) { c.tolerance = 0.5; }).validate(), ConfigError);
  EXPECT_THROW(broken([](RunConfig& c) { c.tolerance = 0; }).validate(), ConfigError);
  EXPECT_THROW(broken([](RunConfig& c) { c.bits = 32; }).validate(), ConfigError);
  EXPECT_THROW(broken([](RunConfig& c) { c.slope = "const:0"; }).validate(), ConfigError);
}

TEST(Config, Formats) {
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_format("both"), OutputFormat::Both);
  EXPECT_EQ(format_name(OutputFormat::Csv), "csv");
  EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(Config, ReadFile) {
  const std::string path = ::testing::TempDir() + "sturmian_cfg.txt";
  std::ofstream(path) << "slope = const:2\n";
  EXPECT_EQ(read_config_file(path).at("slope"), "const:2");
  EXPECT_THROW(read_config_file(path + ".missing"), ConfigError);
}

TEST(Csv, HeaderAndErrorColumns) {
  const CsvRow r = csv_row("3", "w2star", Bracket{1.0, 2.0}, NAN);
  EXPECT_DOUBLE_EQ(r.estimate, 1.5);
  EXPECT_DOUBLE_EQ(r.err_lo, 0.5);
  EXPECT_DOUBLE_EQ(r.err_hi, 0.5);
  EXPECT_EQ(render_csv({r}), "index,quantity,estimate,err_lo,err_hi,target\n3,w2star,1.5,0.5,0.5,\n");
}

TEST(Reports, SchemaAndDeterminism) {
  RunConfig cfg;
  cfg.depth = 10;
  cfg.lmax = 12;
  for (auto build : {word_report, approx_report, exponents_report, spectrum_report, beta_report}) {
    const Report a = build(cfg);
    const Report b = build(cfg);
    EXPECT_EQ(a.json.at("schema_version"), 1);
    EXPECT_EQ(render_json(a.json), render_json(b.json));
    EXPECT_EQ(render_csv(a.csv), render_csv(b.csv));
    EXPECT_FALSE(a.csv.empty());
  }
}

TEST(Reports, SpectrumRadicals) {
  RunConfig cfg;
  cfg.rows = 3;
  const Report r = spectrum_report(cfg);
  const std::string text = render_json(r.json);
  for (const char* s : {"(3+√5)/2", "1+√2", "(4+√10)/3", "2-√2", "(-2+√10)/2"}) {
    EXPECT_NE(text.find(s), std::string::npos) << s;
  }
}

TEST(Reports, ExponentTargets) {
  RunConfig cfg;
  cfg.slope = "const:5";
  const Report r = exponents_report(cfg);
  EXPECT_NE(render_json(r.json).find("6+√29"), std::string::npos);
}
