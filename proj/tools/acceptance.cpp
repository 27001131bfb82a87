// Acceptance run: one PASS/FAIL line per criterion on stdout.
//
// Exit status is 0 when the failing criteria are exactly the --known-red set,
// so a criterion that cannot be met stays visibly red without breaking ctest.

#include "sturmian/acceptance.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

using namespace sturmian;

int main(int argc, char** argv) {
  CLI::App app{"Sturmian continued fraction acceptance run"};
  std::vector<int> known_red;
  std::string json_out;
  app.add_option("--known-red", known_red, "criteria expected to fail")->delimiter(',');
  app.add_option("--json", json_out, "write the full acceptance report here");
  CLI11_PARSE(app, argc, argv);

  const AcceptanceConfig cfg;
  const std::vector<CriterionResult> results = run_acceptance(cfg);
  std::set<int> failed;
  for (const auto& r : results) {
    std::cout << summary_line(r) << std::endl;
    if (!r.passed) failed.insert(r.id);
  }
  if (!json_out.empty()) std::ofstream(json_out) << render_json(acceptance_json(cfg, results));

  const std::set<int> expected(known_red.begin(), known_red.end());
  if (failed == expected) {
    if (!expected.empty()) std::cout << "failures match the known-red set" << std::endl;
    return 0;
  }
  for (int id : failed) {
    if (!expected.count(id)) std::cout << "unexpected failure: criterion " << id << std::endl;
  }
  for (int id : expected) {
    if (!failed.count(id)) std::cout << "known-red criterion " << id << " now passes; update the list" << std::endl;
  }
  return 1;
}
