#pragma once
// Named verification suites shared by the CLI and the acceptance tests.
#include <string>
#include <vector>

#include "phasekit/report.hpp"

namespace pk {

struct SuiteConfig {
  double hbar = 1.0;
  int n = 64;
  double L = 8.0;
  int samples = 40;
  uint64_t seed = 20260823ULL;
  double tolerance_scale = 1.0;
};

std::vector<std::string> suite_names();  // excludes "all"

// Runs one suite ("all" runs every suite in order). Throws on unknown names.
std::vector<Report> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace pk
