#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace pk {

// One verification result. JSON shape:
// {"lemma":..,"which":..,"samples":..,"seed":..,"max_rel_err":..,"tolerance":..,"pass":..}
struct Report {
  std::string lemma;
  std::string which;  // "U", "V", or "" when not applicable
  int samples = 0;
  uint64_t seed = 0;
  double max_rel_err = 0;
  double tolerance = 0;
  bool pass = false;
};

std::string report_to_json(const Report& r);
std::string reports_to_json(const std::vector<Report>& rs);

}  // namespace pk
