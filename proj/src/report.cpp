#include "phasekit/report.hpp"

#include <json.hpp>

namespace pk {

using nlohmann::json;

static json to_j(const Report& r) {
  return json{{"lemma", r.lemma},   {"which", r.which},
              {"samples", r.samples}, {"seed", r.seed},
              {"max_rel_err", r.max_rel_err}, {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

std::string report_to_json(const Report& r) { return to_j(r).dump(2); }

std::string reports_to_json(const std::vector<Report>& rs) {
  json arr = json::array();
  for (auto& r : rs) arr.push_back(to_j(r));
  return arr.dump(2);
}

}  // namespace pk
