#include "s1web/report.hpp"

#include <fstream>
#include <stdexcept>

namespace s1web::report {

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

size_t VerificationReport::failed_count() const {
  size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["report"] = "s1web verification";
  j["version"] = version;
  j["schema_version"] = schema_version;
  j["config"] = config_echo;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["max_residual"] = c.max_residual;
    jc["tolerance"] = c.tolerance;
    jc["samples"] = c.samples;
    if (!c.witnesses.empty()) jc["witnesses"] = c.witnesses;
    if (!c.notes.empty()) jc["notes"] = c.notes;
    jc["runtime_seconds"] = c.runtime_seconds;
    j["checks"].push_back(jc);
  }
  j["notes"] = notes;
  j["summary"] = {{"pass", all_pass()},
                  {"total_checks", checks.size()},
                  {"failed", failed_count()}};
  j["timestamp"] = timestamp;
  return j;
}

void VerificationReport::write(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write report to " + path);
  os << to_json().dump(2) << "\n";
}

std::string VerificationReport::canonical_string() const {
  nlohmann::ordered_json j = to_json();
  j.erase("timestamp");
  return j.dump(2);
}

}  // namespace s1web::report
