#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace s1web::report {

struct CheckRecord {
  std::string name;
  bool pass = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  long samples = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  double runtime_seconds = 0.0;
};

struct VerificationReport {
  std::string version = "1.0.0";
  int schema_version = 1;
  nlohmann::ordered_json config_echo;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;  // formula discrepancies and conventions
  std::string timestamp;

  bool all_pass() const;
  size_t failed_count() const;

  nlohmann::ordered_json to_json() const;
  void write(const std::string& path) const;

  /// Serialization with the timestamp removed, for determinism comparisons.
  std::string canonical_string() const;
};

}  // namespace s1web::report
