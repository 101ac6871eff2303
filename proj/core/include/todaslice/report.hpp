#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace todaslice {

inline constexpr int kReportSchemaVersion = 1;

struct SuiteReport {
  std::string suite_id;
  std::string anchor;  // what the suite verifies
  std::string type;
  int rank = 0;
  unsigned long long seed = 0;
  int samples = 0;
  double tol = 0.0;
  bool pass = false;
  std::map<std::string, double> metrics;
  // Wall time; only recorded on request so reports stay byte-identical.
  std::optional<double> duration;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// {"schema_version": 1, "pass": ..., "reports": [...]}
std::string to_json(const std::vector<SuiteReport>& reports, int indent = 2);
std::string to_json(const SuiteReport& report, int indent = 2);
std::vector<SuiteReport> reports_from_json(std::string_view text);

}  // namespace todaslice
