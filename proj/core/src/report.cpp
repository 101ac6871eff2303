#include "todaslice/report.hpp"

#include <cmath>

#include <json.hpp>

#include "todaslice/errors.hpp"

namespace todaslice {

namespace {

using nlohmann::ordered_json;

ordered_json report_json(const SuiteReport& r) {
  ordered_json j;
  j["suite_id"] = r.suite_id;
  j["anchor"] = r.anchor;
  j["params"] = {{"type", r.type},
                 {"rank", r.rank},
                 {"seed", r.seed},
                 {"samples", r.samples},
                 {"tol", r.tol}};
  j["pass"] = r.pass;
  ordered_json m = ordered_json::object();
  for (const auto& [k, v] : r.metrics) {
    if (std::isfinite(v))
      m[k] = v;
    else
      m[k] = std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  }
  j["metrics"] = m;
  if (r.duration) j["duration"] = *r.duration;
  return j;
}

double metric_value(const ordered_json& v) {
  if (v.is_number()) return v.get<double>();
  const std::string s = v.get<std::string>();
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  return NAN;
}

SuiteReport report_from(const ordered_json& j) {
  SuiteReport r;
  r.suite_id = j.at("suite_id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  const ordered_json& p = j.at("params");
  r.type = p.at("type").get<std::string>();
  r.rank = p.at("rank").get<int>();
  r.seed = p.at("seed").get<unsigned long long>();
  r.samples = p.at("samples").get<int>();
  r.tol = p.at("tol").get<double>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& [k, v] : j.at("metrics").items())
    r.metrics[k] = metric_value(v);
  if (j.contains("duration")) r.duration = j.at("duration").get<double>();
  return r;
}

}  // namespace

std::string to_json(const std::vector<SuiteReport>& reports, int indent) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  bool pass = true;
  for (const SuiteReport& r : reports) pass = pass && r.pass;
  j["pass"] = pass;
  j["reports"] = ordered_json::array();
  for (const SuiteReport& r : reports) j["reports"].push_back(report_json(r));
  return j.dump(indent) + "\n";
}

std::string to_json(const SuiteReport& report, int indent) {
  return to_json(std::vector<SuiteReport>{report}, indent);
}

std::vector<SuiteReport> reports_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigurationError(std::string("malformed report: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion)
      throw ConfigurationError("unsupported report schema version");
    std::vector<SuiteReport> out;
    for (const auto& r : j.at("reports")) out.push_back(report_from(r));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace todaslice
