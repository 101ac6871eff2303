#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "todaslice/report.hpp"
#include "todaslice/suites.hpp"

using namespace todaslice;

namespace {

SuiteReport sample_report() {
  SuiteReport r;
  r.suite_id = "toda-orbits";
  r.anchor = "orbit labels";
  r.type = "A";
  r.rank = 2;
  r.seed = 18446744073709551615ull;
  r.samples = 200;
  r.tol = 1e-9;
  r.pass = true;
  r.metrics = {{"a", 0.1}, {"b", 1.0 / 3.0}, {"tiny", 4.9e-324}};
  return r;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  SuiteReport r = sample_report();
  SuiteReport t = r;
  t.pass = false;
  t.duration = 0.25;
  const std::vector<SuiteReport> v{r, t};
  const std::string text = to_json(v);
  EXPECT_EQ(reports_from_json(text), v);
  EXPECT_EQ(to_json(reports_from_json(text)), text);
}

TEST(Report, Schema) {
  const auto j = nlohmann::json::parse(to_json(sample_report()));
  EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
  EXPECT_EQ(j.at("pass"), true);
  ASSERT_EQ(j.at("reports").size(), 1u);
  const auto& r = j.at("reports")[0];
  for (const char* key : {"suite_id", "anchor", "params", "pass", "metrics"})
    EXPECT_TRUE(r.contains(key)) << key;
  EXPECT_FALSE(r.contains("duration"));
  for (const char* key : {"type", "rank", "seed", "samples", "tol"})
    EXPECT_TRUE(r.at("params").contains(key)) << key;
  SuiteReport f = sample_report();
  f.pass = false;
  EXPECT_EQ(nlohmann::json::parse(to_json(std::vector{sample_report(), f})).at("pass"), false);
}

TEST(Report, RejectsMalformedInput) {
  EXPECT_ANY_THROW(reports_from_json("{"));
  EXPECT_ANY_THROW(reports_from_json(R"({"schema_version": 99, "pass": true, "reports": []})"));
}

TEST(Report, FormatComplex) {
  EXPECT_EQ(format_complex({0.5, 0.0}), "0.5");
  EXPECT_EQ(format_complex({1.0, -2.0}), "1-2j");
  EXPECT_EQ(format_complex({0.1, 0.0}), "0.10000000000000001");
}
