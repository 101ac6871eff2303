#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "todaslice/errors.hpp"
#include "todaslice/suites.hpp"

using namespace todaslice;

TEST(Suites, Registry) {
  const auto& reg = suite_registry();
  EXPECT_EQ(reg.size(), 12u);
  std::set<std::string> ids;
  for (const SuiteInfo& s : reg) {
    ids.insert(s.id);
    EXPECT_GT(s.default_samples, 0);
    EXPECT_GT(s.default_tol, 0.0);
    EXPECT_FALSE(s.anchor.empty());
  }
  EXPECT_EQ(ids.size(), reg.size());
  EXPECT_THROW(suite_info("nope"), UsageError);
}

TEST(Suites, DefaultsAndOverrides) {
  SuiteParams p;
  p.rank = 1;
  const SuiteReport a = run_suite("toda-orbits", p);
  EXPECT_EQ(a.samples, 200);
  EXPECT_EQ(a.tol, 1e-9);
  EXPECT_TRUE(a.pass);
  EXPECT_FALSE(a.duration.has_value());
  p.samples = 10;
  p.tol = 1e-7;
  p.timing = true;
  const SuiteReport b = run_suite("toda-orbits", p);
  EXPECT_EQ(b.samples, 10);
  EXPECT_EQ(b.tol, 1e-7);
  EXPECT_TRUE(b.duration.has_value());
}

TEST(Suites, SameSeedSameReport) {
  SuiteParams p;
  p.rank = 2;
  p.seed = 99;
  p.samples = 5;
  EXPECT_EQ(run_suite("kostant-roundtrip", p), run_suite("kostant-roundtrip", p));
  SuiteParams q = p;
  q.seed = 100;
  EXPECT_NE(run_suite("kostant-roundtrip", p).metrics,
            run_suite("kostant-roundtrip", q).metrics);
}

TEST(Suites, ConfigurationErrors) {
  SuiteParams p;
  p.rank = 2;
  p.type = CartanType::B;
  EXPECT_THROW(run_suite("mf-commute", p), ConfigurationError);
  p.type = CartanType::A;
  p.samples = -1;
  EXPECT_THROW(run_suite("mf-commute", p), ConfigurationError);
  p.samples = 0;
  p.tol = -1;
  EXPECT_THROW(run_suite("mf-commute", p), ConfigurationError);
  p.rank = 0;
  p.tol = 0;
  EXPECT_THROW(run_suite("mf-commute", p), ConfigurationError);
}

TEST(Suites, ImpossibleToleranceFails) {
  SuiteParams p;
  p.rank = 1;
  p.tol = 1e-300;
  EXPECT_FALSE(run_suite("toda-flow", p).pass);
}

TEST(Suites, TrajectoryCsv) {
  TrajectoryParams t;
  t.rank = 2;
  t.steps = 20;
  std::ostringstream a, b;
  EXPECT_TRUE(emit_trajectory(t, a));
  EXPECT_TRUE(emit_trajectory(t, b));
  EXPECT_EQ(a.str(), b.str());
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,a_1,a_2,c_1,c_2,sigma_1,sigma_2");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 21);
  t.hamiltonian = 2;
  std::ostringstream c;
  EXPECT_THROW(emit_trajectory(t, c), ConfigurationError);
  t.hamiltonian = -1;
  EXPECT_THROW(emit_trajectory(t, c), ConfigurationError);
}

TEST(Suites, TrajectorySigmaColumnsAreConstant) {
  TrajectoryParams t;
  t.rank = 2;
  t.hamiltonian = 1;
  t.steps = 1000;
  std::ostringstream out;
  ASSERT_TRUE(emit_trajectory(t, out));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  std::vector<double> first;
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<double> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(std::stod(cell));
    ASSERT_EQ(cells.size(), 7u);
    const std::vector<double> sig(cells.begin() + 5, cells.end());
    if (first.empty()) first = sig;
    for (std::size_t k = 0; k < sig.size(); ++k)
      EXPECT_LE(std::abs(sig[k] - first[k]), 1e-6 * std::abs(first[k]));
    ++rows;
  }
  EXPECT_EQ(rows, 1001);

  t.steps = 0;
  std::ostringstream single;
  ASSERT_TRUE(emit_trajectory(t, single));
  std::istringstream s(single.str());
  rows = 0;
  while (std::getline(s, line)) ++rows;
  EXPECT_EQ(rows, 2);
}
