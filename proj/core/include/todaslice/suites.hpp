#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "todaslice/report.hpp"
#include "todaslice/rootsys.hpp"

namespace todaslice {

struct SuiteParams {
  CartanType type = CartanType::A;
  int rank = 2;
  std::uint64_t seed = 1;
  int samples = 0;   // 0: suite default
  double tol = 0.0;  // 0: suite default (the suite's primary threshold)
  bool timing = false;
};

struct SuiteInfo {
  std::string id;
  std::string anchor;
  int default_samples;
  double default_tol;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& suite_info(std::string_view id);  // throws UsageError

// Each suite draws from Rng(Rng::derive(seed, id)), so suites are
// independent of each other and of run order.
SuiteReport run_suite(std::string_view id, const SuiteParams& params);

struct RunAllResult {
  std::vector<SuiteReport> reports;
  int exit_code = 0;  // 0 iff every suite passed, else 1
};
RunAllResult run_all(const SuiteParams& params);

struct TrajectoryParams {
  CartanType type = CartanType::A;
  int rank = 2;
  std::uint64_t seed = 1;
  int hamiltonian = 0;  // 0-based sigma index
  double t_end = 1.0;
  int steps = 1000;
};

// CSV with header t,a_1..a_r,c_1..c_r,sigma_1..sigma_r.  Returns false when
// the flow left O_Toda; the partial rows are followed by "ABORT,<t>".
bool emit_trajectory(const TrajectoryParams& params, std::ostream& out);

// "%.17g" for real values, "re+imj" when the imaginary part is not negligible.
std::string format_complex(std::complex<double> z);

}  // namespace todaslice
