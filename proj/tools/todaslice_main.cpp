// Command-line front end: verification suites and Toda trajectories.
//
//   todaslice run [--suite ID|all] [--type A] [--rank 2] [--seed 1]
//                 [--samples N] [--tol T] [--out json|PATH] [--timing]
//   todaslice trajectory [--type A] [--rank 2] [--seed 1] [--hamiltonian 1]
//                 [--t-end 1] [--steps 1000] [--out csv|PATH]
//   todaslice list
//
// Exit codes: 0 pass, 1 verification failure, 2 configuration/usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "todaslice/errors.hpp"
#include "todaslice/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Common {
  std::string type = "A";
  int rank = 2;
  std::uint64_t seed = 1;
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--type", c.type, "Cartan type (A; B/C/D rejected)");
  app->add_option("--rank", c.rank, "Rank r")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "Root seed");
}

// "--out json" / "--out csv" select the format on stdout; anything else is a
// file path.
void write_output(const std::string& out, const std::string& format,
                  const std::string& text) {
  if (out.empty() || out == format) {
    std::cout << text;
    return;
  }
  if (out == "json" || out == "csv")
    throw todaslice::ConfigurationError("--out " + out +
                                        " is not valid here (" + format + ")");
  std::ofstream f(out, std::ios::binary);
  if (!f) throw todaslice::ConfigurationError("cannot open " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toda lattice / Slodowy slice / Hessenberg verification"};
  app.require_subcommand(1);

  Common run_common;
  std::string suite = "all";
  int samples = 0;
  double tol = 0.0;
  bool timing = false;
  CLI::App* run = app.add_subcommand("run", "Run verification suites");
  add_common(run, run_common);
  run->add_option("--suite", suite, "Suite id or 'all'");
  run->add_option("--samples", samples, "Sample count (0: suite default)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--tol", tol, "Primary tolerance (0: suite default)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--out", run_common.out, "json or output path");
  run->add_flag("--timing", timing, "Record wall time in the report");

  Common traj_common;
  int hamiltonian = 1;
  double t_end = 1.0;
  int steps = 1000;
  CLI::App* traj = app.add_subcommand("trajectory", "Emit a Toda trajectory");
  add_common(traj, traj_common);
  traj->add_option("--hamiltonian", hamiltonian, "sigma index, 1-based");
  traj->add_option("--t-end", t_end, "Final time");
  traj->add_option("--steps", steps, "RK4 steps")->check(CLI::NonNegativeNumber);
  traj->add_option("--out", traj_common.out, "csv or output path");

  CLI::App* list = app.add_subcommand("list", "List suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*list) {
      for (const auto& info : todaslice::suite_registry())
        std::cout << info.id << "\t" << info.anchor << "\n";
      return kExitPass;
    }
    if (*run) {
      todaslice::SuiteParams p;
      p.type = todaslice::parse_cartan_type(run_common.type);
      p.rank = run_common.rank;
      p.seed = run_common.seed;
      p.samples = samples;
      p.tol = tol;
      p.timing = timing;
      std::vector<todaslice::SuiteReport> reports;
      int code = kExitPass;
      if (suite == "all") {
        const auto result = todaslice::run_all(p);
        reports = result.reports;
        code = result.exit_code;
      } else {
        reports.push_back(todaslice::run_suite(suite, p));
        code = reports.back().pass ? kExitPass : kExitFail;
      }
      write_output(run_common.out, "json", todaslice::to_json(reports));
      return code;
    }
    todaslice::TrajectoryParams p;
    p.type = todaslice::parse_cartan_type(traj_common.type);
    p.rank = traj_common.rank;
    p.seed = traj_common.seed;
    p.hamiltonian = hamiltonian - 1;
    p.t_end = t_end;
    p.steps = steps;
    std::ostringstream os;
    const bool ok = todaslice::emit_trajectory(p, os);
    write_output(traj_common.out, "csv", os.str());
    return ok ? kExitPass : kExitFail;
  } catch (const todaslice::ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
