// xychain-cli: figure data as CSV, built-in check suites, and two small
// calculators (W-generation times, critical temperature).
//
// Exit status: 0 success, 1 a check failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xychain/checks.hpp"
#include "xychain/figures.hpp"
#include "xychain/thermal.hpp"
#include "xychain/wstate.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct FigureArgs {
  std::string id;
  std::string out;
  std::string config;
  std::size_t grid = 0;
  std::vector<std::string> overrides;
};

int run_figure_command(const FigureArgs& a) {
  using namespace xychain;
  FigureJob job{parse_figure_id(a.id), {}};

  // defaults < config file < command line
  FigureParams base = default_params(job.figure_id);
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw Error(Errc::BadOverride, "cannot open config file " + a.config);
    for (const auto& line : read_config(in)) apply_override(base, line);
  }
  if (a.grid != 0) job.overrides.push_back("grid=" + std::to_string(a.grid));
  job.overrides.insert(job.overrides.end(), a.overrides.begin(), a.overrides.end());

  FigureSummary sum;
  if (a.out.empty()) {
    sum = run_figure(job, std::cout, base);
  } else {
    // render fully before touching the file so a bad override leaves nothing behind
    std::ostringstream csv;
    sum = run_figure(job, csv, base);
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw Error(Errc::BadOverride, "cannot write " + a.out);
    file << csv.str();
  }
  for (const auto& line : sum.lines) std::cerr << figure_name(job.figure_id) << ": " << line << '\n';
  return 0;
}

int run_check_command(const std::string& suite_name) {
  const auto suite = xychain::parse_suite(suite_name);
  const auto results = xychain::run_checks(*suite);
  xychain::write_check_report(std::cout, results);
  for (const auto& r : results)
    if (!r.passed) return kExitCheckFailed;
  return 0;
}

int run_crossings_command(int n, double t_max, double tol, double J) {
  using namespace xychain;
  const ChainSpec spec{n, J, 0.0, 0.0};
  const auto rep = find_crossings(spec, t_max, tol);
  std::cout << "t,fidelity,spread\n";
  for (std::size_t k = 0; k < rep.times.size(); ++k)
    std::cout << detail::fmt(rep.times[k]) << ',' << detail::fmt(rep.fidelity_at_times[k]) << ','
              << detail::fmt(rep.max_probability_spread_at_times[k]) << '\n';
  std::cerr << "crossings: " << rep.times.size() << " in (0, " << detail::fmt(t_max) << "]; min spread "
            << detail::fmt(rep.min_spread) << " at t=" << detail::fmt(rep.min_spread_time) << '\n';
  return 0;
}

int run_tc_command(double gamma, double J) {
  using namespace xychain;
  std::cout << "gamma,J,T_c,residual\n";
  try {
    const auto tc = critical_temperature_anisotropic(J, gamma);
    std::cout << detail::fmt(gamma) << ',' << detail::fmt(J) << ',' << detail::fmt(tc.value) << ','
              << detail::fmt(tc.residual) << '\n';
  } catch (const Error& e) {
    if (e.code() != Errc::NoRoot) throw;
    // the Ising limit has no finite critical temperature; that is an answer, not a failure
    std::cout << detail::fmt(gamma) << ',' << detail::fmt(J) << ",none,\n";
    std::cerr << "tc: " << e.what() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heisenberg XY chain toolkit: W-state generation and thermal entanglement"};
  app.require_subcommand(1);

  FigureArgs fig;
  auto* figure = app.add_subcommand("figure", "write the data behind a figure as CSV");
  figure->add_option("fig_id", fig.id, "fig1 .. fig6")->required();
  figure->add_option("--out", fig.out, "output file (default stdout)");
  figure->add_option("--grid", fig.grid, "number of grid points")->check(CLI::Range(std::size_t{2}, xychain::kMaxGrid));
  figure->add_option("--override", fig.overrides, "key=value, repeatable (n, j, gamma, b, temps, tmin, tmax, bmin, bmax, grid)");
  figure->add_option("--config", fig.config, "file of key=value lines");

  std::string suite;
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite, "evolution | wstate | thermal | all")
      ->required()
      ->check(CLI::IsMember({"evolution", "wstate", "thermal", "all"}));

  int cross_n = 3;
  double cross_tmax = 0.0, cross_tol = xychain::kCrossingTol, cross_j = 1.0;
  auto* crossings = app.add_subcommand("crossings", "times where all one-excitation probabilities coincide");
  crossings->add_option("--n", cross_n, "number of sites")->required()->check(CLI::Range(2, 12));
  crossings->add_option("--tmax", cross_tmax, "end of the search window")->required()->check(CLI::PositiveNumber);
  crossings->add_option("--tol", cross_tol, "tolerance on max P - min P")->check(CLI::PositiveNumber);
  crossings->add_option("--j", cross_j, "coupling J");

  double tc_gamma = 0.0, tc_j = 1.0;
  auto* tc = app.add_subcommand("tc", "critical temperature of the two-qubit XY model");
  tc->add_option("--gamma", tc_gamma, "anisotropy in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  tc->add_option("--j", tc_j, "coupling J");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*figure) return run_figure_command(fig);
    if (*check) return run_check_command(suite);
    if (*crossings) return run_crossings_command(cross_n, cross_tmax, cross_tol, cross_j);
    if (*tc) return run_tc_command(tc_gamma, tc_j);
  } catch (const xychain::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
