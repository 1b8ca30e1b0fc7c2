#ifndef WENODP_RUN_DRIVER_HPP_
#define WENODP_RUN_DRIVER_HPP_
//! \file run_driver.hpp
//! \brief Run orchestration behind the CLI: single runs, convergence sweeps,
//!        CSV emission and the run manifest.

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "wenodp/diagnostics.hpp"

namespace wenodp {

/// Exit codes of run(): 0 success, 2 configuration error, 3 numerical
/// failure, 4 I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

struct RunConfig {
  std::string problem;
  std::string scheme = "cweno-dz";
  std::string convection = "js";
  int n = 0;               // 0 keeps the problem default
  std::vector<int> sweep;  // strictly increasing; empty for a single run
  double m = 0.0;          // PME exponent (barenblatt only); 0 keeps default
  double cfl = 0.4;
  double tfinal = -1.0;    // < 0 keeps the problem default
  double eps = 0.0;        // 0 keeps the scheme default
  int power = 1;
  std::string out_dir = "out";
  int workers = 1;
};

/// Runs per the config and emits (a) a solution dump per run, (b) an error
/// table for sweeps, (c) a manifest capturing every parameter. Progress and
/// table text go to `log`.
int run(const RunConfig& config, std::ostream& log);

/// Outcome of one grid level, exposed for tests and the acceptance suite.
struct LevelResult {
  ErrorReport report;
  std::vector<double> solution;  // presentation field
};

/// Runs one grid level without touching the filesystem.
LevelResult run_level(const RunConfig& config, int cells);

void write_manifest(const RunConfig& config, const std::filesystem::path& file);
RunConfig read_manifest(const std::filesystem::path& file);

void write_error_table(const std::vector<ErrorReport>& rows,
                       const std::filesystem::path& file);

/// CSV dump with 17 significant digits; header `x,u` in 1D and `x,y,u`
/// (row-major by y, then x) in 2D.
void write_solution_csv(const std::vector<double>& grid_x,
                        const std::vector<double>& grid_y,
                        const std::vector<double>& field,
                        const std::filesystem::path& file);

std::string solution_file_name(const RunConfig& config, int cells);

}  // namespace wenodp

#endif  // WENODP_RUN_DRIVER_HPP_
