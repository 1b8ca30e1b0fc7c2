// Command-line front end: run one benchmark problem or a convergence sweep
// and emit solution dumps, error tables and a rerunnable manifest.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wenodp/problem.hpp"
#include "wenodp/run_driver.hpp"
#include "wenodp/scheme.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sixth-order WENO solver for degenerate parabolic and "
               "convection-diffusion equations"};
  app.footer("Exit codes: 0 success, 2 config error, 3 numerical failure, 4 I/O error.");

  wenodp::RunConfig flags;
  std::string manifest_path;

  std::string problems;
  for (const auto& n : wenodp::problem_names()) problems += n + " ";

  auto* opt_problem =
      app.add_option("--problem", flags.problem, "Benchmark problem: " + problems);
  auto* opt_scheme = app.add_option("--scheme", flags.scheme,
                                    "Diffusion scheme: lsz | mweno | cweno-dz")
                         ->default_str(flags.scheme);
  auto* opt_convection =
      app.add_option("--convection", flags.convection, "Convection scheme: js | m")
          ->default_str(flags.convection);
  auto* opt_n = app.add_option("--n", flags.n, "Cells per axis (0 = problem default)");
  auto* opt_sweep = app.add_option("--sweep", flags.sweep,
                                   "Comma-separated cell counts for a convergence sweep")
                        ->delimiter(',');
  auto* opt_m = app.add_option("--m", flags.m, "PME exponent m (barenblatt)");
  auto* opt_cfl = app.add_option("--cfl", flags.cfl, "CFL number")->default_str("0.4");
  auto* opt_tfinal =
      app.add_option("--tfinal", flags.tfinal, "Final time override (< 0 = default)");
  auto* opt_eps =
      app.add_option("--eps", flags.eps, "Weight epsilon override (0 = scheme default)");
  auto* opt_p = app.add_option("--p", flags.power, "Z-weight exponent p")->default_str("1");
  auto* opt_out = app.add_option("--out", flags.out_dir, "Output directory")
                      ->default_str(flags.out_dir);
  auto* opt_workers =
      app.add_option("--workers", flags.workers, "Worker threads for 2D sweeps")
          ->default_str("1");
  app.add_option("--manifest", manifest_path,
                 "Load a run configuration (manifest JSON); explicit flags win");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wenodp::kExitConfig;
  }

  wenodp::RunConfig config;
  if (!manifest_path.empty()) {
    try {
      config = wenodp::read_manifest(manifest_path);
    } catch (const std::ios_base::failure& e) {
      std::cerr << "i/o error: " << e.what() << '\n';
      return wenodp::kExitIo;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "config error: bad manifest: " << e.what() << '\n';
      return wenodp::kExitConfig;
    }
  }
  if (opt_problem->count()) config.problem = flags.problem;
  if (opt_scheme->count()) config.scheme = flags.scheme;
  if (opt_convection->count()) config.convection = flags.convection;
  if (opt_n->count()) config.n = flags.n;
  if (opt_sweep->count()) config.sweep = flags.sweep;
  if (opt_m->count()) config.m = flags.m;
  if (opt_cfl->count()) config.cfl = flags.cfl;
  if (opt_tfinal->count()) config.tfinal = flags.tfinal;
  if (opt_eps->count()) config.eps = flags.eps;
  if (opt_p->count()) config.power = flags.power;
  if (opt_out->count()) config.out_dir = flags.out_dir;
  if (opt_workers->count()) config.workers = flags.workers;
  if (manifest_path.empty()) {
    // no manifest: take everything from the flags, defaults included
    config = flags;
  }

  return wenodp::run(config, std::cout);
}
