#include "wenodp/run_driver.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "wenodp/operators.hpp"
#include "wenodp/problem.hpp"
#include "wenodp/scheme.hpp"
#include "wenodp/time_integrator.hpp"

namespace wenodp {

namespace {

using json = nlohmann::json;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_order(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *v);
  return buf;
}

SchemeConfig scheme_from_config(const RunConfig& rc) {
  SchemeConfig sc = SchemeConfig::for_scheme(diffusion_scheme_from_string(rc.scheme),
                                             convection_scheme_from_string(rc.convection));
  if (rc.eps != 0.0) {
    if (!(rc.eps > 0.0)) throw std::invalid_argument("eps must be positive");
    sc.eps = rc.eps;
  }
  if (rc.power < 1) throw std::invalid_argument("p must be >= 1");
  sc.power = rc.power;
  if (!(rc.cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  sc.cfl = rc.cfl;
  return sc;
}

void validate(const RunConfig& rc) {
  if (rc.problem.empty()) throw std::invalid_argument("no problem selected");
  if (!rc.sweep.empty()) {
    for (std::size_t k = 0; k < rc.sweep.size(); ++k) {
      if (rc.sweep[k] < 6) throw std::invalid_argument("sweep sizes must be >= 6");
      if (k > 0 && rc.sweep[k] <= rc.sweep[k - 1])
        throw std::invalid_argument("sweep sizes must be strictly increasing");
    }
  }
  if (rc.n != 0 && rc.n < 6) throw std::invalid_argument("grid size must be >= 6");
  if (rc.workers < 1) throw std::invalid_argument("workers must be >= 1");
  scheme_from_config(rc);       // validates scheme names, eps, p, cfl
  make_problem(rc.problem, rc.m);  // validates problem name and m
}

template <typename Sys>
LevelResult run_system(Sys& sys, const RunConfig& rc) {
  TimeLoopConfig loop;
  loop.cfl = rc.cfl;
  loop.final_time = rc.tfinal >= 0.0 ? rc.tfinal : sys.problem().final_time;
  RunResult rr = advance(sys, sys.initial_state(), loop);

  LevelResult level;
  level.solution = sys.present(rr.state);
  level.report.n = sys.problem().grid.x.cells;
  level.report.min_value = min_value(rr.state);
  level.report.runtime_seconds = rr.runtime_seconds;
  level.report.steps = rr.steps;
  if (sys.problem().has_exact())
    level.report.norms = error_norms(level.solution, sys.exact_at(loop.final_time));
  return level;
}

}  // namespace

LevelResult run_level(const RunConfig& rc, int cells) {
  ProblemDefinition pd = make_problem(rc.problem, rc.m);
  if (cells > 0) pd.resize(cells, cells);
  const SchemeConfig sc = scheme_from_config(rc);
  if (pd.dimension == 1) {
    System1D sys(std::move(pd), sc);
    return run_system(sys, rc);
  }
  System2D sys(std::move(pd), sc, rc.workers);
  return run_system(sys, rc);
}

std::string solution_file_name(const RunConfig& rc, int cells) {
  ProblemDefinition pd = make_problem(rc.problem, rc.m);
  const int n = cells > 0 ? cells : pd.grid.x.cells;
  std::string name = rc.problem + "_" + rc.scheme + "_N" + std::to_string(n);
  if (pd.dimension == 2) name += "x" + std::to_string(n);
  return name + ".csv";
}

void write_solution_csv(const std::vector<double>& grid_x,
                        const std::vector<double>& grid_y,
                        const std::vector<double>& field,
                        const std::filesystem::path& file) {
  std::ofstream os(file);
  if (!os) throw std::ios_base::failure("cannot open " + file.string());
  if (grid_y.empty()) {
    if (field.size() != grid_x.size())
      throw std::invalid_argument("write_solution_csv: field/grid size mismatch");
    os << "x,u\n";
    for (std::size_t i = 0; i < grid_x.size(); ++i)
      os << fmt17(grid_x[i]) << ',' << fmt17(field[i]) << '\n';
  } else {
    if (field.size() != grid_x.size() * grid_y.size())
      throw std::invalid_argument("write_solution_csv: field/grid size mismatch");
    os << "x,y,u\n";
    for (std::size_t j = 0; j < grid_y.size(); ++j)
      for (std::size_t i = 0; i < grid_x.size(); ++i)
        os << fmt17(grid_x[i]) << ',' << fmt17(grid_y[j]) << ','
           << fmt17(field[j * grid_x.size() + i]) << '\n';
  }
  if (!os) throw std::ios_base::failure("failed writing " + file.string());
}

void write_error_table(const std::vector<ErrorReport>& rows,
                       const std::filesystem::path& file) {
  std::ofstream os(file);
  if (!os) throw std::ios_base::failure("cannot open " + file.string());
  os << "N,L1,order_L1,L2,order_L2,Linf,order_Linf,min,runtime_s\n";
  for (const auto& r : rows) {
    os << r.n << ',';
    if (r.norms)
      os << fmt17(r.norms->l1) << ',' << fmt_order(r.order_l1) << ','
         << fmt17(r.norms->l2) << ',' << fmt_order(r.order_l2) << ','
         << fmt17(r.norms->linf) << ',' << fmt_order(r.order_linf) << ',';
    else
      os << ",,,,,,";
    char rt[32];
    std::snprintf(rt, sizeof(rt), "%.3f", r.runtime_seconds);
    os << fmt17(r.min_value) << ',' << rt << '\n';
  }
  if (!os) throw std::ios_base::failure("failed writing " + file.string());
}

void write_manifest(const RunConfig& rc, const std::filesystem::path& file) {
  json j;
  j["problem"] = rc.problem;
  j["scheme"] = rc.scheme;
  j["convection"] = rc.convection;
  j["n"] = rc.n;
  j["sweep"] = rc.sweep;
  j["m"] = rc.m;
  j["cfl"] = rc.cfl;
  j["tfinal"] = rc.tfinal;
  j["eps"] = rc.eps;
  j["p"] = rc.power;
  j["out"] = rc.out_dir;
  j["workers"] = rc.workers;
  j["kernel_version"] = kKernelVersion;
  std::ofstream os(file);
  if (!os) throw std::ios_base::failure("cannot open " + file.string());
  os << j.dump(2) << '\n';
  if (!os) throw std::ios_base::failure("failed writing " + file.string());
}

RunConfig read_manifest(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw std::ios_base::failure("cannot open " + file.string());
  json j = json::parse(is);
  RunConfig rc;
  rc.problem = j.value("problem", rc.problem);
  rc.scheme = j.value("scheme", rc.scheme);
  rc.convection = j.value("convection", rc.convection);
  rc.n = j.value("n", rc.n);
  rc.sweep = j.value("sweep", rc.sweep);
  rc.m = j.value("m", rc.m);
  rc.cfl = j.value("cfl", rc.cfl);
  rc.tfinal = j.value("tfinal", rc.tfinal);
  rc.eps = j.value("eps", rc.eps);
  rc.power = j.value("p", rc.power);
  rc.out_dir = j.value("out", rc.out_dir);
  rc.workers = j.value("workers", rc.workers);
  return rc;
}

int run(const RunConfig& rc, std::ostream& log) {
  try {
    validate(rc);
  } catch (const std::invalid_argument& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  namespace fs = std::filesystem;
  const fs::path out(rc.out_dir);
  try {
    fs::create_directories(out);
    write_manifest(rc, out / "manifest.json");
  } catch (const std::exception& e) {
    log << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }

  std::vector<int> levels = rc.sweep;
  if (levels.empty()) levels.push_back(rc.n);  // 0 keeps the problem default

  std::vector<ErrorReport> table;
  for (const int cells : levels) {
    LevelResult level;
    try {
      level = run_level(rc, cells);
    } catch (const BlowupError& e) {
      log << "numerical failure: " << e.what() << '\n';
      return kExitNumerical;
    } catch (const std::invalid_argument& e) {
      log << "config error: " << e.what() << '\n';
      return kExitConfig;
    } catch (const std::runtime_error& e) {
      log << "numerical failure: " << e.what() << '\n';
      return kExitNumerical;
    }

    try {
      ProblemDefinition pd = make_problem(rc.problem, rc.m);
      if (cells > 0) pd.resize(cells, cells);
      std::vector<double> gx(pd.grid.x.points());
      for (int i = 0; i < pd.grid.x.points(); ++i) gx[i] = pd.grid.x.point(i);
      std::vector<double> gy;
      if (pd.dimension == 2) {
        gy.resize(pd.grid.y.points());
        for (int j = 0; j < pd.grid.y.points(); ++j) gy[j] = pd.grid.y.point(j);
      }
      write_solution_csv(gx, gy, level.solution, out / solution_file_name(rc, cells));
    } catch (const std::exception& e) {
      log << "i/o error: " << e.what() << '\n';
      return kExitIo;
    }

    table.push_back(level.report);
    log << rc.problem << " " << rc.scheme << " N=" << level.report.n;
    if (level.report.norms)
      log << "  L1=" << level.report.norms->l1 << "  L2=" << level.report.norms->l2
          << "  Linf=" << level.report.norms->linf;
    log << "  min=" << level.report.min_value << "  steps=" << level.report.steps
        << "  runtime=" << level.report.runtime_seconds << "s\n";
  }

  if (!rc.sweep.empty()) {
    fill_orders(table);
    try {
      write_error_table(table, out / "errors.csv");
    } catch (const std::exception& e) {
      log << "i/o error: " << e.what() << '\n';
      return kExitIo;
    }
  }
  return kExitOk;
}

}  // namespace wenodp
