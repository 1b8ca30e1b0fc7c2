#ifndef WENODP_PROBLEM_HPP_
#define WENODP_PROBLEM_HPP_
//! \file problem.hpp
//! \brief Benchmark problem definitions: u_t + f(u)_x [+ f2(u)_y] = b(u)_xx [+ ...].
//!
//! Every problem is stated through the diffusion map b (named g for the
//! convection-diffusion cases), optional convection fluxes with analytic
//! derivatives for the splitting bound, initial/boundary data, an optional
//! exact solution and the per-problem time-step rule.

#include <functional>
#include <string>
#include <vector>

#include "wenodp/grid.hpp"

namespace wenodp {

struct ProblemDefinition {
  std::string name;
  int dimension = 1;

  std::function<double(double)> diffusion_map;  // b(u), nondecreasing on the range
  std::function<double(double)> flux_x;         // empty when no convection
  std::function<double(double)> flux_y;
  std::function<double(double)> dflux_x;        // analytic f' for the alpha bound
  std::function<double(double)> dflux_y;
  std::function<double(double)> viscosity;      // nu(u) when g derives from it
  double eps_phys = 0.0;                        // equation coefficient (not weight eps)
  double pme_exponent = 0.0;                    // m for PME-type problems, else 0

  GridSpec grid;
  AxisBoundary bc_x, bc_y;

  std::function<double(double, double)> initial;          // (x, y); y ignored in 1D
  std::function<double(double, double, double)> exact;    // (x, y, t); may be empty
  double final_time = 1.0;
  std::function<double(double, double, double)> dt_rule;  // (dx, dy, cfl)

  bool has_convection() const { return static_cast<bool>(flux_x); }
  bool has_exact() const { return static_cast<bool>(exact); }

  /// Replaces the cell counts, keeping the domain bounds.
  void resize(int cells_x, int cells_y = 0) {
    grid.x.cells = cells_x;
    if (grid.dimension == 2) grid.y.cells = cells_y > 0 ? cells_y : cells_x;
    grid.validate();
  }
};

/// Self-similar point-source solution of u_t = (u^m)_xx; zero outside the
/// compact support. Requires t > 0 and m > 1.
double barenblatt_value(double x, double t, double m);

/// Catalog constructor. Known names: heat_1d, heat_2d, barenblatt
/// (alias barenblatt_pme; takes m), two_box_equal, two_box_unequal,
/// buckley_leverett, buckley_leverett_gravity, sdp_1d, pme_2d,
/// buckley_leverett_2d, sdp_2d.
ProblemDefinition make_problem(const std::string& name, double m = 0.0);

std::vector<std::string> problem_names();

}  // namespace wenodp

#endif  // WENODP_PROBLEM_HPP_
