#include "wenodp/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace wenodp {

namespace {

constexpr double kPi = 3.14159265358979323846;

double int_pow(double u, int m) {
  double r = 1.0;
  for (int k = 0; k < m; ++k) r *= u;
  return r;
}

// s-shaped two-phase flux and its derivative
double bl_flux(double u) {
  const double a = u * u;
  const double b = (1.0 - u) * (1.0 - u);
  return a / (a + b);
}

double bl_dflux(double u) {
  const double d = u * u + (1.0 - u) * (1.0 - u);
  return 2.0 * u * (1.0 - u) / (d * d);
}

double bl_gravity_flux(double u) {
  const double w = 1.0 - u;
  return bl_flux(u) * (1.0 - 5.0 * w * w);
}

double bl_gravity_dflux(double u) {
  const double w = 1.0 - u;
  return bl_dflux(u) * (1.0 - 5.0 * w * w) + bl_flux(u) * 10.0 * w;
}

ProblemDefinition pme_1d_base(const std::string& name, double m, double lower,
                              double upper) {
  ProblemDefinition p;
  p.name = name;
  p.dimension = 1;
  p.pme_exponent = m;
  const int mi = static_cast<int>(m);
  if (static_cast<double>(mi) == m && mi >= 1) {
    p.diffusion_map = [mi](double u) { return int_pow(u, mi); };
  } else {
    p.diffusion_map = [m](double u) { return std::pow(u, m); };
  }
  p.grid = {1, {lower, upper, 160}, {}};
  p.bc_x = AxisBoundary::dirichlet(0.0, 0.0);
  return p;
}

}  // namespace

double barenblatt_value(double x, double t, double m) {
  if (!(t > 0.0)) throw std::invalid_argument("barenblatt_value: t must be positive");
  if (!(m > 1.0)) throw std::invalid_argument("barenblatt_value: m must exceed 1");
  const double q = 1.0 / (m + 1.0);
  const double s = 1.0 - q * (m - 1.0) / (2.0 * m) * x * x / std::pow(t, 2.0 * q);
  if (s <= 0.0) return 0.0;
  return std::pow(t, -q) * std::pow(s, 1.0 / (m - 1.0));
}

ProblemDefinition make_problem(const std::string& name, double m) {
  const bool is_barenblatt = name == "barenblatt" || name == "barenblatt_pme";
  if (m != 0.0 && !is_barenblatt)
    throw std::invalid_argument("problem '" + name + "' does not take an exponent m");

  if (name == "heat_1d") {
    ProblemDefinition p;
    p.name = name;
    p.dimension = 1;
    p.diffusion_map = [](double u) { return u; };
    p.grid = {1, {-kPi, kPi, 160}, {}};
    p.bc_x = AxisBoundary::periodic_axis();
    p.initial = [](double x, double) { return std::sin(x); };
    p.exact = [](double x, double, double t) { return std::exp(-t) * std::sin(x); };
    p.final_time = 2.0;
    p.dt_rule = [](double dx, double, double cfl) { return cfl * dx * dx; };
    return p;
  }

  if (name == "heat_2d") {
    ProblemDefinition p;
    p.name = name;
    p.dimension = 2;
    p.diffusion_map = [](double u) { return u; };
    p.grid = {2, {-kPi, kPi, 160}, {-kPi, kPi, 160}};
    p.bc_x = AxisBoundary::periodic_axis();
    p.bc_y = AxisBoundary::periodic_axis();
    p.initial = [](double x, double y) { return std::sin(x + y); };
    p.exact = [](double x, double y, double t) {
      return std::exp(-2.0 * t) * std::sin(x + y);
    };
    p.final_time = 2.0;
    p.dt_rule = [](double dx, double dy, double) {
      const double h = std::min(dx, dy);
      return 0.2 * h * h;
    };
    return p;
  }

  if (is_barenblatt) {
    const double mm = m == 0.0 ? 5.0 : m;
    if (!(mm > 1.0)) throw std::invalid_argument("barenblatt: m must exceed 1");
    ProblemDefinition p = pme_1d_base(name, mm, -6.0, 6.0);
    // The run starts from the t=1 profile; simulation clock t maps to
    // Barenblatt time t+1, so the default final_time 1 lands on B_m(., 2).
    p.initial = [mm](double x, double) { return barenblatt_value(x, 1.0, mm); };
    p.exact = [mm](double x, double, double t) {
      return barenblatt_value(x, t + 1.0, mm);
    };
    p.final_time = 1.0;
    p.dt_rule = [mm](double dx, double, double cfl) { return cfl * dx * dx / mm; };
    return p;
  }

  if (name == "two_box_equal") {
    ProblemDefinition p = pme_1d_base(name, 5.0, -5.5, 5.5);
    p.grid.x.cells = 220;
    p.initial = [](double x, double) {
      const bool in = (x > -3.7 && x < -0.7) || (x > 0.7 && x < 3.7);
      return in ? 1.0 : 0.0;
    };
    p.final_time = 1.5;
    p.dt_rule = [](double dx, double, double cfl) { return cfl * dx * dx / 5.0; };
    return p;
  }

  if (name == "two_box_unequal") {
    ProblemDefinition p = pme_1d_base(name, 6.0, -6.0, 6.0);
    p.grid.x.cells = 240;
    p.initial = [](double x, double) {
      if (x > -4.0 && x < -1.0) return 1.0;
      if (x > 0.0 && x < 3.0) return 2.0;
      return 0.0;
    };
    p.final_time = 0.15;
    p.dt_rule = [](double dx, double, double cfl) {
      return cfl * dx * dx / (6.0 * 32.0);  // m * 2^(m-1), m = 6
    };
    return p;
  }

  if (name == "buckley_leverett" || name == "buckley_leverett_gravity") {
    const bool gravity = name == "buckley_leverett_gravity";
    ProblemDefinition p;
    p.name = name;
    p.dimension = 1;
    p.eps_phys = 0.01;
    const double e = p.eps_phys;
    // g'(u) = eps * nu(u) with nu = 4u(1-u) clipped to [0,1]
    p.viscosity = [](double u) { return (u >= 0.0 && u <= 1.0) ? 4.0 * u * (1.0 - u) : 0.0; };
    p.diffusion_map = [e](double u) {
      if (u < 0.0) return 0.0;
      if (u > 1.0) return 2.0 / 3.0 * e;
      return e * (-4.0 / 3.0 * u * u * u + 2.0 * u * u);
    };
    p.flux_x = gravity ? bl_gravity_flux : bl_flux;
    p.dflux_x = gravity ? bl_gravity_dflux : bl_dflux;
    p.grid = {1, {0.0, 1.0, 100}, {}};
    if (gravity) {
      p.bc_x = AxisBoundary::dirichlet(0.0, 1.0);
      p.initial = [](double x, double) { return x >= 1.0 - 1.0 / std::sqrt(2.0) ? 1.0 : 0.0; };
    } else {
      // inflow fixed at u=1; the front never reaches the right boundary
      p.bc_x = {{BoundaryKind::Dirichlet, 1.0}, {BoundaryKind::Extrapolate, 0.0}};
      p.initial = [](double x, double) { return x <= 1.0 / 3.0 ? 1.0 - 3.0 * x : 0.0; };
    }
    p.final_time = 0.2;
    p.dt_rule = [](double dx, double, double cfl) { return cfl * dx * dx; };
    return p;
  }

  if (name == "sdp_1d") {
    ProblemDefinition p;
    p.name = name;
    p.dimension = 1;
    p.eps_phys = 0.1;
    const double e = p.eps_phys;
    p.viscosity = [](double u) { return std::abs(u) > 0.25 ? 1.0 : 0.0; };
    p.diffusion_map = [e](double u) {
      if (u < -0.25) return e * (u + 0.25);
      if (u > 0.25) return e * (u - 0.25);
      return 0.0;
    };
    p.flux_x = [](double u) { return u * u; };
    p.dflux_x = [](double u) { return 2.0 * u; };
    p.grid = {1, {-2.0, 2.0, 200}, {}};
    p.bc_x = AxisBoundary::extrapolate_axis();
    const double c = 1.0 / std::sqrt(2.0);
    p.initial = [c](double x, double) {
      if (x > -c - 0.4 && x < -c + 0.4) return 1.0;
      if (x > c - 0.4 && x < c + 0.4) return -1.0;
      return 0.0;
    };
    p.final_time = 0.7;
    p.dt_rule = [](double dx, double, double cfl) { return cfl * dx * dx; };
    return p;
  }

  if (name == "pme_2d") {
    ProblemDefinition p;
    p.name = name;
    p.dimension = 2;
    p.pme_exponent = 2.0;
    p.diffusion_map = [](double u) { return u * u; };
    p.grid = {2, {-10.0, 10.0, 80}, {-10.0, 10.0, 80}};
    p.bc_x = AxisBoundary::periodic_axis();
    p.bc_y = AxisBoundary::periodic_axis();
    p.initial = [](double x, double y) {
      const double r1 = (x - 2.0) * (x - 2.0) + (y + 2.0) * (y + 2.0);
      if (r1 < 6.0) return std::exp(-1.0 / (6.0 - r1));
      const double r2 = (x + 2.0) * (x + 2.0) + (y - 2.0) * (y - 2.0);
      if (r2 < 6.0) return std::exp(-1.0 / (6.0 - r2));
      return 0.0;
    };
    p.final_time = 1.0;
    p.dt_rule = [](double dx, double dy, double cfl) {
      const double h = std::min(dx, dy);
      return cfl * h * h * h * h / 2.0;
    };
    return p;
  }

  if (name == "buckley_leverett_2d") {
    ProblemDefinition p;
    p.name = name;
    p.dimension = 2;
    p.eps_phys = 0.01;
    const double e = p.eps_phys;
    p.diffusion_map = [e](double u) { return e * u; };  // linear diffusion eps*(u_xx+u_yy)
    p.flux_x = bl_flux;
    p.dflux_x = bl_dflux;
    p.flux_y = bl_gravity_flux;  // gravitational effects in y only
    p.dflux_y = bl_gravity_dflux;
    p.grid = {2, {-1.5, 1.5, 120}, {-1.5, 1.5, 120}};
    p.bc_x = AxisBoundary::extrapolate_axis();
    p.bc_y = AxisBoundary::extrapolate_axis();
    p.initial = [](double x, double y) { return x * x + y * y < 0.5 ? 1.0 : 0.0; };
    p.final_time = 0.5;
    p.dt_rule = [](double dx, double dy, double cfl) {
      const double h = std::min(dx, dy);
      return cfl * h * h;
    };
    return p;
  }

  if (name == "sdp_2d") {
    ProblemDefinition p;
    p.name = name;
    p.dimension = 2;
    p.eps_phys = 0.1;
    const double e = p.eps_phys;
    p.viscosity = [](double u) { return std::abs(u) > 0.25 ? 1.0 : 0.0; };
    p.diffusion_map = [e](double u) {
      if (u < -0.25) return e * (u + 0.25);
      if (u > 0.25) return e * (u - 0.25);
      return 0.0;
    };
    p.flux_x = [](double u) { return u * u; };
    p.dflux_x = [](double u) { return 2.0 * u; };
    p.flux_y = p.flux_x;
    p.dflux_y = p.dflux_x;
    p.grid = {2, {-1.5, 1.5, 120}, {-1.5, 1.5, 120}};
    p.bc_x = AxisBoundary::extrapolate_axis();
    p.bc_y = AxisBoundary::extrapolate_axis();
    p.initial = [](double x, double y) {
      if ((x + 0.5) * (x + 0.5) + (y + 0.5) * (y + 0.5) < 0.16) return 1.0;
      if ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5) < 0.16) return -1.0;
      return 0.0;
    };
    p.final_time = 0.5;
    p.dt_rule = [](double dx, double dy, double cfl) {
      const double h = std::min(dx, dy);
      return cfl * h * h;
    };
    return p;
  }

  throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> problem_names() {
  return {"heat_1d",          "heat_2d", "barenblatt", "two_box_equal",
          "two_box_unequal",  "buckley_leverett", "buckley_leverett_gravity",
          "sdp_1d",           "pme_2d",  "buckley_leverett_2d", "sdp_2d"};
}

}  // namespace wenodp
