#ifndef WENODP_TIME_INTEGRATOR_HPP_
#define WENODP_TIME_INTEGRATOR_HPP_
//! \file time_integrator.hpp
//! \brief Explicit third-order TVD Runge-Kutta time stepping.

#include <chrono>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wenodp {

struct TimeLoopConfig {
  double cfl = 0.4;
  double final_time = 1.0;
  long max_steps = 100000000;
  double dt_override = 0.0;  // > 0 replaces the problem's time-step rule
};

struct RunResult {
  std::vector<double> state;
  long steps = 0;
  double runtime_seconds = 0.0;
};

/// Raised when a stage produces a non-finite value.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(long step, int stage, std::size_t index, double time)
      : std::runtime_error("non-finite value at step " + std::to_string(step) +
                           ", stage " + std::to_string(stage) + ", index " +
                           std::to_string(index) + ", t = " + std::to_string(time)),
        step(step), stage(stage), index(index), time(time) {}
  long step;
  int stage;
  std::size_t index;
  double time;
};

/// Index of the first non-finite entry, or npos.
std::size_t first_non_finite(std::span<const double> v);

/// One TVD-RK3 step; rhs(u, out) must re-apply boundary padding internally.
/// Mostly a convenience for small systems and tests; advance() below keeps
/// its buffers across steps.
template <typename RhsFn>
std::vector<double> rk3_step(std::span<const double> u, RhsFn&& rhs, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk3_step: dt must be positive");
  const std::size_t n = u.size();
  std::vector<double> k(n), u1(n), u2(n);
  rhs(u, std::span<double>(k));
  for (std::size_t i = 0; i < n; ++i) u1[i] = u[i] + dt * k[i];
  rhs(std::span<const double>(u1), std::span<double>(k));
  for (std::size_t i = 0; i < n; ++i)
    u2[i] = 0.75 * u[i] + 0.25 * u1[i] + 0.25 * dt * k[i];
  rhs(std::span<const double>(u2), std::span<double>(k));
  std::vector<double> next(n);
  for (std::size_t i = 0; i < n; ++i)
    next[i] = u[i] / 3.0 + 2.0 / 3.0 * u2[i] + 2.0 / 3.0 * dt * k[i];
  return next;
}

/// Integrates the system to final_time, truncating the last step so the
/// final time is hit exactly. The System provides rhs(u, out),
/// enforce_boundary(u) and time_step(cfl).
template <typename System>
RunResult advance(const System& sys, std::vector<double> u, const TimeLoopConfig& cfg) {
  if (!(cfg.final_time >= 0.0))
    throw std::invalid_argument("advance: final_time must be nonnegative");
  const auto t_start = std::chrono::steady_clock::now();

  const double dt_nominal =
      cfg.dt_override > 0.0 ? cfg.dt_override : sys.time_step(cfg.cfl);
  if (!(dt_nominal > 0.0)) throw std::invalid_argument("advance: nonpositive time step");

  const std::size_t n = u.size();
  std::vector<double> k(n), u1(n), u2(n);
  auto check_stage = [&](const std::vector<double>& v, long step, int stage, double t) {
    const std::size_t bad = first_non_finite(v);
    if (bad != static_cast<std::size_t>(-1)) throw BlowupError(step, stage, bad, t);
  };

  RunResult result;
  double t = 0.0;
  // Relative guard so truncated last steps don't leave a dust-sized step.
  const double t_eps = 1e-12 * std::max(1.0, cfg.final_time);
  while (t < cfg.final_time - t_eps) {
    if (result.steps >= cfg.max_steps)
      throw std::runtime_error("advance: exceeded max_steps = " +
                               std::to_string(cfg.max_steps));
    const double dt = std::min(dt_nominal, cfg.final_time - t);

    sys.rhs(u, std::span<double>(k));
    for (std::size_t i = 0; i < n; ++i) u1[i] = u[i] + dt * k[i];
    sys.enforce_boundary(std::span<double>(u1));
    check_stage(u1, result.steps, 1, t);

    sys.rhs(u1, std::span<double>(k));
    for (std::size_t i = 0; i < n; ++i)
      u2[i] = 0.75 * u[i] + 0.25 * u1[i] + 0.25 * dt * k[i];
    sys.enforce_boundary(std::span<double>(u2));
    check_stage(u2, result.steps, 2, t);

    sys.rhs(u2, std::span<double>(k));
    for (std::size_t i = 0; i < n; ++i)
      u[i] = u[i] / 3.0 + 2.0 / 3.0 * u2[i] + 2.0 / 3.0 * dt * k[i];
    sys.enforce_boundary(std::span<double>(u));
    check_stage(u, result.steps, 3, t);

    t += dt;
    ++result.steps;
  }

  result.state = std::move(u);
  result.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return result;
}

}  // namespace wenodp

#endif  // WENODP_TIME_INTEGRATOR_HPP_
