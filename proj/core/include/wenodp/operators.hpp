#ifndef WENODP_OPERATORS_HPP_
#define WENODP_OPERATORS_HPP_
//! \file operators.hpp
//! \brief Semi-discrete spatial operators assembling WENO diffusion and
//!        convection terms for the catalog problems.
//!
//! Periodic axes evolve the N unique values u_0..u_{N-1}; the duplicate
//! endpoint u_N = u_0 is materialized only when presenting, so error norms
//! keep the node-centered (N+1)-point normalization. Non-periodic axes
//! evolve all N+1 points, with Dirichlet boundary values re-imposed after
//! every stage.

#include <span>
#include <vector>

#include "wenodp/problem.hpp"
#include "wenodp/scheme.hpp"

namespace wenodp {

/// Number of evolved values along an axis.
inline int evolved_points(const Axis& axis, const AxisBoundary& bc) {
  return bc.periodic() ? axis.cells : axis.cells + 1;
}

/// One-dimensional semi-discrete system du/dt = L(u).
class System1D {
 public:
  System1D(ProblemDefinition problem, SchemeConfig scheme);

  int size() const { return n_; }
  const ProblemDefinition& problem() const { return problem_; }
  const SchemeConfig& scheme() const { return scheme_; }

  std::vector<double> initial_state() const;

  /// L(u): diffusion flux difference plus (when present) the convection term.
  /// Not thread-safe across concurrent calls on one instance.
  void rhs(std::span<const double> u, std::span<double> out) const;

  /// Re-imposes Dirichlet boundary values on the evolved state.
  void enforce_boundary(std::span<double> u) const;

  double time_step(double cfl) const;

  /// Full node-centered field x_0..x_N (duplicates the periodic endpoint).
  std::vector<double> present(std::span<const double> u) const;
  std::vector<double> exact_at(double t) const;
  std::vector<double> grid_points() const;

 private:
  ProblemDefinition problem_;
  SchemeConfig scheme_;
  int n_ = 0;
  mutable std::vector<double> padded_, mapped_, term_;
};

/// Two-dimensional system using the dimension-by-dimension assembly:
/// the 1D operators are applied along every row for the x-terms and every
/// column for the y-terms, and the contributions are summed.
class System2D {
 public:
  System2D(ProblemDefinition problem, SchemeConfig scheme, int workers = 1);

  int size() const { return nx_ * ny_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  const ProblemDefinition& problem() const { return problem_; }
  const SchemeConfig& scheme() const { return scheme_; }

  std::vector<double> initial_state() const;

  /// Row/column sweeps are independent; deterministic for any worker count.
  void dimension_split_rhs(std::span<const double> u, std::span<double> out) const;
  void rhs(std::span<const double> u, std::span<double> out) const {
    dimension_split_rhs(u, out);
  }

  void enforce_boundary(std::span<double> u) const;
  double time_step(double cfl) const;

  /// (Nx+1)*(Ny+1) presentation field, row-major by y then x.
  std::vector<double> present(std::span<const double> u) const;
  std::vector<double> exact_at(double t) const;

 private:
  ProblemDefinition problem_;
  SchemeConfig scheme_;
  int workers_ = 1;
  int nx_ = 0, ny_ = 0;  // evolved counts
};

}  // namespace wenodp

#endif  // WENODP_OPERATORS_HPP_
