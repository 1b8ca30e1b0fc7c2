#ifndef WENODP_GRID_HPP_
#define WENODP_GRID_HPP_
//! \file grid.hpp
//! \brief Uniform node-centered grids, ghost padding and boundary conditions.

#include <span>
#include <stdexcept>
#include <vector>

namespace wenodp {

/// Ghost width required by the six-point stencils.
inline constexpr int kGhostWidth = 3;

/// One axis of a uniform node-centered grid: points x_i = lower + i*dx,
/// i = 0..cells (cells+1 points).
struct Axis {
  double lower = 0.0;
  double upper = 1.0;
  int cells = 0;

  double spacing() const { return (upper - lower) / cells; }
  int points() const { return cells + 1; }
  double point(int i) const { return lower + i * spacing(); }

  void validate() const {
    if (cells < 6) throw std::invalid_argument("grid axis needs at least 6 cells");
    if (!(upper > lower)) throw std::invalid_argument("grid axis needs upper > lower");
  }
};

struct GridSpec {
  int dimension = 1;
  Axis x, y;

  void validate() const {
    if (dimension != 1 && dimension != 2)
      throw std::invalid_argument("grid dimension must be 1 or 2");
    x.validate();
    if (dimension == 2) y.validate();
  }
};

enum class BoundaryKind { Periodic, Dirichlet, Extrapolate };

struct BoundarySide {
  BoundaryKind kind = BoundaryKind::Periodic;
  double value = 0.0;  // Dirichlet only
};

/// Per-axis boundary condition. Periodic must hold on both sides at once.
struct AxisBoundary {
  BoundarySide left, right;

  bool periodic() const { return left.kind == BoundaryKind::Periodic; }

  void validate() const {
    const bool lp = left.kind == BoundaryKind::Periodic;
    const bool rp = right.kind == BoundaryKind::Periodic;
    if (lp != rp)
      throw std::invalid_argument("periodic boundary requires both sides periodic");
  }

  static AxisBoundary periodic_axis() { return {}; }
  static AxisBoundary dirichlet(double left_value, double right_value) {
    return {{BoundaryKind::Dirichlet, left_value}, {BoundaryKind::Dirichlet, right_value}};
  }
  static AxisBoundary extrapolate_axis() {
    return {{BoundaryKind::Extrapolate, 0.0}, {BoundaryKind::Extrapolate, 0.0}};
  }
};

/// Fills out (sized interior + 2*width) with the interior values plus ghost
/// values per the boundary condition. Periodic ghosts copy cyclically with
/// period = interior size; Dirichlet ghosts take the prescribed value
/// (constant extension); Extrapolate copies the nearest interior value.
void pad_field(std::span<const double> interior, const AxisBoundary& bc, int width,
               std::span<double> out);

std::vector<double> pad_field(std::span<const double> interior, const AxisBoundary& bc,
                              int width = kGhostWidth);

}  // namespace wenodp

#endif  // WENODP_GRID_HPP_
