#include "wenodp/grid.hpp"

#include <algorithm>

namespace wenodp {

void pad_field(std::span<const double> interior, const AxisBoundary& bc, int width,
               std::span<double> out) {
  if (width != kGhostWidth)
    throw std::invalid_argument("pad_field: schemes require exactly 3 ghost values");
  bc.validate();
  const std::size_t n = interior.size();
  if (n < static_cast<std::size_t>(width))
    throw std::invalid_argument("pad_field: interior shorter than ghost width");
  if (out.size() != n + 2 * width)
    throw std::invalid_argument("pad_field: output size mismatch");

  std::copy(interior.begin(), interior.end(), out.begin() + width);

  for (int k = 0; k < width; ++k) {
    // left ghost at position width-1-k extends index -(k+1)
    double& lg = out[width - 1 - k];
    switch (bc.left.kind) {
      case BoundaryKind::Periodic:    lg = interior[n - 1 - k]; break;
      case BoundaryKind::Dirichlet:   lg = bc.left.value;       break;
      case BoundaryKind::Extrapolate: lg = interior[0];         break;
    }
    double& rg = out[width + n + k];
    switch (bc.right.kind) {
      case BoundaryKind::Periodic:    rg = interior[k];      break;
      case BoundaryKind::Dirichlet:   rg = bc.right.value;   break;
      case BoundaryKind::Extrapolate: rg = interior[n - 1];  break;
    }
  }
}

std::vector<double> pad_field(std::span<const double> interior, const AxisBoundary& bc,
                              int width) {
  if (width != kGhostWidth)
    throw std::invalid_argument("pad_field: schemes require exactly 3 ghost values");
  std::vector<double> out(interior.size() + 2 * width);
  pad_field(interior, bc, width, out);
  return out;
}

}  // namespace wenodp
