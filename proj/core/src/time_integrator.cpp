#include "wenodp/time_integrator.hpp"

namespace wenodp {

std::size_t first_non_finite(std::span<const double> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i])) return i;
  return static_cast<std::size_t>(-1);
}

}  // namespace wenodp
