#ifndef WENODP_CONVECTION_FLUX_HPP_
#define WENODP_CONVECTION_FLUX_HPP_
//! \file convection_flux.hpp
//! \brief Fifth-order WENO reconstruction of convection fluxes with global
//!        Lax-Friedrichs splitting.

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "wenodp/scheme.hpp"

namespace wenodp {

/// Five flux values feeding one upwind-biased interface reconstruction,
/// (f_{i-2}, ..., f_{i+2}) for the value at x_{i+1/2}.
using Window5 = std::array<double, 5>;

/// Regularization for the fifth-order convection weights.
inline constexpr double kWeno5Eps = 1e-6;

inline constexpr std::array<double, 3> kWeno5LinearWeights = {1.0 / 10.0, 3.0 / 5.0,
                                                              3.0 / 10.0};

/// Candidate interface values of the three quadratic substencils.
inline std::array<double, 3> weno5_candidates(const Window5& v) {
  return {(1.0 / 3.0) * v[0] - (7.0 / 6.0) * v[1] + (11.0 / 6.0) * v[2],
          -(1.0 / 6.0) * v[1] + (5.0 / 6.0) * v[2] + (1.0 / 3.0) * v[3],
          (1.0 / 3.0) * v[2] + (5.0 / 6.0) * v[3] - (1.0 / 6.0) * v[4]};
}

inline std::array<double, 3> weno5_smoothness(const Window5& v) {
  constexpr double c0 = 13.0 / 12.0;
  constexpr double c1 = 1.0 / 4.0;
  const double a0 = v[0] - 2.0 * v[1] + v[2];
  const double b0 = v[0] - 4.0 * v[1] + 3.0 * v[2];
  const double a1 = v[1] - 2.0 * v[2] + v[3];
  const double b1 = v[1] - v[3];
  const double a2 = v[2] - 2.0 * v[3] + v[4];
  const double b2 = 3.0 * v[2] - 4.0 * v[3] + v[4];
  return {c0 * a0 * a0 + c1 * b0 * b0, c0 * a1 * a1 + c1 * b1 * b1,
          c0 * a2 * a2 + c1 * b2 * b2};
}

/// JS weights, optionally sharpened by the Henrick mapping (WENO-M).
/// Convex: entries in [0,1], sum 1.
std::array<double, 3> weno5_weights(const std::array<double, 3>& beta,
                                    ConvectionScheme variant);

/// Upwind-biased interface value at x_{i+1/2} from (f_{i-2}, ..., f_{i+2}).
/// The mirror-image reconstruction (for the opposite-sign split flux) is
/// obtained by reversing the window.
double weno5_interface(const Window5& window, ConvectionScheme variant);

/// Monotone flux splitting f = f^+ + f^- with f^{+-} = (f(u) +- alpha u)/2.
struct SplitFluxPair {
  std::vector<double> plus, minus;
  double alpha = 0.0;
};

SplitFluxPair lax_friedrichs_split(std::span<const double> u,
                                   const std::function<double(double)>& f,
                                   double fprime_bound);

/// Upper bound for sup |f'(u)| over [umin, umax] by dense sampling.
double estimate_alpha(const std::function<double(double)>& fprime, double umin,
                      double umax, int samples = 10001);

/// Conservative rhs -(fhat_{i+1/2} - fhat_{i-1/2})/dx assembling upwind
/// reconstructions of both split fluxes. padded_u carries three ghost
/// values per side; the splitting bound alpha is derived from fprime over
/// the padded field's value range.
void convection_rhs(std::span<const double> padded_u, double dx,
                    const std::function<double(double)>& f,
                    const std::function<double(double)>& fprime,
                    ConvectionScheme variant, std::span<double> out);

std::vector<double> convection_rhs(std::span<const double> padded_u, double dx,
                                   const std::function<double(double)>& f,
                                   const std::function<double(double)>& fprime,
                                   ConvectionScheme variant);

}  // namespace wenodp

#endif  // WENODP_CONVECTION_FLUX_HPP_
