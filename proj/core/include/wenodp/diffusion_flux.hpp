#ifndef WENODP_DIFFUSION_FLUX_HPP_
#define WENODP_DIFFUSION_FLUX_HPP_
//! \file diffusion_flux.hpp
//! \brief Sixth-order WENO numerical fluxes for the diffusion term b(u)_xx.
//!
//! All kernels operate on a window of six consecutive point values of b(u),
//! (b_{i-2}, ..., b_{i+3}), and produce quantities attached to the interface
//! x_{i+1/2}. Grid-spacing factors are applied by the caller: the flux
//! difference divided by dx^2 approximates b(u)_xx to sixth order.

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "wenodp/scheme.hpp"

namespace wenodp {

/// Six b-values feeding one interface flux: (b_{i-2}, ..., b_{i+3}).
using StencilWindow = std::array<double, 6>;

/// Substencil fluxes plus the centered and optimal full-stencil fluxes.
struct CandidateFluxes {
  double left, middle, right;  // 4-point substencils S0, S1, S2
  double central;              // centered candidate on the full stencil
  double optimal;              // sixth-order linear flux
};

/// Jiang-Shu type indicators of the three substencil parabolas plus the
/// centered indicator of the full-stencil quartic.
struct SmoothnessSet {
  std::array<double, 3> beta;  // beta_L, beta_M, beta_R
  double beta_central;
};

// Linear weights: three-term split form and four-term convex form.
inline constexpr std::array<double, 3> kLinearWeights3 = {-2.0 / 15.0, 19.0 / 15.0,
                                                          -2.0 / 15.0};
inline constexpr std::array<double, 4> kLinearWeights4 = {1.0 / 6.0, 1.0 / 3.0,
                                                          1.0 / 6.0, 1.0 / 3.0};

// Positive/negative split of the three-term linear weights, scaled to sum 1.
inline constexpr std::array<double, 3> kGammaPlus = {1.0 / 21.0, 19.0 / 21.0, 1.0 / 21.0};
inline constexpr std::array<double, 3> kGammaMinus = {4.0 / 27.0, 19.0 / 27.0, 4.0 / 27.0};
inline constexpr double kSigmaPlus = 14.0 / 5.0;
inline constexpr double kSigmaMinus = 9.0 / 5.0;

/// Fluxes of the quadratic substencil interpolants at x_{i+1/2}.
/// g^0 reads entries 0..3, g^1 entries 1..4, g^2 entries 2..5.
inline std::array<double, 3> substencil_fluxes(const StencilWindow& w) {
  const double g0 = (1.0 / 12.0) * w[0] - (1.0 / 4.0) * w[1] - (3.0 / 4.0) * w[2] +
                    (11.0 / 12.0) * w[3];
  const double g1 = (1.0 / 12.0) * w[1] - (5.0 / 4.0) * w[2] + (5.0 / 4.0) * w[3] -
                    (1.0 / 12.0) * w[4];
  const double g2 = -(11.0 / 12.0) * w[2] + (3.0 / 4.0) * w[3] + (1.0 / 4.0) * w[4] -
                    (1.0 / 12.0) * w[5];
  return {g0, g1, g2};
}

/// Flux of the centered candidate polynomial at x_{i+1/2}.
inline double central_flux(const StencilWindow& w) {
  return -(3.0 / 40.0) * w[0] + (11.0 / 24.0) * w[1] - 2.0 * w[2] + 2.0 * w[3] -
         (11.0 / 24.0) * w[4] + (3.0 / 40.0) * w[5];
}

/// Sixth-order linear finite difference flux on the full stencil.
inline double linear_fd_flux(const StencilWindow& w) {
  return -(1.0 / 90.0) * w[0] + (5.0 / 36.0) * w[1] - (49.0 / 36.0) * w[2] +
         (49.0 / 36.0) * w[3] - (5.0 / 36.0) * w[4] + (1.0 / 90.0) * w[5];
}

inline CandidateFluxes candidate_fluxes(const StencilWindow& w) {
  const auto g = substencil_fluxes(w);
  return {g[0], g[1], g[2], central_flux(w), linear_fd_flux(w)};
}

/// Substencil smoothness indicators (nonnegative quadratic forms).
inline std::array<double, 3> smoothness_indicators(const StencilWindow& w) {
  constexpr double c0 = 13.0 / 12.0;
  constexpr double c1 = 1.0 / 4.0;
  const double a0 = w[0] - 3.0 * w[1] + 3.0 * w[2] - w[3];
  const double b0 = w[0] - 5.0 * w[1] + 7.0 * w[2] - 3.0 * w[3];
  const double a1 = w[1] - 3.0 * w[2] + 3.0 * w[3] - w[4];
  const double b1 = w[1] - w[2] - w[3] + w[4];
  const double a2 = w[2] - 3.0 * w[3] + 3.0 * w[4] - w[5];
  const double b2 = -3.0 * w[2] + 7.0 * w[3] - 5.0 * w[4] + w[5];
  return {c0 * a0 * a0 + c1 * b0 * b0, c0 * a1 * a1 + c1 * b1 * b1,
          c0 * a2 * a2 + c1 * b2 * b2};
}

/// Smoothness indicator of the full-stencil degree-4 flux polynomial,
/// with derivatives up to order four.
inline double central_smoothness_indicator(const StencilWindow& w) {
  const double t0 = w[0] - 5.0 * w[1] + 10.0 * w[2] - 10.0 * w[3] + 5.0 * w[4] - w[5];
  const double t1 =
      5.0 * w[0] + 11.0 * w[1] - 70.0 * w[2] + 94.0 * w[3] - 47.0 * w[4] + 7.0 * w[5];
  const double t2 = 35.0 * w[0] - 139.0 * w[1] + 230.0 * w[2] - 206.0 * w[3] +
                    103.0 * w[4] - 23.0 * w[5];
  const double t3 =
      7.0 * w[0] - 51.0 * w[1] + 134.0 * w[2] - 166.0 * w[3] + 99.0 * w[4] - 23.0 * w[5];
  const double t4 =
      7.0 * w[0] - 56.0 * w[1] + 106.0 * w[2] - 76.0 * w[3] + 23.0 * w[4] - 4.0 * w[5];
  const double t5 = 65.0 * w[0] - 353.0 * w[1] + 690.0 * w[2] - 602.0 * w[3] +
                    221.0 * w[4] - 21.0 * w[5];
  const double t6 = 23.0 * w[0] - 63.0 * w[1] - 34.0 * w[2] + 186.0 * w[3] -
                    133.0 * w[4] + 21.0 * w[5];
  const double t7 = 13.0 * w[0] - 28.0 * w[1] + 30.0 * w[2] - 28.0 * w[3] + 13.0 * w[4];
  const double t8 = w[0] - 4.0 * w[1] + 6.0 * w[2] - 4.0 * w[3] + w[4];
  const double t9 = w[0] - 12.0 * w[1] + 22.0 * w[2] - 12.0 * w[3] + w[4];
  return (4273.0 / 20160.0) * t0 * t0 + (29.0 / 345600.0) * t1 * t1 +
         (1.0 / 3600.0) * t2 * t2 + (1.0 / 576.0) * t3 * t3 + (1.0 / 2304.0) * t4 * t4 +
         (1.0 / 9216.0) * t5 * t5 + (1.0 / 9216.0) * t6 * t6 + (1.0 / 2304.0) * t7 * t7 +
         (2.0 / 15.0) * t8 * t8 + (1.0 / 1152.0) * t9 * t9;
}

inline SmoothnessSet compute_smoothness(const StencilWindow& w) {
  return {smoothness_indicators(w), central_smoothness_indicator(w)};
}

/// Global indicator on the six-point stencil; O(dx^8) on smooth
/// non-inflection data.
inline double tau6(const SmoothnessSet& s) {
  return std::abs(s.beta_central -
                  (5.0 * s.beta[0] + 14.0 * s.beta[1] + 5.0 * s.beta[2]) / 24.0);
}

/// Mapping of Henrick et al.; fixed point at omega = d.
inline double henrick_map(double omega, double d) {
  return omega * (d + d * d - 3.0 * d * omega + omega * omega) /
         (d * d + omega * (1.0 - 2.0 * d));
}

namespace detail {

inline void require_eps(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("weight epsilon must be positive");
}

// sigma^+ w^+_k - sigma^- w^-_k from unnormalized split weight pairs.
inline std::array<double, 3> combine_split(const std::array<double, 3>& ap,
                                           const std::array<double, 3>& am) {
  const double sp = ap[0] + ap[1] + ap[2];
  const double sm = am[0] + am[1] + am[2];
  return {kSigmaPlus * ap[0] / sp - kSigmaMinus * am[0] / sm,
          kSigmaPlus * ap[1] / sp - kSigmaMinus * am[1] / sm,
          kSigmaPlus * ap[2] / sp - kSigmaMinus * am[2] / sm};
}

}  // namespace detail

/// Mapped split weights; sum to 1, individual entries may be negative.
inline std::array<double, 3> lsz_weights(const std::array<double, 3>& beta, double eps) {
  detail::require_eps(eps);
  std::array<double, 3> ap, am;
  for (int k = 0; k < 3; ++k) {
    const double d = beta[k] + eps;
    const double inv2 = 1.0 / (d * d);
    ap[k] = kGammaPlus[k] * inv2;
    am[k] = kGammaMinus[k] * inv2;
  }
  const auto omega = detail::combine_split(ap, am);
  std::array<double, 3> mapped;
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    mapped[k] = henrick_map(omega[k], kLinearWeights3[k]);
    sum += mapped[k];
  }
  return {mapped[0] / sum, mapped[1] / sum, mapped[2] / sum};
}

/// Z-type split weights with tau = |beta_0 - beta_2|; sum to 1.
inline std::array<double, 3> mweno_weights(const std::array<double, 3>& beta,
                                           double eps) {
  detail::require_eps(eps);
  const double tau = std::abs(beta[0] - beta[2]);
  std::array<double, 3> ap, am;
  for (int k = 0; k < 3; ++k) {
    const double r = tau / (beta[k] + eps);
    const double z = 1.0 + r * r;
    ap[k] = kGammaPlus[k] * z;
    am[k] = kGammaMinus[k] * z;
  }
  return detail::combine_split(ap, am);
}

/// Z-type convex weights over the four candidates (L, M, R, C).
inline std::array<double, 4> cweno_dz_weights(const SmoothnessSet& s, double eps,
                                              int power) {
  detail::require_eps(eps);
  if (power < 1) throw std::invalid_argument("weight power must be >= 1");
  const double t = tau6(s);
  const std::array<double, 4> beta = {s.beta[0], s.beta[1], s.beta[2], s.beta_central};
  std::array<double, 4> alpha;
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double r = t / (beta[k] + eps);
    const double z = power == 1 ? r : (power == 2 ? r * r : std::pow(r, power));
    alpha[k] = kLinearWeights4[k] * (1.0 + z);
    sum += alpha[k];
  }
  return {alpha[0] / sum, alpha[1] / sum, alpha[2] / sum, alpha[3] / sum};
}

/// WENO diffusion flux at x_{i+1/2} for the selected scheme.
inline double diffusion_flux(const StencilWindow& w, const DiffusionParams& params) {
  const auto g = substencil_fluxes(w);
  switch (params.scheme) {
    case DiffusionScheme::WenoLsz: {
      const auto omega = lsz_weights(smoothness_indicators(w), params.eps);
      return omega[0] * g[0] + omega[1] * g[1] + omega[2] * g[2];
    }
    case DiffusionScheme::Mweno: {
      const auto omega = mweno_weights(smoothness_indicators(w), params.eps);
      return omega[0] * g[0] + omega[1] * g[1] + omega[2] * g[2];
    }
    case DiffusionScheme::CwenoDz: {
      const auto omega = cweno_dz_weights(compute_smoothness(w), params.eps,
                                          params.power);
      return omega[0] * g[0] + omega[1] * g[1] + omega[2] * g[2] +
             omega[3] * central_flux(w);
    }
  }
  return 0.0;
}

/// Conservative flux-difference approximation of b(u)_xx.
///
/// padded_b holds the interior b-values with exactly three ghost values per
/// side; out receives (g_{i+1/2} - g_{i-1/2})/dx^2 for each interior point.
/// Each interface flux is computed once and shared by its two neighbors.
void diffusion_rhs(std::span<const double> padded_b, double dx,
                   const DiffusionParams& params, std::span<double> out);

std::vector<double> diffusion_rhs(std::span<const double> padded_b, double dx,
                                  const DiffusionParams& params);

}  // namespace wenodp

#endif  // WENODP_DIFFUSION_FLUX_HPP_
