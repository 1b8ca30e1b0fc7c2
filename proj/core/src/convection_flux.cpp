#include "wenodp/convection_flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wenodp/diffusion_flux.hpp"  // henrick_map

namespace wenodp {

std::array<double, 3> weno5_weights(const std::array<double, 3>& beta,
                                    ConvectionScheme variant) {
  std::array<double, 3> alpha;
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double d = beta[k] + kWeno5Eps;
    alpha[k] = kWeno5LinearWeights[k] / (d * d);
    sum += alpha[k];
  }
  std::array<double, 3> omega = {alpha[0] / sum, alpha[1] / sum, alpha[2] / sum};
  if (variant == ConvectionScheme::WenoM) {
    double msum = 0.0;
    for (int k = 0; k < 3; ++k) {
      omega[k] = henrick_map(omega[k], kWeno5LinearWeights[k]);
      msum += omega[k];
    }
    for (int k = 0; k < 3; ++k) omega[k] /= msum;
  }
  return omega;
}

double weno5_interface(const Window5& window, ConvectionScheme variant) {
  const auto q = weno5_candidates(window);
  const auto omega = weno5_weights(weno5_smoothness(window), variant);
  return omega[0] * q[0] + omega[1] * q[1] + omega[2] * q[2];
}

SplitFluxPair lax_friedrichs_split(std::span<const double> u,
                                   const std::function<double(double)>& f,
                                   double fprime_bound) {
  if (fprime_bound < 0.0)
    throw std::invalid_argument("lax_friedrichs_split: negative derivative bound");
  SplitFluxPair pair;
  pair.alpha = fprime_bound;
  pair.plus.resize(u.size());
  pair.minus.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double fu = f(u[i]);
    const double au = fprime_bound * u[i];
    pair.plus[i] = 0.5 * (fu + au);
    pair.minus[i] = 0.5 * (fu - au);
  }
  return pair;
}

double estimate_alpha(const std::function<double(double)>& fprime, double umin,
                      double umax, int samples) {
  if (samples < 2) throw std::invalid_argument("estimate_alpha: need >= 2 samples");
  if (umax < umin) std::swap(umin, umax);
  const double h = (umax - umin) / (samples - 1);
  double bound = 0.0;
  for (int i = 0; i < samples; ++i)
    bound = std::max(bound, std::abs(fprime(umin + i * h)));
  return bound;
}

void convection_rhs(std::span<const double> padded_u, double dx,
                    const std::function<double(double)>& f,
                    const std::function<double(double)>& fprime,
                    ConvectionScheme variant, std::span<double> out) {
  if (padded_u.size() != out.size() + 6)
    throw std::invalid_argument("convection_rhs: field must carry 3 ghost values per side");
  if (out.empty()) throw std::invalid_argument("convection_rhs: empty interior");
  if (!(dx > 0.0)) throw std::invalid_argument("convection_rhs: dx must be positive");

  const auto [umin_it, umax_it] = std::minmax_element(padded_u.begin(), padded_u.end());
  const double alpha = estimate_alpha(fprime, *umin_it, *umax_it);
  const auto split = lax_friedrichs_split(padded_u, f, alpha);

  const std::size_t n = out.size();
  const double* fp = split.plus.data();
  const double* fm = split.minus.data();
  // Interface counter c = 0..n maps to x_{c-1/2}: left-biased window of f^+
  // is padded[c..c+4], the mirrored window of f^- is padded[c+1..c+5].
  auto fhat = [&](std::size_t c) {
    const Window5 wp = {fp[c], fp[c + 1], fp[c + 2], fp[c + 3], fp[c + 4]};
    const Window5 wm = {fm[c + 5], fm[c + 4], fm[c + 3], fm[c + 2], fm[c + 1]};
    return weno5_interface(wp, variant) + weno5_interface(wm, variant);
  };
  double h_prev = fhat(0);
  const double inv_dx = 1.0 / dx;
  for (std::size_t i = 0; i < n; ++i) {
    const double h_next = fhat(i + 1);
    out[i] = -(h_next - h_prev) * inv_dx;
    h_prev = h_next;
  }
}

std::vector<double> convection_rhs(std::span<const double> padded_u, double dx,
                                   const std::function<double(double)>& f,
                                   const std::function<double(double)>& fprime,
                                   ConvectionScheme variant) {
  if (padded_u.size() < 7)
    throw std::invalid_argument("convection_rhs: field must carry 3 ghost values per side");
  std::vector<double> out(padded_u.size() - 6);
  convection_rhs(padded_u, dx, f, fprime, variant, out);
  return out;
}

}  // namespace wenodp
