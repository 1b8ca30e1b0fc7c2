#include "wenodp/diffusion_flux.hpp"

namespace wenodp {

namespace {

// Interface sweep shared by the per-scheme loops: fluxes at k+1/2 for
// k = -1..n-1 (n interior points), then the conservative difference.
template <typename FluxFn>
void rhs_sweep(std::span<const double> padded, double inv_dx2, FluxFn&& flux,
               std::span<double> out) {
  const std::size_t n = out.size();
  double g_prev = flux(&padded[0]);  // g_{-1/2}: window b_{-3}..b_{2}
  for (std::size_t i = 0; i < n; ++i) {
    const double g_next = flux(&padded[i + 1]);
    out[i] = (g_next - g_prev) * inv_dx2;
    g_prev = g_next;
  }
}

inline StencilWindow load(const double* p) {
  return {p[0], p[1], p[2], p[3], p[4], p[5]};
}

}  // namespace

void diffusion_rhs(std::span<const double> padded_b, double dx,
                   const DiffusionParams& params, std::span<double> out) {
  if (padded_b.size() != out.size() + 6)
    throw std::invalid_argument("diffusion_rhs: field must carry 3 ghost values per side");
  if (out.empty()) throw std::invalid_argument("diffusion_rhs: empty interior");
  if (!(dx > 0.0)) throw std::invalid_argument("diffusion_rhs: dx must be positive");
  detail::require_eps(params.eps);
  if (params.power < 1) throw std::invalid_argument("weight power must be >= 1");

  const double inv_dx2 = 1.0 / (dx * dx);
  const double eps = params.eps;
  const int power = params.power;
  switch (params.scheme) {
    case DiffusionScheme::WenoLsz:
      rhs_sweep(padded_b, inv_dx2,
                [eps](const double* p) {
                  const auto w = load(p);
                  const auto g = substencil_fluxes(w);
                  const auto omega = lsz_weights(smoothness_indicators(w), eps);
                  return omega[0] * g[0] + omega[1] * g[1] + omega[2] * g[2];
                },
                out);
      break;
    case DiffusionScheme::Mweno:
      rhs_sweep(padded_b, inv_dx2,
                [eps](const double* p) {
                  const auto w = load(p);
                  const auto g = substencil_fluxes(w);
                  const auto omega = mweno_weights(smoothness_indicators(w), eps);
                  return omega[0] * g[0] + omega[1] * g[1] + omega[2] * g[2];
                },
                out);
      break;
    case DiffusionScheme::CwenoDz:
      rhs_sweep(padded_b, inv_dx2,
                [eps, power](const double* p) {
                  const auto w = load(p);
                  const auto g = substencil_fluxes(w);
                  const auto omega = cweno_dz_weights(compute_smoothness(w), eps, power);
                  return omega[0] * g[0] + omega[1] * g[1] + omega[2] * g[2] +
                         omega[3] * central_flux(w);
                },
                out);
      break;
  }
}

std::vector<double> diffusion_rhs(std::span<const double> padded_b, double dx,
                                  const DiffusionParams& params) {
  if (padded_b.size() < 7)
    throw std::invalid_argument("diffusion_rhs: field must carry 3 ghost values per side");
  std::vector<double> out(padded_b.size() - 6);
  diffusion_rhs(padded_b, dx, params, out);
  return out;
}

}  // namespace wenodp
