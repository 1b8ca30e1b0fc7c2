// Throughput of the per-interface kernels and the 1D rhs sweeps. The 2D
// solves spend nearly all their time here.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "wenodp/convection_flux.hpp"
#include "wenodp/diffusion_flux.hpp"
#include "wenodp/grid.hpp"

using namespace wenodp;

namespace {

std::vector<double> smooth_field(int n) {
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) u[i] = std::sin(2.0 * 3.141592653589793 * i / n);
  return u;
}

DiffusionParams params_for(DiffusionScheme s) { return {s, default_eps(s), 1}; }

void BM_DiffusionFlux(benchmark::State& state, DiffusionScheme scheme) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<StencilWindow> windows(1024);
  for (auto& w : windows)
    for (auto& v : w) v = dist(rng);
  const auto p = params_for(scheme);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(diffusion_flux(windows[i], p));
    i = (i + 1) & 1023;
  }
}

void BM_DiffusionRhs(benchmark::State& state, DiffusionScheme scheme) {
  const int n = static_cast<int>(state.range(0));
  const auto u = smooth_field(n);
  const auto padded = pad_field(u, AxisBoundary::periodic_axis());
  std::vector<double> out(n);
  const auto p = params_for(scheme);
  const double dx = 1.0 / n;
  for (auto _ : state) {
    diffusion_rhs(padded, dx, p, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * (n + 1));
}

void BM_Weno5Interface(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Window5> windows(1024);
  for (auto& w : windows)
    for (auto& v : w) v = dist(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weno5_interface(windows[i], ConvectionScheme::WenoJs));
    i = (i + 1) & 1023;
  }
}

void BM_ConvectionRhs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u = smooth_field(n);
  const auto padded = pad_field(u, AxisBoundary::periodic_axis());
  std::vector<double> out(n);
  auto f = [](double v) { return v * v; };
  auto df = [](double v) { return 2.0 * v; };
  const double dx = 1.0 / n;
  for (auto _ : state) {
    convection_rhs(padded, dx, f, df, ConvectionScheme::WenoJs, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * (n + 1));
}

}  // namespace

BENCHMARK_CAPTURE(BM_DiffusionFlux, lsz, DiffusionScheme::WenoLsz);
BENCHMARK_CAPTURE(BM_DiffusionFlux, mweno, DiffusionScheme::Mweno);
BENCHMARK_CAPTURE(BM_DiffusionFlux, cweno_dz, DiffusionScheme::CwenoDz);
BENCHMARK_CAPTURE(BM_DiffusionRhs, lsz, DiffusionScheme::WenoLsz)->Arg(160)->Arg(1024);
BENCHMARK_CAPTURE(BM_DiffusionRhs, mweno, DiffusionScheme::Mweno)->Arg(160)->Arg(1024);
BENCHMARK_CAPTURE(BM_DiffusionRhs, cweno_dz, DiffusionScheme::CwenoDz)->Arg(160)->Arg(1024);
BENCHMARK(BM_Weno5Interface);
BENCHMARK(BM_ConvectionRhs)->Arg(160)->Arg(1024);

BENCHMARK_MAIN();
