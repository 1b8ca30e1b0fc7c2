#include "wenodp/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "wenodp/convection_flux.hpp"
#include "wenodp/diffusion_flux.hpp"
#include "wenodp/parallel.hpp"

namespace wenodp {

namespace {

// Shared per-sweep machinery: pads one line of u, maps it through b, and
// accumulates the diffusion (and optional convection) contributions.
struct LineSweep {
  std::vector<double> padded, mapped, term;

  void resize(int n) {
    padded.resize(n + 2 * kGhostWidth);
    mapped.resize(n + 2 * kGhostWidth);
    term.resize(n);
  }

  void accumulate(std::span<const double> line, const AxisBoundary& bc, double dx,
                  const ProblemDefinition& pd, const DiffusionParams& dparams,
                  ConvectionScheme cvariant, const std::function<double(double)>& flux,
                  const std::function<double(double)>& dflux, double* out,
                  std::size_t out_stride) {
    const int n = static_cast<int>(line.size());
    pad_field(line, bc, kGhostWidth, padded);
    for (std::size_t i = 0; i < padded.size(); ++i)
      mapped[i] = pd.diffusion_map(padded[i]);
    diffusion_rhs(mapped, dx, dparams, term);
    for (int i = 0; i < n; ++i) out[i * out_stride] += term[i];
    if (flux) {
      convection_rhs(padded, dx, flux, dflux, cvariant, term);
      for (int i = 0; i < n; ++i) out[i * out_stride] += term[i];
    }
  }
};

}  // namespace

System1D::System1D(ProblemDefinition problem, SchemeConfig scheme)
    : problem_(std::move(problem)), scheme_(scheme) {
  if (problem_.dimension != 1)
    throw std::invalid_argument("System1D requires a one-dimensional problem");
  problem_.grid.validate();
  problem_.bc_x.validate();
  n_ = evolved_points(problem_.grid.x, problem_.bc_x);
  padded_.resize(n_ + 2 * kGhostWidth);
  mapped_.resize(n_ + 2 * kGhostWidth);
  term_.resize(n_);
}

std::vector<double> System1D::initial_state() const {
  std::vector<double> u(n_);
  for (int i = 0; i < n_; ++i) u[i] = problem_.initial(problem_.grid.x.point(i), 0.0);
  return u;
}

void System1D::rhs(std::span<const double> u, std::span<double> out) const {
  if (static_cast<int>(u.size()) != n_ || out.size() != u.size())
    throw std::invalid_argument("System1D::rhs: state size mismatch");
  const double dx = problem_.grid.x.spacing();
  std::fill(out.begin(), out.end(), 0.0);

  pad_field(u, problem_.bc_x, kGhostWidth, padded_);
  for (std::size_t i = 0; i < padded_.size(); ++i)
    mapped_[i] = problem_.diffusion_map(padded_[i]);
  diffusion_rhs(mapped_, dx, scheme_.diffusion_params(), term_);
  for (int i = 0; i < n_; ++i) out[i] += term_[i];

  if (problem_.has_convection()) {
    convection_rhs(padded_, dx, problem_.flux_x, problem_.dflux_x, scheme_.convection,
                   term_);
    for (int i = 0; i < n_; ++i) out[i] += term_[i];
  }
}

void System1D::enforce_boundary(std::span<double> u) const {
  if (problem_.bc_x.left.kind == BoundaryKind::Dirichlet)
    u[0] = problem_.bc_x.left.value;
  if (problem_.bc_x.right.kind == BoundaryKind::Dirichlet)
    u[u.size() - 1] = problem_.bc_x.right.value;
}

double System1D::time_step(double cfl) const {
  return problem_.dt_rule(problem_.grid.x.spacing(), 0.0, cfl);
}

std::vector<double> System1D::present(std::span<const double> u) const {
  std::vector<double> full(u.begin(), u.end());
  if (problem_.bc_x.periodic()) full.push_back(u[0]);
  return full;
}

std::vector<double> System1D::exact_at(double t) const {
  if (!problem_.has_exact())
    throw std::logic_error("problem '" + problem_.name + "' has no exact solution");
  const int np = problem_.grid.x.points();
  std::vector<double> e(np);
  for (int i = 0; i < np; ++i) e[i] = problem_.exact(problem_.grid.x.point(i), 0.0, t);
  return e;
}

std::vector<double> System1D::grid_points() const {
  const int np = problem_.grid.x.points();
  std::vector<double> x(np);
  for (int i = 0; i < np; ++i) x[i] = problem_.grid.x.point(i);
  return x;
}

System2D::System2D(ProblemDefinition problem, SchemeConfig scheme, int workers)
    : problem_(std::move(problem)), scheme_(scheme), workers_(std::max(1, workers)) {
  if (problem_.dimension != 2)
    throw std::invalid_argument("System2D requires a two-dimensional problem");
  problem_.grid.validate();
  problem_.bc_x.validate();
  problem_.bc_y.validate();
  nx_ = evolved_points(problem_.grid.x, problem_.bc_x);
  ny_ = evolved_points(problem_.grid.y, problem_.bc_y);
}

std::vector<double> System2D::initial_state() const {
  std::vector<double> u(static_cast<std::size_t>(nx_) * ny_);
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i)
      u[static_cast<std::size_t>(j) * nx_ + i] =
          problem_.initial(problem_.grid.x.point(i), problem_.grid.y.point(j));
  return u;
}

void System2D::dimension_split_rhs(std::span<const double> u,
                                   std::span<double> out) const {
  if (u.size() != static_cast<std::size_t>(nx_) * ny_ || out.size() != u.size())
    throw std::invalid_argument("System2D::rhs: state size mismatch");
  std::fill(out.begin(), out.end(), 0.0);
  const double dx = problem_.grid.x.spacing();
  const double dy = problem_.grid.y.spacing();
  const auto dparams = scheme_.diffusion_params();

  parallel_for(ny_, workers_, [&](int j0, int j1) {
    LineSweep sweep;
    sweep.resize(nx_);
    for (int j = j0; j < j1; ++j) {
      const double* row = u.data() + static_cast<std::size_t>(j) * nx_;
      sweep.accumulate(std::span<const double>(row, nx_), problem_.bc_x, dx, problem_,
                       dparams, scheme_.convection, problem_.flux_x, problem_.dflux_x,
                       out.data() + static_cast<std::size_t>(j) * nx_, 1);
    }
  });

  parallel_for(nx_, workers_, [&](int i0, int i1) {
    LineSweep sweep;
    sweep.resize(ny_);
    std::vector<double> column(ny_);
    for (int i = i0; i < i1; ++i) {
      for (int j = 0; j < ny_; ++j)
        column[j] = u[static_cast<std::size_t>(j) * nx_ + i];
      sweep.accumulate(column, problem_.bc_y, dy, problem_, dparams, scheme_.convection,
                       problem_.flux_y, problem_.dflux_y, out.data() + i, nx_);
    }
  });
}

void System2D::enforce_boundary(std::span<double> u) const {
  if (problem_.bc_x.left.kind == BoundaryKind::Dirichlet)
    for (int j = 0; j < ny_; ++j)
      u[static_cast<std::size_t>(j) * nx_] = problem_.bc_x.left.value;
  if (problem_.bc_x.right.kind == BoundaryKind::Dirichlet)
    for (int j = 0; j < ny_; ++j)
      u[static_cast<std::size_t>(j) * nx_ + nx_ - 1] = problem_.bc_x.right.value;
  if (problem_.bc_y.left.kind == BoundaryKind::Dirichlet)
    for (int i = 0; i < nx_; ++i) u[i] = problem_.bc_y.left.value;
  if (problem_.bc_y.right.kind == BoundaryKind::Dirichlet)
    for (int i = 0; i < nx_; ++i)
      u[static_cast<std::size_t>(ny_ - 1) * nx_ + i] = problem_.bc_y.right.value;
}

double System2D::time_step(double cfl) const {
  return problem_.dt_rule(problem_.grid.x.spacing(), problem_.grid.y.spacing(), cfl);
}

std::vector<double> System2D::present(std::span<const double> u) const {
  const int npx = problem_.grid.x.points();
  const int npy = problem_.grid.y.points();
  std::vector<double> full(static_cast<std::size_t>(npx) * npy);
  for (int j = 0; j < npy; ++j) {
    const int js = j % ny_;  // periodic duplicate row wraps to 0
    for (int i = 0; i < npx; ++i) {
      const int is = i % nx_;
      full[static_cast<std::size_t>(j) * npx + i] =
          u[static_cast<std::size_t>(js) * nx_ + is];
    }
  }
  return full;
}

std::vector<double> System2D::exact_at(double t) const {
  if (!problem_.has_exact())
    throw std::logic_error("problem '" + problem_.name + "' has no exact solution");
  const int npx = problem_.grid.x.points();
  const int npy = problem_.grid.y.points();
  std::vector<double> e(static_cast<std::size_t>(npx) * npy);
  for (int j = 0; j < npy; ++j)
    for (int i = 0; i < npx; ++i)
      e[static_cast<std::size_t>(j) * npx + i] =
          problem_.exact(problem_.grid.x.point(i), problem_.grid.y.point(j), t);
  return e;
}

}  // namespace wenodp
