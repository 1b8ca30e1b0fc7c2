#ifndef WENODP_DIAGNOSTICS_HPP_
#define WENODP_DIAGNOSTICS_HPP_
//! \file diagnostics.hpp
//! \brief Error norms, convergence orders and solution-quality metrics.

#include <optional>
#include <span>
#include <vector>

namespace wenodp {

struct ErrorNorms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};

/// Discrete norms with 1/(number of points) normalization:
/// L1 = mean |e|, L2 = root mean square, Linf = max |e|. For 2D fields pass
/// the flattened presentation arrays; the normalization is the total count.
ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact);

/// order_k = log2(e_{k-1}/e_k) for grid sizes doubling between entries.
/// Entry 0 and any ratio against a zero error are absent.
std::vector<std::optional<double>> convergence_orders(const std::vector<double>& errors,
                                                      const std::vector<int>& ns);

/// Global minimum over the field (throws on empty input).
double min_value(std::span<const double> field);

/// One row of a convergence table.
struct ErrorReport {
  int n = 0;
  std::optional<ErrorNorms> norms;
  std::optional<double> order_l1, order_l2, order_linf;
  double min_value = 0.0;
  double runtime_seconds = 0.0;
  long steps = 0;
};

/// Fills the order columns of consecutive reports (sizes must double).
void fill_orders(std::vector<ErrorReport>& reports);

}  // namespace wenodp

#endif  // WENODP_DIAGNOSTICS_HPP_
