#include "wenodp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wenodp {

ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact) {
  if (numeric.size() != exact.size())
    throw std::invalid_argument("error_norms: size mismatch");
  if (numeric.empty()) throw std::invalid_argument("error_norms: empty fields");
  ErrorNorms n;
  double sum1 = 0.0, sum2 = 0.0, mx = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double e = std::abs(numeric[i] - exact[i]);
    sum1 += e;
    sum2 += e * e;
    mx = std::max(mx, e);
  }
  const double inv = 1.0 / static_cast<double>(numeric.size());
  n.l1 = sum1 * inv;
  n.l2 = std::sqrt(sum2 * inv);
  n.linf = mx;
  return n;
}

std::vector<std::optional<double>> convergence_orders(const std::vector<double>& errors,
                                                      const std::vector<int>& ns) {
  if (errors.size() != ns.size())
    throw std::invalid_argument("convergence_orders: size mismatch");
  for (std::size_t k = 1; k < ns.size(); ++k)
    if (ns[k] != 2 * ns[k - 1])
      throw std::invalid_argument("convergence_orders: grid sizes must double");
  std::vector<std::optional<double>> orders(errors.size());
  for (std::size_t k = 1; k < errors.size(); ++k) {
    if (errors[k - 1] > 0.0 && errors[k] > 0.0)
      orders[k] = std::log2(errors[k - 1] / errors[k]);
  }
  return orders;
}

double min_value(std::span<const double> field) {
  if (field.empty()) throw std::invalid_argument("min_value: empty field");
  return *std::min_element(field.begin(), field.end());
}

void fill_orders(std::vector<ErrorReport>& reports) {
  for (std::size_t k = 1; k < reports.size(); ++k) {
    auto& prev = reports[k - 1];
    auto& cur = reports[k];
    if (!prev.norms || !cur.norms) continue;
    if (cur.n != 2 * prev.n) continue;
    auto ratio = [](double a, double b) -> std::optional<double> {
      if (a > 0.0 && b > 0.0) return std::log2(a / b);
      return std::nullopt;
    };
    cur.order_l1 = ratio(prev.norms->l1, cur.norms->l1);
    cur.order_l2 = ratio(prev.norms->l2, cur.norms->l2);
    cur.order_linf = ratio(prev.norms->linf, cur.norms->linf);
  }
}

}  // namespace wenodp
