#include "emovae/numeric/finite_diff.hpp"

#include <cmath>
#include <string>

#include "emovae/error.hpp"

namespace emovae {

std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& loss_fn,
    std::vector<double> x, double eps) {
  if (!(eps > 0.0)) throw ParameterError("finite_difference_gradient: eps must be > 0");
  std::vector<double> grad(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double h = eps * std::max(1.0, std::abs(xi));
    x[i] = xi + h;
    const double f_plus = loss_fn(x);
    x[i] = xi - h;
    const double f_minus = loss_fn(x);
    x[i] = xi;
    if (!std::isfinite(f_plus) || !std::isfinite(f_minus)) {
      throw NumericError("finite_difference_gradient: non-finite loss at probe " +
                         std::to_string(i));
    }
    grad[i] = (f_plus - f_minus) / (2.0 * h);
  }
  return grad;
}

}  // namespace emovae
