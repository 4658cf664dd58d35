#pragma once

#include <functional>
#include <vector>

namespace emovae {

// Central-difference gradient of a scalar function: per coordinate,
// (f(x + h e_i) - f(x - h e_i)) / 2h with h = eps * max(1, |x_i|).
// f must be deterministic; freeze any random inputs before probing.
std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& loss_fn,
    std::vector<double> x, double eps = 1e-5);

}  // namespace emovae
