#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "emovae/numeric/matrix.hpp"

namespace emovae {

// One trainable weight matrix with its gradient and Adam moment buffers.
// Gradients accumulate additively across batches; adam_step zeroes them.
struct Parameter {
  std::string name;
  Matrix value;
  Matrix grad;
  Matrix m;  // first moment
  Matrix v;  // second moment

  Parameter() = default;
  Parameter(std::string param_name, Matrix initial);
};

// Defaults put beta1 > beta2, inverting the common Adam pairing (0.9/0.999);
// override per run if that is not wanted.
struct AdamConfig {
  double beta1 = 0.999;
  double beta2 = 0.99;
  double epsilon = 1e-8;
  double learning_rate = 1e-3;
  std::int64_t step_count = 0;

  void validate() const;
};

// Bias-corrected Adam update of a single parameter with step index
// step_count + 1; increments step_count and zeroes the gradient.
void adam_step(Parameter& param, AdamConfig& cfg);

// One optimizer step over a whole model: all parameters update with the same
// step index, then step_count advances once.
void adam_step_all(std::span<Parameter> params, AdamConfig& cfg);

}  // namespace emovae
