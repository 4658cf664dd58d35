#include "emovae/numeric/adam.hpp"

#include <cmath>

#include "emovae/error.hpp"

namespace emovae {

Parameter::Parameter(std::string param_name, Matrix initial)
    : name(std::move(param_name)),
      value(std::move(initial)),
      grad(value.rows, value.cols, 0.0),
      m(value.rows, value.cols, 0.0),
      v(value.rows, value.cols, 0.0) {}

void AdamConfig::validate() const {
  if (!(beta1 > 0.0 && beta1 < 1.0))
    throw ParameterError("AdamConfig: beta1 must be in (0,1)");
  if (!(beta2 > 0.0 && beta2 < 1.0))
    throw ParameterError("AdamConfig: beta2 must be in (0,1)");
  if (!(epsilon > 0.0)) throw ParameterError("AdamConfig: epsilon must be > 0");
  if (!(learning_rate > 0.0))
    throw ParameterError("AdamConfig: learning_rate must be > 0");
  if (step_count < 0) throw ParameterError("AdamConfig: step_count must be >= 0");
}

namespace {

void apply_update(Parameter& p, const AdamConfig& cfg, std::int64_t t) {
  if (!p.grad.all_finite()) {
    throw NumericError("adam_step: non-finite gradient in parameter '" +
                       p.name + "'");
  }
  const double b1 = cfg.beta1;
  const double b2 = cfg.beta2;
  const double m_corr = 1.0 - std::pow(b1, static_cast<double>(t));
  const double v_corr = 1.0 - std::pow(b2, static_cast<double>(t));
  for (std::size_t i = 0; i < p.value.data.size(); ++i) {
    const double g = p.grad.data[i];
    p.m.data[i] = b1 * p.m.data[i] + (1.0 - b1) * g;
    p.v.data[i] = b2 * p.v.data[i] + (1.0 - b2) * g * g;
    const double m_hat = p.m.data[i] / m_corr;
    const double v_hat = p.v.data[i] / v_corr;
    p.value.data[i] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
    p.grad.data[i] = 0.0;
  }
}

}  // namespace

void adam_step(Parameter& param, AdamConfig& cfg) {
  cfg.validate();
  apply_update(param, cfg, cfg.step_count + 1);
  ++cfg.step_count;
}

void adam_step_all(std::span<Parameter> params, AdamConfig& cfg) {
  cfg.validate();
  const std::int64_t t = cfg.step_count + 1;
  for (Parameter& p : params) apply_update(p, cfg, t);
  ++cfg.step_count;
}

}  // namespace emovae
