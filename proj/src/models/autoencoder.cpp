#include "emovae/models/autoencoder.hpp"

#include <cmath>
#include <utility>

#include "emovae/error.hpp"

namespace emovae {

namespace {

constexpr double kLogVarClamp = 10.0;

std::vector<double> concat(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Y = X * W^T + b, with b broadcast over rows.
Matrix linear_forward(const Matrix& x, const Matrix& w, const Matrix& b) {
  Matrix y = matmul_a_bt(x, w);
  for (std::size_t i = 0; i < y.rows; ++i) {
    double* row = y.row(i);
    const double* bias = b.row(0);
    for (std::size_t j = 0; j < y.cols; ++j) row[j] += bias[j];
  }
  return y;
}

void tanh_inplace(Matrix& m) {
  for (double& v : m.data) v = std::tanh(v);
}

Matrix column_sums(const Matrix& g) {
  Matrix s(1, g.cols, 0.0);
  for (std::size_t i = 0; i < g.rows; ++i) {
    const double* row = g.row(i);
    for (std::size_t j = 0; j < g.cols; ++j) s.data[j] += row[j];
  }
  return s;
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::autoencoder: return "ae";
    case ModelKind::vae: return "vae";
    case ModelKind::cvae: return "cvae";
  }
  throw ParameterError("unknown model kind");
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "ae") return ModelKind::autoencoder;
  if (name == "vae") return ModelKind::vae;
  if (name == "cvae") return ModelKind::cvae;
  throw ParameterError("unknown model kind '" + name + "' (want ae|vae|cvae)");
}

std::string to_string(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::mu: return "mu";
    case FeatureMode::mu_logvar: return "mu-logvar";
    case FeatureMode::sample: return "sample";
  }
  throw ParameterError("unknown feature mode");
}

FeatureMode feature_mode_from_string(const std::string& name) {
  if (name == "mu") return FeatureMode::mu;
  if (name == "mu-logvar") return FeatureMode::mu_logvar;
  if (name == "sample") return FeatureMode::sample;
  throw ParameterError("unknown feature mode '" + name +
                       "' (want mu|mu-logvar|sample)");
}

void EncoderDecoderSpec::validate() const {
  if (input_dim < 1) throw ParameterError("model spec: input_dim must be >= 1");
  if (latent_dim < 1) throw ParameterError("model spec: latent_dim must be >= 1");
  if (kind == ModelKind::cvae && condition_dim < 1) {
    throw ParameterError("model spec: cvae needs condition_dim >= 1");
  }
  if (kind != ModelKind::cvae && condition_dim != 0) {
    throw ParameterError("model spec: condition_dim must be 0 unless cvae");
  }
  for (std::size_t h : hidden_dims) {
    if (h < 1) throw ParameterError("model spec: hidden dims must be >= 1");
  }
}

ConditionVector one_hot(std::size_t length, std::size_t index) {
  if (index >= length) throw ParameterError("one_hot: index out of range");
  ConditionVector c(length, 0.0);
  c[index] = 1.0;
  return c;
}

double kl_divergence(const LatentParams& lp) {
  if (lp.log_var.size() != lp.mu.size()) {
    throw DimensionError("kl_divergence: mu and log_var lengths differ");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < lp.mu.size(); ++j) {
    acc += lp.mu[j] * lp.mu[j] + std::exp(lp.log_var[j]) - 1.0 - lp.log_var[j];
  }
  return 0.5 * acc;
}

std::vector<double> reparameterize(const LatentParams& lp, RngStream& rng) {
  if (lp.log_var.size() != lp.mu.size()) {
    throw DimensionError("reparameterize: mu and log_var lengths differ");
  }
  std::vector<double> z(lp.mu.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    z[j] = lp.mu[j] + rng.next_normal() * std::exp(0.5 * lp.log_var[j]);
  }
  return z;
}

LossComponents vae_loss(std::span<const double> x, std::span<const double> x_hat,
                        const LatentParams& lp, double kl_weight) {
  if (x.size() != x_hat.size()) {
    throw DimensionError("vae_loss: x and x_hat lengths differ");
  }
  LossComponents out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - x_hat[i];
    out.recon += d * d;
  }
  out.kl = lp.log_var.empty() ? 0.0 : kl_divergence(lp);
  out.total = out.recon + kl_weight * out.kl;
  return out;
}

struct SegmentAutoencoder::Cache {
  Matrix enc_in;
  std::vector<Matrix> enc_act;
  Matrix mu;
  Matrix logvar_raw;
  Matrix logvar;
  Matrix sigma;
  Matrix z;
  Matrix dec_in;
  std::vector<Matrix> dec_act;
  Matrix xhat;
};

SegmentAutoencoder::SegmentAutoencoder(EncoderDecoderSpec spec,
                                       std::uint64_t seed)
    : spec_(std::move(spec)) {
  spec_.validate();
  RngStream rng(seed);

  auto add_layer = [&](const std::string& name, std::size_t out_dim,
                       std::size_t in_dim) {
    Matrix w(out_dim, in_dim);
    const double r = std::sqrt(6.0 / static_cast<double>(in_dim + out_dim));
    for (double& v : w.data) v = (2.0 * rng.next_uniform() - 1.0) * r;
    const std::size_t idx = params_.size();
    params_.emplace_back(name + ".w", std::move(w));
    params_.emplace_back(name + ".b", Matrix(1, out_dim, 0.0));
    return idx;
  };

  std::size_t in_dim = encoder_input_dim();
  for (std::size_t i = 0; i < spec_.hidden_dims.size(); ++i) {
    enc_idx_.push_back(add_layer("enc" + std::to_string(i), spec_.hidden_dims[i], in_dim));
    in_dim = spec_.hidden_dims[i];
  }
  mu_idx_ = add_layer("mu", spec_.latent_dim, in_dim);
  if (has_gaussian_head()) {
    logvar_idx_ = add_layer("logvar", spec_.latent_dim, in_dim);
  }
  in_dim = decoder_input_dim();
  for (std::size_t i = 0; i < spec_.hidden_dims.size(); ++i) {
    const std::size_t h = spec_.hidden_dims[spec_.hidden_dims.size() - 1 - i];
    dec_idx_.push_back(add_layer("dec" + std::to_string(i), h, in_dim));
    in_dim = h;
  }
  out_idx_ = add_layer("out", spec_.input_dim, in_dim);
}

void SegmentAutoencoder::check_condition(const ConditionVector* condition) const {
  if (spec_.kind == ModelKind::cvae) {
    if (condition == nullptr) {
      throw ParameterError("model-kind mismatch: cvae requires a condition vector");
    }
    if (condition->size() != spec_.condition_dim) {
      throw DimensionError("condition length " + std::to_string(condition->size()) +
                           " != condition_dim " + std::to_string(spec_.condition_dim));
    }
  } else if (condition != nullptr) {
    throw ParameterError("model-kind mismatch: " + to_string(spec_.kind) +
                         " takes no condition vector");
  }
}

Matrix SegmentAutoencoder::make_encoder_input(const Matrix& batch,
                                              const Matrix* conditions) const {
  if (batch.cols != spec_.input_dim) {
    throw DimensionError("encode: segment length " + std::to_string(batch.cols) +
                         " != input_dim " + std::to_string(spec_.input_dim));
  }
  if (spec_.kind != ModelKind::cvae) {
    if (conditions != nullptr) {
      throw ParameterError("model-kind mismatch: " + to_string(spec_.kind) +
                           " takes no condition vectors");
    }
    return batch;
  }
  if (conditions == nullptr) {
    throw ParameterError("model-kind mismatch: cvae requires condition vectors");
  }
  if (conditions->rows != batch.rows || conditions->cols != spec_.condition_dim) {
    throw DimensionError("encode: condition batch shape mismatch");
  }
  Matrix joined(batch.rows, batch.cols + conditions->cols);
  for (std::size_t i = 0; i < batch.rows; ++i) {
    double* dst = joined.row(i);
    std::copy(batch.row(i), batch.row(i) + batch.cols, dst);
    std::copy(conditions->row(i), conditions->row(i) + conditions->cols,
              dst + batch.cols);
  }
  return joined;
}

Matrix SegmentAutoencoder::make_decoder_input(const Matrix& z,
                                              const Matrix* conditions) const {
  if (spec_.kind != ModelKind::cvae) return z;
  Matrix joined(z.rows, z.cols + conditions->cols);
  for (std::size_t i = 0; i < z.rows; ++i) {
    double* dst = joined.row(i);
    std::copy(z.row(i), z.row(i) + z.cols, dst);
    std::copy(conditions->row(i), conditions->row(i) + conditions->cols,
              dst + z.cols);
  }
  return joined;
}

void SegmentAutoencoder::forward(const Matrix& batch, const Matrix* conditions,
                                 const Matrix& delta, Cache& cache) const {
  cache.enc_in = make_encoder_input(batch, conditions);
  cache.enc_act.clear();
  const Matrix* act = &cache.enc_in;
  for (std::size_t i = 0; i < enc_idx_.size(); ++i) {
    Matrix h = linear_forward(*act, params_[enc_idx_[i]].value,
                              params_[enc_idx_[i] + 1].value);
    tanh_inplace(h);
    cache.enc_act.push_back(std::move(h));
    act = &cache.enc_act.back();
  }
  cache.mu = linear_forward(*act, params_[mu_idx_].value,
                            params_[mu_idx_ + 1].value);
  if (has_gaussian_head()) {
    cache.logvar_raw = linear_forward(*act, params_[logvar_idx_].value,
                                      params_[logvar_idx_ + 1].value);
    cache.logvar = cache.logvar_raw;
    for (double& v : cache.logvar.data) {
      v = std::clamp(v, -kLogVarClamp, kLogVarClamp);
    }
    cache.sigma = cache.logvar;
    for (double& v : cache.sigma.data) v = std::exp(0.5 * v);
    if (delta.rows != batch.rows || delta.cols != spec_.latent_dim) {
      throw DimensionError("forward: delta must be batch x latent_dim");
    }
    cache.z = cache.mu;
    for (std::size_t i = 0; i < cache.z.data.size(); ++i) {
      cache.z.data[i] += delta.data[i] * cache.sigma.data[i];
    }
  } else {
    cache.z = cache.mu;
  }
  cache.dec_in = make_decoder_input(cache.z, conditions);
  cache.dec_act.clear();
  act = &cache.dec_in;
  for (std::size_t i = 0; i < dec_idx_.size(); ++i) {
    Matrix h = linear_forward(*act, params_[dec_idx_[i]].value,
                              params_[dec_idx_[i] + 1].value);
    tanh_inplace(h);
    cache.dec_act.push_back(std::move(h));
    act = &cache.dec_act.back();
  }
  cache.xhat = linear_forward(*act, params_[out_idx_].value,
                              params_[out_idx_ + 1].value);
}

LossComponents SegmentAutoencoder::loss_from_cache(const Matrix& batch,
                                                   const Cache& cache,
                                                   double kl_weight) const {
  const double inv_b = 1.0 / static_cast<double>(batch.rows);
  LossComponents out;
  for (std::size_t i = 0; i < batch.data.size(); ++i) {
    const double d = batch.data[i] - cache.xhat.data[i];
    out.recon += d * d;
  }
  out.recon *= inv_b;
  if (has_gaussian_head()) {
    double kl = 0.0;
    for (std::size_t i = 0; i < cache.mu.data.size(); ++i) {
      const double mu = cache.mu.data[i];
      const double lv = cache.logvar.data[i];
      kl += mu * mu + std::exp(lv) - 1.0 - lv;
    }
    out.kl = 0.5 * kl * inv_b;
  }
  out.total = out.recon + kl_weight * out.kl;
  return out;
}

LatentParams SegmentAutoencoder::encode(std::span<const double> x,
                                        const ConditionVector* condition) const {
  check_condition(condition);
  Matrix batch = Matrix::row_vector(x);
  Matrix cond;
  const Matrix* cond_ptr = nullptr;
  if (spec_.kind == ModelKind::cvae) {
    cond = Matrix::row_vector(*condition);
    cond_ptr = &cond;
  }
  const Matrix input = make_encoder_input(batch, cond_ptr);
  const Matrix* act = &input;
  Matrix h;
  for (std::size_t i = 0; i < enc_idx_.size(); ++i) {
    h = linear_forward(*act, params_[enc_idx_[i]].value,
                       params_[enc_idx_[i] + 1].value);
    tanh_inplace(h);
    act = &h;
  }
  LatentParams lp;
  Matrix mu = linear_forward(*act, params_[mu_idx_].value,
                             params_[mu_idx_ + 1].value);
  lp.mu = std::move(mu.data);
  if (has_gaussian_head()) {
    Matrix lv = linear_forward(*act, params_[logvar_idx_].value,
                               params_[logvar_idx_ + 1].value);
    for (double& v : lv.data) v = std::clamp(v, -kLogVarClamp, kLogVarClamp);
    lp.log_var = std::move(lv.data);
  }
  return lp;
}

std::vector<double> SegmentAutoencoder::decode(std::span<const double> z,
                                               const ConditionVector* condition) const {
  check_condition(condition);
  if (z.size() != spec_.latent_dim) {
    throw DimensionError("decode: latent length " + std::to_string(z.size()) +
                         " != latent_dim " + std::to_string(spec_.latent_dim));
  }
  std::vector<double> input(z.begin(), z.end());
  if (spec_.kind == ModelKind::cvae) {
    input = concat(z, *condition);
  }
  Matrix act = Matrix::row_vector(input);
  for (std::size_t i = 0; i < dec_idx_.size(); ++i) {
    act = linear_forward(act, params_[dec_idx_[i]].value,
                         params_[dec_idx_[i] + 1].value);
    tanh_inplace(act);
  }
  Matrix out = linear_forward(act, params_[out_idx_].value,
                              params_[out_idx_ + 1].value);
  return std::move(out.data);
}

std::size_t SegmentAutoencoder::feature_length(FeatureMode mode) const {
  return mode == FeatureMode::mu_logvar ? 2 * spec_.latent_dim : spec_.latent_dim;
}

std::vector<double> SegmentAutoencoder::extract_features(
    std::span<const double> x, const ConditionVector* condition,
    FeatureMode mode, RngStream* rng) const {
  if (!has_gaussian_head() && mode != FeatureMode::mu) {
    throw ParameterError("feature mode '" + to_string(mode) +
                         "' is unsupported for the plain autoencoder (use mu)");
  }
  LatentParams lp = encode(x, condition);
  switch (mode) {
    case FeatureMode::mu:
      return std::move(lp.mu);
    case FeatureMode::mu_logvar: {
      std::vector<double> out = std::move(lp.mu);
      out.insert(out.end(), lp.log_var.begin(), lp.log_var.end());
      return out;
    }
    case FeatureMode::sample: {
      if (rng == nullptr) {
        throw ParameterError("feature mode 'sample' needs an RngStream");
      }
      return reparameterize(lp, *rng);
    }
  }
  throw ParameterError("unknown feature mode");
}

LossComponents SegmentAutoencoder::evaluate_loss(const Matrix& batch,
                                                 const Matrix* conditions,
                                                 const Matrix& delta,
                                                 double kl_weight) const {
  Cache cache;
  forward(batch, conditions, delta, cache);
  return loss_from_cache(batch, cache, kl_weight);
}

LossComponents SegmentAutoencoder::accumulate_gradients(const Matrix& batch,
                                                        const Matrix* conditions,
                                                        const Matrix& delta,
                                                        double kl_weight) {
  Cache cache;
  forward(batch, conditions, delta, cache);
  const LossComponents loss = loss_from_cache(batch, cache, kl_weight);

  const double inv_b = 1.0 / static_cast<double>(batch.rows);

  // d total / d xhat = (2/B)(xhat - x)
  Matrix g = cache.xhat;
  for (std::size_t i = 0; i < g.data.size(); ++i) {
    g.data[i] = 2.0 * inv_b * (cache.xhat.data[i] - batch.data[i]);
  }

  auto backprop_linear = [&](std::size_t idx, const Matrix& input,
                             const Matrix& grad_out) {
    add_inplace(params_[idx].grad, matmul_at_b(grad_out, input));
    add_inplace(params_[idx + 1].grad, column_sums(grad_out));
    return matmul(grad_out, params_[idx].value);
  };

  // Output layer, then decoder hidden layers in reverse.
  const Matrix& out_input =
      dec_idx_.empty() ? cache.dec_in : cache.dec_act.back();
  Matrix a = backprop_linear(out_idx_, out_input, g);
  for (std::size_t i = dec_idx_.size(); i-- > 0;) {
    const Matrix& act = cache.dec_act[i];
    for (std::size_t k = 0; k < a.data.size(); ++k) {
      a.data[k] *= 1.0 - act.data[k] * act.data[k];
    }
    const Matrix& input = i == 0 ? cache.dec_in : cache.dec_act[i - 1];
    a = backprop_linear(dec_idx_[i], input, a);
  }

  // a is now d/d dec_in; its first latent_dim columns are dz (the condition
  // columns are data, not parameters).
  Matrix dz(batch.rows, spec_.latent_dim);
  for (std::size_t i = 0; i < batch.rows; ++i) {
    std::copy(a.row(i), a.row(i) + spec_.latent_dim, dz.row(i));
  }

  const Matrix& head_input =
      enc_idx_.empty() ? cache.enc_in : cache.enc_act.back();
  Matrix dmu = dz;
  Matrix da;
  if (has_gaussian_head()) {
    // z = mu + delta (.) sigma, sigma = exp(0.5 lv):
    //   dz/dmu = 1, dz/dlv = 0.5 delta (.) sigma.
    // KL adds (w/B) mu and (w/B) 0.5 (exp(lv) - 1).
    for (std::size_t i = 0; i < dmu.data.size(); ++i) {
      dmu.data[i] += kl_weight * inv_b * cache.mu.data[i];
    }
    Matrix dlv(dz.rows, dz.cols);
    for (std::size_t i = 0; i < dlv.data.size(); ++i) {
      double v = dz.data[i] * delta.data[i] * 0.5 * cache.sigma.data[i];
      v += kl_weight * inv_b * 0.5 * (std::exp(cache.logvar.data[i]) - 1.0);
      // The clamp blocks gradient outside [-kLogVarClamp, kLogVarClamp].
      if (std::abs(cache.logvar_raw.data[i]) >= kLogVarClamp) v = 0.0;
      dlv.data[i] = v;
    }
    da = backprop_linear(mu_idx_, head_input, dmu);
    add_inplace(da, backprop_linear(logvar_idx_, head_input, dlv));
  } else {
    da = backprop_linear(mu_idx_, head_input, dmu);
  }

  for (std::size_t i = enc_idx_.size(); i-- > 0;) {
    const Matrix& act = cache.enc_act[i];
    for (std::size_t k = 0; k < da.data.size(); ++k) {
      da.data[k] *= 1.0 - act.data[k] * act.data[k];
    }
    const Matrix& input = i == 0 ? cache.enc_in : cache.enc_act[i - 1];
    da = backprop_linear(enc_idx_[i], input, da);
  }

  return loss;
}

LossComponents SegmentAutoencoder::train_step(const Matrix& batch,
                                              const Matrix* conditions,
                                              RngStream& rng, AdamConfig& adam,
                                              double kl_weight,
                                              bool freeze_delta_zero) {
  if (batch.rows == 0) throw ParameterError("train_step: empty batch");
  Matrix delta(batch.rows, spec_.latent_dim, 0.0);
  if (has_gaussian_head() && !freeze_delta_zero) {
    for (double& v : delta.data) v = rng.next_normal();
  }
  const LossComponents loss =
      accumulate_gradients(batch, conditions, delta, kl_weight);
  if (!std::isfinite(loss.total)) {
    throw NumericError("train_step: non-finite loss on batch of " +
                       std::to_string(batch.rows) + " segments; aborting");
  }
  adam_step_all(params_, adam);
  return loss;
}

std::vector<EpochLoss> SegmentAutoencoder::fit(const Matrix& segments,
                                               const Matrix* conditions,
                                               const FitConfig& cfg,
                                               RngStream& rng) {
  if (segments.rows == 0) throw ParameterError("fit: empty dataset");
  if (cfg.batch_size == 0) throw ParameterError("fit: batch_size must be >= 1");
  if (spec_.kind == ModelKind::cvae &&
      (conditions == nullptr || conditions->rows != segments.rows)) {
    throw ParameterError("fit: cvae needs one condition row per segment");
  }

  AdamConfig adam = cfg.adam;
  std::vector<std::size_t> order(segments.rows);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  std::vector<EpochLoss> history;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    shuffle_indices(order, rng);
    double sum_total = 0.0, sum_recon = 0.0, sum_kl = 0.0;
    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const std::size_t b = std::min(cfg.batch_size, order.size() - start);
      Matrix batch(b, segments.cols);
      Matrix cond;
      if (spec_.kind == ModelKind::cvae) cond = Matrix(b, conditions->cols);
      for (std::size_t i = 0; i < b; ++i) {
        const std::size_t src = order[start + i];
        std::copy(segments.row(src), segments.row(src) + segments.cols,
                  batch.row(i));
        if (spec_.kind == ModelKind::cvae) {
          std::copy(conditions->row(src), conditions->row(src) + conditions->cols,
                    cond.row(i));
        }
      }
      const Matrix* cond_ptr = spec_.kind == ModelKind::cvae ? &cond : nullptr;
      const LossComponents loss = train_step(batch, cond_ptr, rng, adam,
                                             cfg.kl_weight, cfg.freeze_delta_zero);
      sum_total += loss.total * static_cast<double>(b);
      sum_recon += loss.recon * static_cast<double>(b);
      sum_kl += loss.kl * static_cast<double>(b);
    }
    const double n = static_cast<double>(segments.rows);
    history.push_back({sum_total / n, sum_recon / n, sum_kl / n});
    if (cfg.recon_threshold && history.back().recon < *cfg.recon_threshold) {
      break;
    }
  }
  return history;
}

Parameter& SegmentAutoencoder::parameter(const std::string& name) {
  for (Parameter& p : params_) {
    if (p.name == name) return p;
  }
  throw ParameterError("no parameter named '" + name + "'");
}

void SegmentAutoencoder::append_to_checkpoint(Checkpoint& cp) const {
  cp.meta["model_kind"] = to_string(spec_.kind);
  cp.meta["input_dim"] = std::to_string(spec_.input_dim);
  std::string hidden;
  for (std::size_t h : spec_.hidden_dims) {
    if (!hidden.empty()) hidden += ",";
    hidden += std::to_string(h);
  }
  cp.meta["hidden_dims"] = hidden;
  cp.meta["latent_dim"] = std::to_string(spec_.latent_dim);
  cp.meta["condition_dim"] = std::to_string(spec_.condition_dim);
  for (const Parameter& p : params_) {
    cp.add("model/" + p.name, p.value);
  }
}

SegmentAutoencoder SegmentAutoencoder::from_checkpoint(const Checkpoint& cp) {
  EncoderDecoderSpec spec;
  spec.kind = model_kind_from_string(cp.meta.at("model_kind"));
  spec.input_dim = std::stoul(cp.meta.at("input_dim"));
  spec.latent_dim = std::stoul(cp.meta.at("latent_dim"));
  spec.condition_dim = std::stoul(cp.meta.at("condition_dim"));
  spec.hidden_dims.clear();
  const std::string& hidden = cp.meta.at("hidden_dims");
  for (std::size_t pos = 0; pos < hidden.size();) {
    const std::size_t comma = hidden.find(',', pos);
    const std::string tok = hidden.substr(pos, comma - pos);
    spec.hidden_dims.push_back(std::stoul(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  SegmentAutoencoder model(spec, 0);
  for (Parameter& p : model.params_) {
    const Matrix& t = cp.tensor("model/" + p.name);
    if (!t.same_shape(p.value)) {
      throw FormatError("checkpoint tensor 'model/" + p.name + "' has wrong shape");
    }
    p.value = t;
  }
  return model;
}

void SegmentAutoencoder::save(const std::filesystem::path& path) const {
  Checkpoint cp;
  append_to_checkpoint(cp);
  cp.save(path);
}

SegmentAutoencoder SegmentAutoencoder::load(const std::filesystem::path& path) {
  return from_checkpoint(Checkpoint::load(path));
}

}  // namespace emovae
