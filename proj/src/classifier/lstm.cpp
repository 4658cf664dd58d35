#include "emovae/classifier/lstm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "emovae/error.hpp"

namespace emovae {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<double> softmax(std::span<const double> logits) {
  double max_logit = -std::numeric_limits<double>::infinity();
  for (double v : logits) max_logit = std::max(max_logit, v);
  std::vector<double> p(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - max_logit);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

double log_sum_exp(std::span<const double> logits) {
  double max_logit = -std::numeric_limits<double>::infinity();
  for (double v : logits) max_logit = std::max(max_logit, v);
  double sum = 0.0;
  for (double v : logits) sum += std::exp(v - max_logit);
  return max_logit + std::log(sum);
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

std::string to_string(Readout r) {
  return r == Readout::final_state ? "final" : "mean";
}

Readout readout_from_string(const std::string& name) {
  if (name == "final") return Readout::final_state;
  if (name == "mean") return Readout::mean_pool;
  throw ParameterError("unknown readout '" + name + "' (want final|mean)");
}

void ClassifierSpec::validate() const {
  if (input_dim < 1) throw ParameterError("classifier spec: input_dim must be >= 1");
  if (n_classes < 2) throw ParameterError("classifier spec: n_classes must be >= 2");
  for (std::size_t h : lstm_hidden) {
    if (h < 1) throw ParameterError("classifier spec: hidden sizes must be >= 1");
  }
}

std::pair<std::vector<double>, std::vector<double>> lstm_cell(
    std::span<const double> x_t, std::span<const double> h_prev,
    std::span<const double> c_prev, const LstmLayerParams& params) {
  const std::size_t h = params.hidden_size;
  if (params.w.rows != 4 * h || params.u.rows != 4 * h || params.b.cols != 4 * h ||
      params.u.cols != h || x_t.size() != params.w.cols || h_prev.size() != h ||
      c_prev.size() != h) {
    throw DimensionError("lstm_cell: inconsistent shapes");
  }
  std::vector<double> pre(4 * h);
  for (std::size_t r = 0; r < 4 * h; ++r) {
    double acc = params.b(0, r);
    const double* wr = params.w.row(r);
    for (std::size_t k = 0; k < x_t.size(); ++k) acc += wr[k] * x_t[k];
    const double* ur = params.u.row(r);
    for (std::size_t k = 0; k < h; ++k) acc += ur[k] * h_prev[k];
    pre[r] = acc;
  }
  std::vector<double> h_t(h), c_t(h);
  for (std::size_t j = 0; j < h; ++j) {
    const double i = sigmoid(pre[j]);
    const double f = sigmoid(pre[h + j]);
    const double g = std::tanh(pre[2 * h + j]);
    const double o = sigmoid(pre[3 * h + j]);
    c_t[j] = f * c_prev[j] + i * g;
    h_t[j] = o * std::tanh(c_t[j]);
  }
  return {std::move(h_t), std::move(c_t)};
}

struct LstmClassifier::LayerCache {
  std::size_t hidden = 0;
  Matrix x_all;       // (T*B) x in
  Matrix h_prev_all;  // (T*B) x h
  Matrix gates_all;   // (T*B) x 4h, post-activation i|f|g|o
  Matrix c_hat_all;   // (T*B) x h
  Matrix tanh_c_all;  // (T*B) x h
  Matrix c_prev_all;  // (T*B) x h
  Matrix h_out_all;   // (T*B) x h, after the mask carry-through
};

struct LstmClassifier::BatchCache {
  std::size_t batch = 0;
  std::size_t t_max = 0;
  std::vector<std::size_t> lengths;
  std::array<LayerCache, 2> layers;
  Matrix readout;  // B x h2
  Matrix logits;   // B x n_classes
};

LstmClassifier::LstmClassifier(ClassifierSpec spec, std::uint64_t seed)
    : spec_(spec) {
  spec_.validate();
  RngStream rng(seed);

  auto init_uniform = [&](Matrix& m, double r) {
    for (double& v : m.data) v = (2.0 * rng.next_uniform() - 1.0) * r;
  };

  std::size_t in_dim = spec_.input_dim;
  for (std::size_t l = 0; l < 2; ++l) {
    const std::size_t h = spec_.lstm_hidden[l];
    Matrix w(4 * h, in_dim);
    init_uniform(w, std::sqrt(6.0 / static_cast<double>(in_dim + h)));
    Matrix u(4 * h, h);
    init_uniform(u, std::sqrt(6.0 / static_cast<double>(h + h)));
    Matrix b(1, 4 * h, 0.0);
    for (std::size_t j = 0; j < h; ++j) b(0, h + j) = 1.0;  // forget-gate bias
    const std::string prefix = "l" + std::to_string(l);
    params_.emplace_back(prefix + ".w", std::move(w));
    params_.emplace_back(prefix + ".u", std::move(u));
    params_.emplace_back(prefix + ".b", std::move(b));
    in_dim = h;
  }
  Matrix dw(spec_.n_classes, spec_.lstm_hidden[1]);
  init_uniform(dw, std::sqrt(6.0 / static_cast<double>(spec_.lstm_hidden[1] +
                                                       spec_.n_classes)));
  params_.emplace_back("dense.w", std::move(dw));
  params_.emplace_back("dense.b", Matrix(1, spec_.n_classes, 0.0));
}

void LstmClassifier::forward_batch(std::span<const SequenceExample* const> batch,
                                   BatchCache& cache) const {
  const std::size_t b_size = batch.size();
  if (b_size == 0) throw ParameterError("forward: empty batch");
  cache.batch = b_size;
  cache.lengths.resize(b_size);
  cache.t_max = 0;
  for (std::size_t b = 0; b < b_size; ++b) {
    const SequenceExample& ex = *batch[b];
    if (ex.features.rows == 0) {
      throw ParameterError("forward: empty sequence" +
                           (ex.utterance_id.empty() ? std::string()
                                                    : " (utterance " + ex.utterance_id + ")"));
    }
    if (ex.features.cols != spec_.input_dim) {
      throw DimensionError("forward: feature width " +
                           std::to_string(ex.features.cols) + " != input_dim " +
                           std::to_string(spec_.input_dim));
    }
    cache.lengths[b] = ex.features.rows;
    cache.t_max = std::max(cache.t_max, ex.features.rows);
  }
  const std::size_t t_max = cache.t_max;

  // Right-padded input block, row index t * B + b.
  Matrix x_all(t_max * b_size, spec_.input_dim, 0.0);
  for (std::size_t b = 0; b < b_size; ++b) {
    const Matrix& f = batch[b]->features;
    for (std::size_t t = 0; t < f.rows; ++t) {
      std::copy(f.row(t), f.row(t) + f.cols, x_all.row(t * b_size + b));
    }
  }

  Matrix mean_acc;
  for (std::size_t l = 0; l < 2; ++l) {
    LayerCache& lc = cache.layers[l];
    const std::size_t h = spec_.lstm_hidden[l];
    lc.hidden = h;
    lc.x_all = std::move(x_all);
    const Matrix& w = params_[layer_idx(l)].value;
    const Matrix& u = params_[layer_idx(l) + 1].value;
    const Matrix& bias = params_[layer_idx(l) + 2].value;

    const Matrix pre_x = matmul_a_bt(lc.x_all, w);  // (T*B) x 4h
    lc.h_prev_all = Matrix(t_max * b_size, h);
    lc.gates_all = Matrix(t_max * b_size, 4 * h);
    lc.c_hat_all = Matrix(t_max * b_size, h);
    lc.tanh_c_all = Matrix(t_max * b_size, h);
    lc.c_prev_all = Matrix(t_max * b_size, h);
    lc.h_out_all = Matrix(t_max * b_size, h);

    Matrix h_state(b_size, h, 0.0);
    Matrix c_state(b_size, h, 0.0);
    if (l == 1 && spec_.readout == Readout::mean_pool) {
      mean_acc = Matrix(b_size, h, 0.0);
    }
    for (std::size_t t = 0; t < t_max; ++t) {
      const std::size_t base = t * b_size;
      std::copy(h_state.data.begin(), h_state.data.end(),
                lc.h_prev_all.data.begin() + base * h);
      std::copy(c_state.data.begin(), c_state.data.end(),
                lc.c_prev_all.data.begin() + base * h);
      Matrix pre = matmul_a_bt(h_state, u);  // B x 4h
      for (std::size_t b = 0; b < b_size; ++b) {
        double* prow = pre.row(b);
        const double* pxrow = pre_x.row(base + b);
        const double* brow = bias.row(0);
        for (std::size_t j = 0; j < 4 * h; ++j) prow[j] += pxrow[j] + brow[j];
      }
      for (std::size_t b = 0; b < b_size; ++b) {
        const bool valid = t < cache.lengths[b];
        const double* prow = pre.row(b);
        double* grow = lc.gates_all.row(base + b);
        double* chat = lc.c_hat_all.row(base + b);
        double* tc = lc.tanh_c_all.row(base + b);
        double* hs = h_state.row(b);
        double* cs = c_state.row(b);
        double* hout = lc.h_out_all.row(base + b);
        for (std::size_t j = 0; j < h; ++j) {
          const double gi = sigmoid(prow[j]);
          const double gf = sigmoid(prow[h + j]);
          const double gg = std::tanh(prow[2 * h + j]);
          const double go = sigmoid(prow[3 * h + j]);
          grow[j] = gi;
          grow[h + j] = gf;
          grow[2 * h + j] = gg;
          grow[3 * h + j] = go;
          const double c_new = gf * cs[j] + gi * gg;
          chat[j] = c_new;
          const double tanh_c = std::tanh(c_new);
          tc[j] = tanh_c;
          const double h_new = go * tanh_c;
          if (valid) {
            cs[j] = c_new;
            hs[j] = h_new;
          }
          hout[j] = hs[j];
        }
        if (l == 1 && spec_.readout == Readout::mean_pool && valid) {
          double* acc = mean_acc.row(b);
          for (std::size_t j = 0; j < h; ++j) acc[j] += hs[j];
        }
      }
    }
    if (l == 0) {
      x_all = lc.h_out_all;  // feeds layer 1
    } else {
      if (spec_.readout == Readout::mean_pool) {
        for (std::size_t b = 0; b < b_size; ++b) {
          double* acc = mean_acc.row(b);
          const double inv = 1.0 / static_cast<double>(cache.lengths[b]);
          for (std::size_t j = 0; j < h; ++j) acc[j] *= inv;
        }
        cache.readout = std::move(mean_acc);
      } else {
        cache.readout = std::move(h_state);
      }
    }
  }

  cache.logits = matmul_a_bt(cache.readout, params_[dense_idx()].value);
  const Matrix& db = params_[dense_idx() + 1].value;
  for (std::size_t b = 0; b < b_size; ++b) {
    double* row = cache.logits.row(b);
    for (std::size_t j = 0; j < spec_.n_classes; ++j) row[j] += db(0, j);
  }
}

std::vector<double> LstmClassifier::batch_losses(
    const BatchCache& cache, std::span<const SequenceExample* const> batch) const {
  std::vector<double> losses(batch.size());
  for (std::size_t b = 0; b < batch.size(); ++b) {
    if (batch[b]->label >= spec_.n_classes) {
      throw ParameterError("label " + std::to_string(batch[b]->label) +
                           " out of range for " + std::to_string(spec_.n_classes) +
                           " classes");
    }
    const auto row = cache.logits.row_span(b);
    losses[b] = log_sum_exp(row) - row[batch[b]->label];
  }
  return losses;
}

std::vector<double> LstmClassifier::forward(const Matrix& features) const {
  SequenceExample ex{"", features, 0};
  const SequenceExample* ptr = &ex;
  BatchCache cache;
  forward_batch({&ptr, 1}, cache);
  return softmax(cache.logits.row_span(0));
}

std::size_t LstmClassifier::predict(const Matrix& features) const {
  const std::vector<double> p = forward(features);
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[best]) best = i;
  }
  return best;
}

std::vector<double> LstmClassifier::per_sequence_losses(
    std::span<const SequenceExample* const> batch) const {
  BatchCache cache;
  forward_batch(batch, cache);
  return batch_losses(cache, batch);
}

double LstmClassifier::evaluate_batch_loss(
    std::span<const SequenceExample* const> batch) const {
  const auto losses = per_sequence_losses(batch);
  double sum = 0.0;
  for (double l : losses) sum += l;
  return sum / static_cast<double>(losses.size());
}

double LstmClassifier::mean_loss(std::span<const SequenceExample> examples) const {
  if (examples.empty()) throw ParameterError("mean_loss: empty set");
  double sum = 0.0;
  constexpr std::size_t kChunk = 32;
  std::vector<const SequenceExample*> ptrs;
  for (std::size_t start = 0; start < examples.size(); start += kChunk) {
    ptrs.clear();
    const std::size_t end = std::min(examples.size(), start + kChunk);
    for (std::size_t i = start; i < end; ++i) ptrs.push_back(&examples[i]);
    for (double l : per_sequence_losses(ptrs)) sum += l;
  }
  return sum / static_cast<double>(examples.size());
}

double LstmClassifier::accumulate_gradients(
    std::span<const SequenceExample* const> batch) {
  BatchCache cache;
  forward_batch(batch, cache);
  const auto losses = batch_losses(cache, batch);
  double mean = 0.0;
  for (double l : losses) mean += l;
  mean /= static_cast<double>(losses.size());

  const std::size_t b_size = cache.batch;
  const std::size_t t_max = cache.t_max;
  const double inv_b = 1.0 / static_cast<double>(b_size);

  // dL/dlogits = (softmax - onehot) / B
  Matrix dlogits(b_size, spec_.n_classes);
  for (std::size_t b = 0; b < b_size; ++b) {
    const std::vector<double> p = softmax(cache.logits.row_span(b));
    double* row = dlogits.row(b);
    for (std::size_t j = 0; j < spec_.n_classes; ++j) {
      row[j] = (p[j] - (j == batch[b]->label ? 1.0 : 0.0)) * inv_b;
    }
  }
  add_inplace(params_[dense_idx()].grad, matmul_at_b(dlogits, cache.readout));
  add_inplace(params_[dense_idx() + 1].grad, column_sums(dlogits));
  const Matrix dreadout = matmul(dlogits, params_[dense_idx()].value);  // B x h2

  // External per-step gradient for the top layer.
  Matrix ext(t_max * b_size, spec_.lstm_hidden[1], 0.0);
  if (spec_.readout == Readout::final_state) {
    const std::size_t base = (t_max - 1) * b_size;
    for (std::size_t b = 0; b < b_size; ++b) {
      std::copy(dreadout.row(b), dreadout.row(b) + dreadout.cols,
                ext.row(base + b));
    }
  } else {
    for (std::size_t b = 0; b < b_size; ++b) {
      const double inv_len = 1.0 / static_cast<double>(cache.lengths[b]);
      for (std::size_t t = 0; t < cache.lengths[b]; ++t) {
        double* dst = ext.row(t * b_size + b);
        const double* src = dreadout.row(b);
        for (std::size_t j = 0; j < dreadout.cols; ++j) dst[j] = src[j] * inv_len;
      }
    }
  }

  for (std::size_t l = 2; l-- > 0;) {
    const LayerCache& lc = cache.layers[l];
    const std::size_t h = lc.hidden;
    const Matrix& u = params_[layer_idx(l) + 1].value;

    Matrix dpre_all(t_max * b_size, 4 * h, 0.0);
    Matrix dh_carry(b_size, h, 0.0);
    Matrix dc_carry(b_size, h, 0.0);
    Matrix dpre_t(b_size, 4 * h);
    for (std::size_t t = t_max; t-- > 0;) {
      const std::size_t base = t * b_size;
      for (std::size_t b = 0; b < b_size; ++b) {
        const bool valid = t < cache.lengths[b];
        const double* grow = lc.gates_all.row(base + b);
        const double* tc = lc.tanh_c_all.row(base + b);
        const double* cprev = lc.c_prev_all.row(base + b);
        const double* extrow = ext.row(base + b);
        double* dh = dh_carry.row(b);
        double* dc = dc_carry.row(b);
        double* dpre = dpre_t.row(b);
        for (std::size_t j = 0; j < h; ++j) {
          const double dh_total = dh[j] + extrow[j];
          const double dc_total = dc[j];
          if (!valid) {
            // Masked step: state carried through unchanged.
            dh[j] = dh_total;
            dc[j] = dc_total;
            for (std::size_t gate = 0; gate < 4; ++gate) dpre[gate * h + j] = 0.0;
            continue;
          }
          const double gi = grow[j];
          const double gf = grow[h + j];
          const double gg = grow[2 * h + j];
          const double go = grow[3 * h + j];
          const double dc_hat = dc_total + dh_total * go * (1.0 - tc[j] * tc[j]);
          const double d_o = dh_total * tc[j];
          const double d_i = dc_hat * gg;
          const double d_g = dc_hat * gi;
          const double d_f = dc_hat * cprev[j];
          dpre[j] = d_i * gi * (1.0 - gi);
          dpre[h + j] = d_f * gf * (1.0 - gf);
          dpre[2 * h + j] = d_g * (1.0 - gg * gg);
          dpre[3 * h + j] = d_o * go * (1.0 - go);
          dc[j] = dc_hat * gf;
          dh[j] = 0.0;  // recurrent part added below
        }
      }
      const Matrix drec = matmul(dpre_t, u);  // B x h
      for (std::size_t b = 0; b < b_size; ++b) {
        double* dh = dh_carry.row(b);
        const double* dr = drec.row(b);
        for (std::size_t j = 0; j < h; ++j) dh[j] += dr[j];
        std::copy(dpre_t.row(b), dpre_t.row(b) + 4 * h, dpre_all.row(base + b));
      }
    }
    add_inplace(params_[layer_idx(l)].grad, matmul_at_b(dpre_all, lc.x_all));
    add_inplace(params_[layer_idx(l) + 1].grad,
                matmul_at_b(dpre_all, lc.h_prev_all));
    add_inplace(params_[layer_idx(l) + 2].grad, column_sums(dpre_all));
    if (l > 0) {
      ext = matmul(dpre_all, params_[layer_idx(l)].value);  // (T*B) x in
    }
  }
  return mean;
}

std::vector<ClassifierEpoch> LstmClassifier::train(
    std::span<const SequenceExample> train_set,
    std::span<const SequenceExample> val_set,
    const ClassifierTrainSettings& settings, RngStream& rng) {
  if (train_set.empty() || val_set.empty()) {
    throw ParameterError("train: train and validation sets must be non-empty");
  }
  if (settings.batch_size == 0) throw ParameterError("train: batch_size must be >= 1");

  AdamConfig adam = settings.adam;
  std::vector<std::size_t> order(train_set.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  double best_val = std::numeric_limits<double>::infinity();
  std::vector<Matrix> best_values;
  std::size_t epochs_since_best = 0;
  std::vector<ClassifierEpoch> history;

  for (std::size_t epoch = 0; epoch < settings.max_epochs; ++epoch) {
    shuffle_indices(order, rng);
    double train_loss_sum = 0.0;
    std::vector<const SequenceExample*> batch;
    for (std::size_t start = 0; start < order.size(); start += settings.batch_size) {
      batch.clear();
      const std::size_t end = std::min(order.size(), start + settings.batch_size);
      for (std::size_t i = start; i < end; ++i) batch.push_back(&train_set[order[i]]);
      const double loss = accumulate_gradients(batch);
      if (!std::isfinite(loss)) {
        throw NumericError("train: non-finite loss in epoch " +
                           std::to_string(epoch + 1));
      }
      train_loss_sum += loss * static_cast<double>(batch.size());
      adam_step_all(params_, adam);
    }
    const double train_loss = train_loss_sum / static_cast<double>(train_set.size());
    const double val_loss = mean_loss(val_set);
    history.push_back({train_loss, val_loss});

    if (val_loss < best_val) {
      best_val = val_loss;
      best_values.clear();
      for (const Parameter& p : params_) best_values.push_back(p.value);
      epochs_since_best = 0;
    } else {
      ++epochs_since_best;
      if (epochs_since_best >= settings.patience) break;
    }
  }

  if (!best_values.empty()) {
    for (std::size_t i = 0; i < params_.size(); ++i) {
      params_[i].value = best_values[i];
    }
  }
  return history;
}

Parameter& LstmClassifier::parameter(const std::string& name) {
  for (Parameter& p : params_) {
    if (p.name == name) return p;
  }
  throw ParameterError("no parameter named '" + name + "'");
}

void LstmClassifier::append_to_checkpoint(Checkpoint& cp) const {
  cp.meta["clf_input_dim"] = std::to_string(spec_.input_dim);
  cp.meta["clf_hidden0"] = std::to_string(spec_.lstm_hidden[0]);
  cp.meta["clf_hidden1"] = std::to_string(spec_.lstm_hidden[1]);
  cp.meta["clf_n_classes"] = std::to_string(spec_.n_classes);
  cp.meta["clf_readout"] = to_string(spec_.readout);
  for (const Parameter& p : params_) cp.add("clf/" + p.name, p.value);
}

LstmClassifier LstmClassifier::from_checkpoint(const Checkpoint& cp) {
  ClassifierSpec spec;
  spec.input_dim = std::stoul(cp.meta.at("clf_input_dim"));
  spec.lstm_hidden[0] = std::stoul(cp.meta.at("clf_hidden0"));
  spec.lstm_hidden[1] = std::stoul(cp.meta.at("clf_hidden1"));
  spec.n_classes = std::stoul(cp.meta.at("clf_n_classes"));
  spec.readout = readout_from_string(cp.meta.at("clf_readout"));
  LstmClassifier clf(spec, 0);
  for (Parameter& p : clf.params_) {
    const Matrix& t = cp.tensor("clf/" + p.name);
    if (!t.same_shape(p.value)) {
      throw FormatError("checkpoint tensor 'clf/" + p.name + "' has wrong shape");
    }
    p.value = t;
  }
  return clf;
}

void LstmClassifier::save(const std::filesystem::path& path) const {
  Checkpoint cp;
  append_to_checkpoint(cp);
  cp.save(path);
}

LstmClassifier LstmClassifier::load(const std::filesystem::path& path) {
  return from_checkpoint(Checkpoint::load(path));
}

}  // namespace emovae
