#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emovae/numeric/adam.hpp"
#include "emovae/numeric/checkpoint.hpp"
#include "emovae/numeric/matrix.hpp"
#include "emovae/numeric/rng.hpp"

namespace emovae {

// Gate weights of one LSTM layer, stacked row-wise in the order
// input, forget, cell, output: w is 4h x input_dim, u is 4h x h, b is 1 x 4h.
struct LstmLayerParams {
  Matrix w;
  Matrix u;
  Matrix b;
  std::size_t hidden_size = 0;
};

// Single cell step:
//   i = sig(Wi x + Ui h + bi), f = sig(...), g = tanh(...), o = sig(...)
//   c = f (.) c_prev + i (.) g,  h = o (.) tanh(c)
std::pair<std::vector<double>, std::vector<double>> lstm_cell(
    std::span<const double> x_t, std::span<const double> h_prev,
    std::span<const double> c_prev, const LstmLayerParams& params);

enum class Readout { final_state, mean_pool };

std::string to_string(Readout r);
Readout readout_from_string(const std::string& name);

struct ClassifierSpec {
  std::size_t input_dim = 256;
  std::array<std::size_t, 2> lstm_hidden{128, 128};
  std::size_t n_classes = 4;
  Readout readout = Readout::final_state;

  void validate() const;
};

struct SequenceExample {
  std::string utterance_id;
  Matrix features;  // T x input_dim, one row per segment in time order
  std::size_t label = 0;
};

struct ClassifierTrainSettings {
  std::size_t max_epochs = 20;
  std::size_t patience = 3;  // epochs without validation improvement
  std::size_t batch_size = 16;
  AdamConfig adam{.beta1 = 0.9, .beta2 = 0.999, .epsilon = 1e-8,
                  .learning_rate = 1e-3, .step_count = 0};
};

struct ClassifierEpoch {
  double train_loss = 0.0;
  double val_loss = 0.0;
};

// Two LSTM layers over an utterance's segment features, dense projection of
// the readout, softmax, cross-entropy. Sequences batch right-padded with a
// validity mask; masked steps carry h and c through unchanged, so the final
// state equals the state at each sequence's true last step.
class LstmClassifier {
 public:
  LstmClassifier(ClassifierSpec spec, std::uint64_t seed);

  const ClassifierSpec& spec() const { return spec_; }

  // Class probabilities for one sequence (T >= 1).
  std::vector<double> forward(const Matrix& features) const;
  // Argmax of forward; ties break toward the lowest class index.
  std::size_t predict(const Matrix& features) const;

  // BPTT training with early stopping on validation loss; returns per-epoch
  // history. The best-validation snapshot is restored before returning.
  std::vector<ClassifierEpoch> train(std::span<const SequenceExample> train_set,
                                     std::span<const SequenceExample> val_set,
                                     const ClassifierTrainSettings& settings,
                                     RngStream& rng);

  double mean_loss(std::span<const SequenceExample> examples) const;
  // Per-sequence cross-entropy of one padded batch (identical to evaluating
  // sequences one by one).
  std::vector<double> per_sequence_losses(
      std::span<const SequenceExample* const> batch) const;

  // Mean batch loss; gradients are added into each Parameter's grad buffer.
  double accumulate_gradients(std::span<const SequenceExample* const> batch);
  double evaluate_batch_loss(std::span<const SequenceExample* const> batch) const;

  std::vector<Parameter>& parameters() { return params_; }
  const std::vector<Parameter>& parameters() const { return params_; }
  Parameter& parameter(const std::string& name);

  void append_to_checkpoint(Checkpoint& cp) const;
  static LstmClassifier from_checkpoint(const Checkpoint& cp);
  void save(const std::filesystem::path& path) const;
  static LstmClassifier load(const std::filesystem::path& path);

 private:
  struct LayerCache;
  struct BatchCache;

  void forward_batch(std::span<const SequenceExample* const> batch,
                     BatchCache& cache) const;
  std::vector<double> batch_losses(const BatchCache& cache,
                                   std::span<const SequenceExample* const> batch) const;

  ClassifierSpec spec_;
  std::vector<Parameter> params_;
  // params_ layout: per layer w, u, b; then dense w, dense b.
  std::size_t layer_idx(std::size_t layer) const { return layer * 3; }
  std::size_t dense_idx() const { return 6; }
};

}  // namespace emovae
