#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emovae/numeric/adam.hpp"
#include "emovae/numeric/checkpoint.hpp"
#include "emovae/numeric/matrix.hpp"
#include "emovae/numeric/rng.hpp"

namespace emovae {

enum class ModelKind { autoencoder, vae, cvae };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct EncoderDecoderSpec {
  ModelKind kind = ModelKind::vae;
  std::size_t input_dim = 800;
  std::vector<std::size_t> hidden_dims{512, 256};  // decoder mirrors these
  std::size_t latent_dim = 128;
  std::size_t condition_dim = 0;  // class count for cvae, 0 otherwise

  void validate() const;
};

// Gaussian posterior parameters per segment. log_var is empty for the plain
// autoencoder, whose bottleneck has no distribution head.
struct LatentParams {
  std::vector<double> mu;
  std::vector<double> log_var;
};

enum class FeatureMode { mu, mu_logvar, sample };

std::string to_string(FeatureMode mode);
FeatureMode feature_mode_from_string(const std::string& name);

using ConditionVector = std::vector<double>;
ConditionVector one_hot(std::size_t length, std::size_t index);

// KL[N(mu, diag(exp(log_var))) || N(0, I)]
// = 0.5 * sum_j (mu_j^2 + exp(log_var_j) - 1 - log_var_j), always >= 0.
double kl_divergence(const LatentParams& lp);

// z = mu + delta (.) exp(0.5 log_var), delta drawn fresh from rng.
std::vector<double> reparameterize(const LatentParams& lp, RngStream& rng);

struct LossComponents {
  double total = 0.0;
  double recon = 0.0;
  double kl = 0.0;
};

// recon = sum_i (x_i - xhat_i)^2; total = recon + kl_weight * KL(lp).
// For latent params without a log_var head the KL term is zero.
LossComponents vae_loss(std::span<const double> x, std::span<const double> x_hat,
                        const LatentParams& lp, double kl_weight = 1.0);

struct FitConfig {
  std::size_t epochs = 20;
  std::size_t batch_size = 128;
  double kl_weight = 1.0;
  std::optional<double> recon_threshold;  // early exit when epoch recon drops below
  AdamConfig adam{};
  bool freeze_delta_zero = false;  // test hook: delta = 0 everywhere
};

struct EpochLoss {
  double total = 0.0;
  double recon = 0.0;
  double kl = 0.0;
};

// Fully connected segment autoencoder in three flavours: plain bottleneck
// (autoencoder), Gaussian latent (vae), and Gaussian latent with a one-hot
// class condition appended to both encoder and decoder inputs (cvae).
// Hidden layers are tanh; latent heads and the output layer are linear.
// All gradients are hand-derived; see accumulate_gradients.
class SegmentAutoencoder {
 public:
  SegmentAutoencoder(EncoderDecoderSpec spec, std::uint64_t seed);

  const EncoderDecoderSpec& spec() const { return spec_; }

  LatentParams encode(std::span<const double> x,
                      const ConditionVector* condition = nullptr) const;
  std::vector<double> decode(std::span<const double> z,
                             const ConditionVector* condition = nullptr) const;
  std::vector<double> extract_features(std::span<const double> x,
                                       const ConditionVector* condition,
                                       FeatureMode mode,
                                       RngStream* rng = nullptr) const;
  std::size_t feature_length(FeatureMode mode) const;

  // One optimizer step on a batch (rows of batch are segments, rows of
  // conditions the matching one-hots). Returns batch-mean loss components.
  LossComponents train_step(const Matrix& batch, const Matrix* conditions,
                            RngStream& rng, AdamConfig& adam, double kl_weight,
                            bool freeze_delta_zero = false);

  // Epoch loop with deterministic shuffling; stops early once the epoch-mean
  // reconstruction drops below cfg.recon_threshold (when set).
  std::vector<EpochLoss> fit(const Matrix& segments, const Matrix* conditions,
                             const FitConfig& cfg, RngStream& rng);

  // Loss with an externally fixed noise matrix (B x latent_dim; ignored for
  // the plain autoencoder). Shared by training, the equivalence tests, and
  // the finite-difference harness.
  LossComponents evaluate_loss(const Matrix& batch, const Matrix* conditions,
                               const Matrix& delta, double kl_weight) const;
  // Same forward pass, plus hand-derived gradients added into each
  // Parameter's grad buffer.
  LossComponents accumulate_gradients(const Matrix& batch,
                                      const Matrix* conditions,
                                      const Matrix& delta, double kl_weight);

  std::vector<Parameter>& parameters() { return params_; }
  const std::vector<Parameter>& parameters() const { return params_; }
  Parameter& parameter(const std::string& name);

  void append_to_checkpoint(Checkpoint& cp) const;
  static SegmentAutoencoder from_checkpoint(const Checkpoint& cp);
  void save(const std::filesystem::path& path) const;
  static SegmentAutoencoder load(const std::filesystem::path& path);

 private:
  struct Cache;

  std::size_t encoder_input_dim() const {
    return spec_.input_dim + spec_.condition_dim;
  }
  std::size_t decoder_input_dim() const {
    return spec_.latent_dim + spec_.condition_dim;
  }
  bool has_gaussian_head() const { return spec_.kind != ModelKind::autoencoder; }
  void check_condition(const ConditionVector* condition) const;
  Matrix make_encoder_input(const Matrix& batch, const Matrix* conditions) const;
  Matrix make_decoder_input(const Matrix& z, const Matrix* conditions) const;
  void forward(const Matrix& batch, const Matrix* conditions,
               const Matrix& delta, Cache& cache) const;
  LossComponents loss_from_cache(const Matrix& batch, const Cache& cache,
                                 double kl_weight) const;

  EncoderDecoderSpec spec_;
  std::vector<Parameter> params_;
  // indices into params_ (each entry is the weight; bias follows at +1)
  std::vector<std::size_t> enc_idx_;
  std::size_t mu_idx_ = 0;
  std::size_t logvar_idx_ = 0;  // unused for the plain autoencoder
  std::vector<std::size_t> dec_idx_;
  std::size_t out_idx_ = 0;
};

}  // namespace emovae
