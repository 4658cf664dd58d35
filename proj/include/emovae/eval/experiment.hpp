#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "emovae/classifier/lstm.hpp"
#include "emovae/corpus/folds.hpp"
#include "emovae/corpus/manifest.hpp"
#include "emovae/dsp/logmel.hpp"
#include "emovae/eval/metrics.hpp"
#include "emovae/models/autoencoder.hpp"
#include "emovae/numeric/adam.hpp"

namespace emovae {

enum class Task { categorical, dimensional };

std::string to_string(Task task);
Task task_from_string(const std::string& name);

struct LoadedUtterance {
  UtteranceRecord record;
  Matrix segments;  // n_segments x (bands * frames_per_segment), raw LogMel
  std::optional<std::size_t> categorical;
};

struct CorpusData {
  DspConfig dsp;
  std::vector<LoadedUtterance> utterances;
  std::unordered_map<std::string, std::size_t> index;

  const LoadedUtterance& by_id(const std::string& id) const;
};

// Reads every manifest entry's WAV and computes its raw LogMel segments.
CorpusData load_corpus(const std::filesystem::path& manifest_path,
                       const DspConfig& dsp);

struct ExperimentConfig {
  DspConfig dsp{};

  ModelKind kind = ModelKind::vae;
  std::vector<std::size_t> hidden_dims{512, 256};
  std::size_t latent_dim = 128;
  double kl_weight = 1.0;
  std::size_t model_epochs = 15;
  std::size_t model_batch = 128;
  std::optional<double> recon_threshold;
  AdamConfig model_adam{};
  FeatureMode feature_mode = FeatureMode::mu_logvar;

  std::array<std::size_t, 2> clf_hidden{128, 128};
  Readout readout = Readout::final_state;
  ClassifierTrainSettings clf_train{};
  double validation_fraction = 0.1;

  SplitSpec split{};  // split.seed is overwritten by each run seed
  std::vector<std::uint64_t> seeds{7, 8, 9};
  std::size_t jobs = 1;
};

// The plain autoencoder has no distribution head, so it always yields its
// bottleneck code regardless of the requested feature mode.
FeatureMode effective_feature_mode(ModelKind kind, FeatureMode requested);

struct PredictionRow {
  std::string utterance_id;
  std::size_t true_class = 0;
  std::size_t predicted = 0;
  std::vector<double> probabilities;
};

struct FoldOutcome {
  std::size_t fold = 0;
  std::string test_tag;
  ConfusionMatrix cm;
  std::vector<PredictionRow> predictions;
};

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::vector<FoldOutcome> folds;
  ConfusionMatrix aggregate;
  double wa = 0.0;
  double ua = 0.0;
  double macro_f1 = 0.0;
  std::vector<double> per_class_f1;
};

struct DimensionOutcome {
  std::string dimension;  // arousal | power | valence
  std::vector<FoldOutcome> folds;
  ConfusionMatrix aggregate;
  double macro_f1 = 0.0;
};

struct DimensionalSeedOutcome {
  std::uint64_t seed = 0;
  std::array<DimensionOutcome, 3> dims;
  double mean_f1 = 0.0;  // arithmetic mean of the three macro F1 scores
};

struct ExperimentReport {
  Task task = Task::categorical;
  ExperimentConfig config;
  std::vector<SeedOutcome> categorical;
  std::vector<DimensionalSeedOutcome> dimensional;
  // Means across seeds.
  double mean_wa = 0.0;
  double mean_ua = 0.0;
  double mean_macro_f1 = 0.0;
  std::array<double, 3> mean_dim_f1{};
  double mean_dim_f1_mean = 0.0;
};

// Full protocol: per fold, standardize on the training split, fit the
// representation model on training segments, extract features everywhere,
// train the classifier against a deterministic inner validation split, and
// score the test split. Folds run in parallel when cfg.jobs > 1 with
// identical results.
ExperimentReport run_experiment(const CorpusData& corpus,
                                const ExperimentConfig& cfg, Task task);

struct SweepRow {
  std::size_t latent_dim = 0;
  std::string model;
  double wa = 0.0;
  double ua = 0.0;
  std::array<double, 3> dim_f1{};
  double mean_f1 = 0.0;
};

// One run_experiment per latent size with shared seeds; rows sorted by size.
std::vector<SweepRow> latent_sweep(const CorpusData& corpus,
                                   ExperimentConfig cfg, Task task,
                                   std::vector<std::size_t> sizes);

// Emits report.json, metrics.csv, report.md, and per-seed prediction CSVs.
// config_echo_json must be the fully resolved run configuration.
void write_report_files(const ExperimentReport& report,
                        const std::string& config_echo_json,
                        const std::filesystem::path& dir);

void write_sweep_files(const std::vector<SweepRow>& rows, Task task,
                       const std::string& config_echo_json,
                       const std::filesystem::path& dir);

}  // namespace emovae
