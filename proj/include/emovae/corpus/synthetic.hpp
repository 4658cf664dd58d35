#pragma once

#include <cstdint>
#include <filesystem>

namespace emovae {

// Desk-scale stand-in corpus: every utterance is a harmonic stack whose
// fundamental range, spectral tilt, and amplitude-modulation rate are fixed
// per emotion class, with a per-speaker pitch offset and additive noise.
// Dimensional scores come from a per-class base table plus one-decimal jitter
// of at most +/-0.8; the first utterance of each (speaker, class) pair takes
// zero jitter, so every dimension hits all of low/mid/high. Output is fully
// deterministic from the seed, including WAV bytes.
struct SyntheticConfig {
  std::uint64_t seed = 7;
  std::size_t n_sessions = 5;
  std::size_t speakers_per_session = 2;
  std::size_t utterances_per_speaker = 12;
  std::uint32_t sample_rate = 16000;
  double min_duration_s = 1.0;
  double max_duration_s = 2.2;
  double noise_snr_db = 20.0;
};

// Writes wav/<id>.wav files, manifest.csv, and corpus_meta.json under
// out_dir; returns the manifest path.
std::filesystem::path generate_synthetic_corpus(
    const SyntheticConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace emovae
