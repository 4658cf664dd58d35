#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emovae/dsp/wav.hpp"
#include "emovae/numeric/matrix.hpp"

namespace emovae {

struct DspConfig {
  double win_ms = 25.0;
  double hop_ms = 10.0;
  std::size_t n_fft = 512;
  std::size_t n_mels = 80;
  double fmin_hz = 0.0;
  double fmax_hz = 8000.0;
  double energy_floor = 1e-10;
  std::size_t frames_per_segment = 10;
};

// Triangular mel filterbank; weights is n_filters x (n_fft/2 + 1).
struct MelFilterbank {
  std::size_t n_filters = 0;
  Matrix weights;
  double fmin_hz = 0.0;
  double fmax_hz = 0.0;
};

struct LogMelFrame {
  std::vector<double> energies;  // one log power per mel band
};

// One block of frames_per_segment consecutive LogMel frames, flattened
// frame-major (frame 0 bands, frame 1 bands, ...). 800 values by default.
struct LogMelSegment {
  std::string utterance_id;
  std::size_t segment_index = 0;
  std::vector<double> values;
};

double mel_scale(double hz);
double mel_to_hz(double mel);

// w[k] = 0.54 - 0.46 cos(2 pi k / (n-1)); n >= 2.
std::vector<double> hamming_window(std::size_t n);

// Splits the signal into frames of win_ms every hop_ms, no padding:
// frame count = 1 + floor((N - win) / hop). The context string is only used
// in error messages.
Matrix frame_signal(const WaveBuffer& wave, double win_ms = 25.0,
                    double hop_ms = 10.0, const std::string& context = {});

// |DFT[k]|^2 for k = 0..n_fft/2 of the zero-padded frame; n_fft must be a
// power of two >= frame length.
std::vector<double> power_spectrum(std::span<const double> frame,
                                   std::size_t n_fft);

// Triangular filters with unit peaks at n_filters points equally spaced on
// the mel scale between mel(fmin) and mel(fmax).
MelFilterbank build_mel_filterbank(std::size_t n_filters, std::size_t n_fft,
                                   std::uint32_t sample_rate, double fmin_hz,
                                   double fmax_hz);

// energies[j] = ln(max(sum_k fb[j,k] * power[k], floor)).
LogMelFrame logmel_frame(std::span<const double> power, const MelFilterbank& fb,
                         double floor = 1e-10);

// Non-overlapping groups of frames_per_segment consecutive frames; a trailing
// partial group is dropped. Fewer frames than one segment is an error.
std::vector<LogMelSegment> segment_utterance(
    const std::vector<LogMelFrame>& frames, const std::string& utterance_id,
    std::size_t frames_per_segment = 10);

// Full pipeline: framing, Hamming window, power spectrum, mel filterbank,
// log, segmentation.
std::vector<LogMelFrame> compute_logmel_frames(const WaveBuffer& wave,
                                               const DspConfig& cfg,
                                               const std::string& context = {});
std::vector<LogMelSegment> compute_segments(const WaveBuffer& wave,
                                            const std::string& utterance_id,
                                            const DspConfig& cfg);

// Per-feature standardization (zero mean, unit variance). Fit on training
// data only, then applied to everything, so test statistics never leak in.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> std_dev;  // floored at 1e-8

  void fit(const Matrix& rows);
  void apply(Matrix& rows) const;
  void apply(std::span<double> row) const;
};

}  // namespace emovae
