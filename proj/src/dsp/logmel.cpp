#include "emovae/dsp/logmel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "emovae/error.hpp"

namespace emovae {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 FFT, in place.
void fft_radix2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::size_t samples_for_ms(std::uint32_t sample_rate, double ms) {
  return static_cast<std::size_t>(
      std::llround(static_cast<double>(sample_rate) * ms / 1000.0));
}

}  // namespace

double mel_scale(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::vector<double> hamming_window(std::size_t n) {
  if (n < 2) throw ParameterError("hamming_window: n must be >= 2");
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                  static_cast<double>(n - 1));
  }
  return w;
}

Matrix frame_signal(const WaveBuffer& wave, double win_ms, double hop_ms,
                    const std::string& context) {
  if (wave.sample_rate == 0) throw ParameterError("frame_signal: sample_rate is 0");
  const std::size_t win = samples_for_ms(wave.sample_rate, win_ms);
  const std::size_t hop = samples_for_ms(wave.sample_rate, hop_ms);
  if (win < 2 || hop == 0) throw ParameterError("frame_signal: window/hop too small");
  const std::size_t n = wave.samples.size();
  if (n < win) {
    throw TooShortError("frame_signal: signal of " + std::to_string(n) +
                        " samples is shorter than one " + std::to_string(win) +
                        "-sample window" +
                        (context.empty() ? "" : " (utterance " + context + ")"));
  }
  const std::size_t n_frames = 1 + (n - win) / hop;
  Matrix frames(n_frames, win);
  for (std::size_t i = 0; i < n_frames; ++i) {
    const double* src = wave.samples.data() + i * hop;
    std::copy(src, src + win, frames.row(i));
  }
  return frames;
}

std::vector<double> power_spectrum(std::span<const double> frame,
                                   std::size_t n_fft) {
  if (n_fft < frame.size()) {
    throw ParameterError("power_spectrum: n_fft " + std::to_string(n_fft) +
                         " < frame length " + std::to_string(frame.size()));
  }
  if (!is_power_of_two(n_fft)) {
    throw ParameterError("power_spectrum: n_fft must be a power of two");
  }
  std::vector<std::complex<double>> buf(n_fft, {0.0, 0.0});
  for (std::size_t i = 0; i < frame.size(); ++i) buf[i] = {frame[i], 0.0};
  fft_radix2(buf);
  std::vector<double> power(n_fft / 2 + 1);
  for (std::size_t k = 0; k <= n_fft / 2; ++k) {
    power[k] = std::norm(buf[k]);
  }
  return power;
}

MelFilterbank build_mel_filterbank(std::size_t n_filters, std::size_t n_fft,
                                   std::uint32_t sample_rate, double fmin_hz,
                                   double fmax_hz) {
  if (n_filters < 1) throw ParameterError("mel filterbank: n_filters must be >= 1");
  const double nyquist = static_cast<double>(sample_rate) / 2.0;
  if (!(fmin_hz >= 0.0 && fmin_hz < fmax_hz)) {
    throw ParameterError("mel filterbank: need 0 <= fmin < fmax");
  }
  if (fmax_hz > nyquist) {
    throw ParameterError("mel filterbank: fmax " + std::to_string(fmax_hz) +
                         " exceeds Nyquist " + std::to_string(nyquist));
  }

  const double mel_lo = mel_scale(fmin_hz);
  const double mel_hi = mel_scale(fmax_hz);
  std::vector<double> edges_hz(n_filters + 2);
  for (std::size_t i = 0; i < edges_hz.size(); ++i) {
    const double mel = mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                    static_cast<double>(n_filters + 1);
    edges_hz[i] = mel_to_hz(mel);
  }

  const std::size_t n_bins = n_fft / 2 + 1;
  MelFilterbank fb;
  fb.n_filters = n_filters;
  fb.fmin_hz = fmin_hz;
  fb.fmax_hz = fmax_hz;
  fb.weights = Matrix(n_filters, n_bins, 0.0);
  for (std::size_t j = 0; j < n_filters; ++j) {
    const double left = edges_hz[j];
    const double center = edges_hz[j + 1];
    const double right = edges_hz[j + 2];
    bool any_positive = false;
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate /
                       static_cast<double>(n_fft);
      double w = 0.0;
      if (f > left && f <= center) {
        w = (f - left) / (center - left);
      } else if (f > center && f < right) {
        w = (right - f) / (right - center);
      }
      fb.weights(j, k) = w;
      any_positive |= w > 0.0;
    }
    if (!any_positive) {
      throw ParameterError("mel filterbank: filter " + std::to_string(j) +
                           " covers no FFT bin; increase n_fft or reduce n_filters");
    }
  }
  return fb;
}

LogMelFrame logmel_frame(std::span<const double> power, const MelFilterbank& fb,
                         double floor) {
  if (power.size() != fb.weights.cols) {
    throw DimensionError("logmel_frame: spectrum length " +
                         std::to_string(power.size()) + " != filterbank bins " +
                         std::to_string(fb.weights.cols));
  }
  LogMelFrame frame;
  frame.energies.resize(fb.n_filters);
  for (std::size_t j = 0; j < fb.n_filters; ++j) {
    const double* w = fb.weights.row(j);
    double acc = 0.0;
    for (std::size_t k = 0; k < power.size(); ++k) acc += w[k] * power[k];
    frame.energies[j] = std::log(std::max(acc, floor));
  }
  return frame;
}

std::vector<LogMelSegment> segment_utterance(
    const std::vector<LogMelFrame>& frames, const std::string& utterance_id,
    std::size_t frames_per_segment) {
  if (frames_per_segment < 1) {
    throw ParameterError("segment_utterance: frames_per_segment must be >= 1");
  }
  if (frames.size() < frames_per_segment) {
    throw TooShortError("segment_utterance: " + std::to_string(frames.size()) +
                        " frames < one segment of " +
                        std::to_string(frames_per_segment) +
                        (utterance_id.empty() ? "" : " (utterance " + utterance_id + ")"));
  }
  const std::size_t n_segments = frames.size() / frames_per_segment;
  std::vector<LogMelSegment> segments;
  segments.reserve(n_segments);
  for (std::size_t s = 0; s < n_segments; ++s) {
    LogMelSegment seg;
    seg.utterance_id = utterance_id;
    seg.segment_index = s;
    for (std::size_t f = 0; f < frames_per_segment; ++f) {
      const auto& e = frames[s * frames_per_segment + f].energies;
      seg.values.insert(seg.values.end(), e.begin(), e.end());
    }
    segments.push_back(std::move(seg));
  }
  return segments;
}

std::vector<LogMelFrame> compute_logmel_frames(const WaveBuffer& wave,
                                               const DspConfig& cfg,
                                               const std::string& context) {
  const Matrix frames = frame_signal(wave, cfg.win_ms, cfg.hop_ms, context);
  const std::vector<double> window = hamming_window(frames.cols);
  const MelFilterbank fb = build_mel_filterbank(cfg.n_mels, cfg.n_fft,
                                                wave.sample_rate, cfg.fmin_hz,
                                                cfg.fmax_hz);
  std::vector<double> windowed(frames.cols);
  std::vector<LogMelFrame> out;
  out.reserve(frames.rows);
  for (std::size_t i = 0; i < frames.rows; ++i) {
    const double* src = frames.row(i);
    for (std::size_t k = 0; k < frames.cols; ++k) windowed[k] = src[k] * window[k];
    const auto power = power_spectrum(windowed, cfg.n_fft);
    out.push_back(logmel_frame(power, fb, cfg.energy_floor));
  }
  return out;
}

std::vector<LogMelSegment> compute_segments(const WaveBuffer& wave,
                                            const std::string& utterance_id,
                                            const DspConfig& cfg) {
  const auto frames = compute_logmel_frames(wave, cfg, utterance_id);
  return segment_utterance(frames, utterance_id, cfg.frames_per_segment);
}

void Standardizer::fit(const Matrix& rows) {
  if (rows.rows == 0) throw ParameterError("Standardizer: no rows to fit");
  mean.assign(rows.cols, 0.0);
  std_dev.assign(rows.cols, 0.0);
  for (std::size_t i = 0; i < rows.rows; ++i) {
    const double* r = rows.row(i);
    for (std::size_t j = 0; j < rows.cols; ++j) mean[j] += r[j];
  }
  for (double& m : mean) m /= static_cast<double>(rows.rows);
  for (std::size_t i = 0; i < rows.rows; ++i) {
    const double* r = rows.row(i);
    for (std::size_t j = 0; j < rows.cols; ++j) {
      const double d = r[j] - mean[j];
      std_dev[j] += d * d;
    }
  }
  for (double& s : std_dev) {
    s = std::sqrt(s / static_cast<double>(rows.rows));
    if (s < 1e-8) s = 1.0;  // constant feature: center only
  }
}

void Standardizer::apply(Matrix& rows) const {
  if (rows.cols != mean.size()) {
    throw DimensionError("Standardizer: feature width mismatch");
  }
  for (std::size_t i = 0; i < rows.rows; ++i) {
    double* r = rows.row(i);
    for (std::size_t j = 0; j < rows.cols; ++j) {
      r[j] = (r[j] - mean[j]) / std_dev[j];
    }
  }
}

void Standardizer::apply(std::span<double> row) const {
  if (row.size() != mean.size()) {
    throw DimensionError("Standardizer: feature width mismatch");
  }
  for (std::size_t j = 0; j < row.size(); ++j) {
    row[j] = (row[j] - mean[j]) / std_dev[j];
  }
}

}  // namespace emovae
