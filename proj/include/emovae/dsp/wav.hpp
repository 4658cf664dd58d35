#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace emovae {

// Mono audio in [-1, 1].
struct WaveBuffer {
  std::vector<double> samples;
  std::uint32_t sample_rate = 0;

  double duration_seconds() const {
    return sample_rate == 0 ? 0.0
                            : static_cast<double>(samples.size()) / sample_rate;
  }
};

// Reads RIFF/WAVE, PCM signed 16-bit little-endian, mono. Samples map to
// [-1, 1) by division by 32768. Anything else is a FormatError.
WaveBuffer read_wav(const std::filesystem::path& path);

// Writes PCM16 mono; samples are clamped to [-1, 1] and scaled by 32767.
void write_wav(const std::filesystem::path& path, const WaveBuffer& wave);

}  // namespace emovae
