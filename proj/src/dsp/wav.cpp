#include "emovae/dsp/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "emovae/error.hpp"

namespace emovae {

namespace {

std::uint32_t get_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t get_u16_le(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32_le(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u16_le(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xFF));
  s.push_back(static_cast<char>((v >> 8) & 0xFF));
}

}  // namespace

WaveBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("wav: cannot open: " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(f)),
                    std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() < 12 || std::memcmp(p, "RIFF", 4) != 0 ||
      std::memcmp(p + 8, "WAVE", 4) != 0) {
    throw FormatError("wav: not a RIFF/WAVE file: " + path.string());
  }

  bool have_fmt = false;
  std::uint16_t format_tag = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  WaveBuffer wave;
  bool have_data = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* chunk_id = bytes.data() + pos;
    const std::uint32_t chunk_size = get_u32_le(p + pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_size > bytes.size()) {
      throw FormatError("wav: truncated chunk in " + path.string());
    }
    if (std::memcmp(chunk_id, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw FormatError("wav: short fmt chunk in " + path.string());
      format_tag = get_u16_le(p + body);
      channels = get_u16_le(p + body + 2);
      sample_rate = get_u32_le(p + body + 4);
      bits = get_u16_le(p + body + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk_id, "data", 4) == 0) {
      if (!have_fmt) throw FormatError("wav: data before fmt in " + path.string());
      if (format_tag != 1 || channels != 1 || bits != 16) {
        throw FormatError("wav: unsupported encoding (need PCM16 mono) in " +
                          path.string());
      }
      const std::size_t n = chunk_size / 2;
      wave.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto u = get_u16_le(p + body + 2 * i);
        const auto s = static_cast<std::int16_t>(u);
        wave.samples[i] = static_cast<double>(s) / 32768.0;
      }
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || !have_data) {
    throw FormatError("wav: missing fmt or data chunk in " + path.string());
  }
  if (sample_rate == 0) throw FormatError("wav: zero sample rate in " + path.string());
  wave.sample_rate = sample_rate;
  return wave;
}

void write_wav(const std::filesystem::path& path, const WaveBuffer& wave) {
  if (wave.sample_rate == 0) throw ParameterError("wav: sample_rate must be > 0");
  const std::uint32_t n = static_cast<std::uint32_t>(wave.samples.size());
  const std::uint32_t data_bytes = n * 2;

  std::string out;
  out.reserve(44 + data_bytes);
  out.append("RIFF");
  put_u32_le(out, 36 + data_bytes);
  out.append("WAVE");
  out.append("fmt ");
  put_u32_le(out, 16);
  put_u16_le(out, 1);   // PCM
  put_u16_le(out, 1);   // mono
  put_u32_le(out, wave.sample_rate);
  put_u32_le(out, wave.sample_rate * 2);  // byte rate
  put_u16_le(out, 2);   // block align
  put_u16_le(out, 16);  // bits per sample
  out.append("data");
  put_u32_le(out, data_bytes);
  for (double s : wave.samples) {
    const double clamped = std::clamp(s, -1.0, 1.0);
    const auto q = static_cast<std::int16_t>(std::lrint(clamped * 32767.0));
    put_u16_le(out, static_cast<std::uint16_t>(q));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("wav: cannot open for writing: " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("wav: write failed: " + path.string());
}

}  // namespace emovae
