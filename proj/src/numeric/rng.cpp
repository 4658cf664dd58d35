#include "emovae/numeric/rng.hpp"

#include <cmath>
#include <numbers>

#include "emovae/error.hpp"

namespace emovae {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_fmix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RngStream::next_u64() {
  state_ += kGamma;
  return splitmix_fmix(state_);
}

double RngStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("next_below: bound must be positive");
  // Multiply-high mapping; deterministic and unbiased enough for shuffles.
  const auto wide = static_cast<unsigned __int128>(next_u64()) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

double RngStream::next_normal() {
  // u1 in (0,1] so the log stays finite.
  const double u1 = 1.0 - next_uniform();
  const double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

RngStream RngStream::fork(std::uint64_t salt) const {
  return RngStream(splitmix_fmix(state_ ^ (salt * kGamma + 0x632BE59BD9B4E019ULL)));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = splitmix_fmix(seed + kGamma);
  z = splitmix_fmix(z ^ (a + kGamma));
  return splitmix_fmix(z ^ (b + kGamma));
}

std::vector<double> sample_standard_normal(RngStream& rng, std::size_t n) {
  if (n == 0) throw ParameterError("sample_standard_normal: n must be >= 1");
  std::vector<double> out(n);
  for (double& v : out) v = rng.next_normal();
  return out;
}

void shuffle_indices(std::vector<std::size_t>& idx, RngStream& rng) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(idx[i - 1], idx[j]);
  }
}

}  // namespace emovae
