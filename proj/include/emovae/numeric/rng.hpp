#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace emovae {

// Deterministic counter-based generator (splitmix64). Each draw adds a fixed
// odd constant to the state and hashes it, so a given seed produces the same
// sequence on every run and platform. Gaussians use the Box-Muller cosine
// branch: one draw consumes exactly two uniforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [0, 1), 53-bit resolution.
  double next_uniform();
  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t next_below(std::uint64_t bound);
  // One N(0,1) draw.
  double next_normal();
  // Independent stream derived from this stream's current state and a salt.
  // Does not advance this stream.
  RngStream fork(std::uint64_t salt) const;

 private:
  std::uint64_t state_;
};

// Combine a seed with labels into a derived seed (for per-fold, per-utterance
// streams that do not depend on processing order).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

std::vector<double> sample_standard_normal(RngStream& rng, std::size_t n);

// Fisher-Yates shuffle driven by the stream.
void shuffle_indices(std::vector<std::size_t>& idx, RngStream& rng);

}  // namespace emovae
