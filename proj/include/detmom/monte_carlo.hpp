#pragma once

#include <cstdint>
#include <vector>

#include "detmom/moments.hpp"

namespace detmom {

/// SplitMix64 stream. The sub-stream for chunk c starts at state
/// mix(seed + (c + 1) * 0x9E3779B97F4A7C15) where mix is the SplitMix64
/// output function; pushing the chunk index through the mix keeps the
/// counter ranges of different chunks disjoint. Everything is reproducible
/// from the seed alone, on any worker count and in any other implementation
/// of the same scheme.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 for_chunk(std::uint64_t seed, std::uint64_t chunk) {
    SplitMix64 seeder(seed + chunk * 0x9E3779B97F4A7C15ULL);
    return SplitMix64(seeder.next_u64());
  }

  std::uint64_t next_u64();
  /// Uniform draw in (0, 1]; never returns 0, so logs are safe.
  double next_unit();

 private:
  std::uint64_t state_;
};

/// Fills an n x p matrix (row-major) with i.i.d. draws from the sampler.
/// Exponential entries come from CDF inversion, normal entries from the
/// Box-Muller cosine branch (two uniforms per draw), discrete entries from
/// CDF walking.
std::vector<double> sample_matrix(const Sampler& sampler, int n, int p,
                                  SplitMix64& rng);

struct McEstimate {
  double mean = 0;
  double standard_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
};

/// Monte-Carlo estimate of E|U^T U|^{k/2} over i.i.d. sampled n x p matrices
/// (p = n measures |A|^k). Samples are processed in fixed-size chunks with
/// per-chunk substreams; chunk accumulators merge in chunk order, so the
/// estimate is bit-identical for any worker count.
McEstimate estimate_moment(const Sampler& sampler, int n, int p, int k,
                           std::uint64_t samples, std::uint64_t seed,
                           int workers = 1);

}  // namespace detmom
