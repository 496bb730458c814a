#include "detmom/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace detmom {

std::uint64_t SplitMix64::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

namespace {

struct SampleVisitor {
  SplitMix64& rng;

  double operator()(const DiscreteSampler& s) {
    const double u = rng.next_unit();
    double cdf = 0;
    for (const auto& [value, prob] : s.atoms) {
      cdf += prob.to_double();
      if (u <= cdf) return value.to_double();
    }
    return s.atoms.back().first.to_double();
  }
  double operator()(const ExponentialSampler&) {
    return -std::log(rng.next_unit());
  }
  double operator()(const NormalSampler& s) {
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    const double z =
        std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return s.mean.to_double() + s.stddev.to_double() * z;
  }
};

// Determinant by partial-pivot Gaussian elimination, in place.
double det_double(std::vector<double>& a, int n) {
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot_row = k;
    double best = std::fabs(a[static_cast<size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double cand = std::fabs(a[static_cast<size_t>(i) * n + k]);
      if (cand > best) {
        best = cand;
        pivot_row = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot_row != k) {
      for (int j = k; j < n; ++j) {
        std::swap(a[static_cast<size_t>(k) * n + j],
                  a[static_cast<size_t>(pivot_row) * n + j]);
      }
      det = -det;
    }
    const double pivot = a[static_cast<size_t>(k) * n + k];
    det *= pivot;
    for (int i = k + 1; i < n; ++i) {
      const double factor = a[static_cast<size_t>(i) * n + k] / pivot;
      for (int j = k + 1; j < n; ++j) {
        a[static_cast<size_t>(i) * n + j] -=
            factor * a[static_cast<size_t>(k) * n + j];
      }
    }
  }
  return det;
}

double power_int(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

constexpr std::uint64_t kChunkSamples = 4096;

struct ChunkStats {
  std::uint64_t count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const ChunkStats& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double delta = o.mean - mean;
    const auto total = static_cast<double>(count + o.count);
    mean += delta * static_cast<double>(o.count) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(count) *
                     static_cast<double>(o.count) / total;
    count += o.count;
  }
};

}  // namespace

std::vector<double> sample_matrix(const Sampler& sampler, int n, int p,
                                  SplitMix64& rng) {
  std::vector<double> u(static_cast<size_t>(n) * p);
  SampleVisitor visitor{rng};
  for (double& entry : u) entry = std::visit(visitor, sampler);
  return u;
}

McEstimate estimate_moment(const Sampler& sampler, int n, int p, int k,
                           std::uint64_t samples, std::uint64_t seed,
                           int workers) {
  if (samples < 2) {
    throw std::invalid_argument("estimate_moment: needs at least 2 samples");
  }
  if (k <= 0 || k % 2 != 0) {
    throw std::invalid_argument("estimate_moment: k must be even and > 0");
  }
  if (n < 0 || p < 0 || p > n) {
    throw std::invalid_argument("estimate_moment: need 0 <= p <= n");
  }
  if (workers < 1) workers = 1;

  const std::uint64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
  std::vector<ChunkStats> partials(chunks);

  auto run_chunk = [&](std::uint64_t chunk) {
    SplitMix64 rng = SplitMix64::for_chunk(seed, chunk);
    const std::uint64_t begin = chunk * kChunkSamples;
    const std::uint64_t end = std::min(begin + kChunkSamples, samples);
    ChunkStats stats;
    std::vector<double> work;
    for (std::uint64_t s = begin; s < end; ++s) {
      const std::vector<double> u = sample_matrix(sampler, n, p, rng);
      double value;
      if (p == n) {
        work = u;
        value = power_int(det_double(work, n), k);
      } else if (p == 0) {
        value = 1.0;
      } else {
        work.assign(static_cast<size_t>(p) * p, 0.0);
        for (int a = 0; a < p; ++a) {
          for (int b = a; b < p; ++b) {
            double dot = 0;
            for (int r = 0; r < n; ++r) {
              dot += u[static_cast<size_t>(r) * p + a] *
                     u[static_cast<size_t>(r) * p + b];
            }
            work[static_cast<size_t>(a) * p + b] = dot;
            work[static_cast<size_t>(b) * p + a] = dot;
          }
        }
        value = power_int(det_double(work, p), k / 2);
      }
      stats.add(value);
    }
    partials[chunk] = stats;
  };

  if (workers == 1 || chunks == 1) {
    for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) run_chunk(chunk);
  } else {
    std::vector<std::thread> pool;
    const auto worker_count =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), chunks);
    for (std::uint64_t w = 0; w < worker_count; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t chunk = w; chunk < chunks; chunk += worker_count) {
          run_chunk(chunk);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Merging in chunk order keeps the result independent of scheduling.
  ChunkStats total;
  for (const ChunkStats& part : partials) total.merge(part);

  McEstimate est;
  est.mean = total.mean;
  const auto count = static_cast<double>(total.count);
  est.standard_error =
      std::sqrt(total.m2 / (count - 1.0)) / std::sqrt(count);
  est.samples = samples;
  est.seed = seed;
  est.workers = workers;
  return est;
}

}  // namespace detmom
