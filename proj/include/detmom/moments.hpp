#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "detmom/rational.hpp"

namespace detmom {

/// Raw moments m_1..m_k of a single matrix entry, k in {2, 4, 6}.
class Moments {
 public:
  explicit Moments(std::vector<Rational> raw);

  int order() const { return static_cast<int>(m_.size()); }

  /// m_r = E X^r, 1-based; r = 0 returns 1.
  const Rational& m(int r) const;

  /// Realizability check (opt-in): m2 >= m1^2. The closed forms are
  /// polynomial identities and accept arbitrary rationals by default.
  bool is_realizable() const;

  bool operator==(const Moments& o) const { return m_ == o.m_; }

 private:
  std::vector<Rational> m_;
};

/// Central moments mu_2 = m2 - m1^2, mu_3 = m3 - 3 m1 m2 + 2 m1^3,
/// mu_4 = m4 - 4 m1 m3 + 6 m1^2 m2 - 3 m1^4.
struct CentralMoments {
  Rational mu2;
  Rational mu3;
  Rational mu4;
};

CentralMoments central_from_raw(const Moments& m);

/// How a distribution is sampled in the Monte-Carlo path. Closed forms always
/// use the exact rational moments; only sampling is floating point.
struct DiscreteSampler {
  std::vector<std::pair<Rational, Rational>> atoms;  // (value, probability)
};
struct ExponentialSampler {};  // unit rate
struct NormalSampler {
  Rational mean;
  Rational stddev;
};
using Sampler =
    std::variant<DiscreteSampler, ExponentialSampler, NormalSampler>;

struct DistributionPreset {
  std::string name;
  Moments moments;
  Sampler sampler;
};

/// Named presets: "exp1" (m_j = j!), "rademacher" (+-1 with equal weight),
/// "zero-two" (0 or 2 with equal weight).
DistributionPreset preset(std::string_view name);
DistributionPreset preset_normal(const Rational& mean, const Rational& stddev);
DistributionPreset preset_discrete(
    std::vector<std::pair<Rational, Rational>> atoms);

/// Exact raw moments of a finite discrete distribution, up to `order`.
Moments discrete_moments(
    const std::vector<std::pair<Rational, Rational>>& atoms, int order);

/// Parses "m1=1,m2=2,m3=6,m4=24[,m5=...,m6=...]" with rational literals.
Moments parse_moments(std::string_view text);

/// Parses "exp1 | normal:MU:SIGMA | rademacher | zero-two |
/// discrete:v1:p1,v2:p2,...".
DistributionPreset parse_distribution(std::string_view text);

}  // namespace detmom
