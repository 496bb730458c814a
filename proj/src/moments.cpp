#include "detmom/moments.hpp"

#include <stdexcept>

#include "detmom/factorials.hpp"

namespace detmom {

namespace {

const Rational kOne(1);

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

}  // namespace

Moments::Moments(std::vector<Rational> raw) : m_(std::move(raw)) {
  if (m_.size() != 2 && m_.size() != 4 && m_.size() != 6) {
    throw std::invalid_argument("Moments: order must be 2, 4 or 6");
  }
}

const Rational& Moments::m(int r) const {
  if (r == 0) return kOne;
  if (r < 0 || r > order()) {
    throw std::out_of_range("Moments: moment order out of range");
  }
  return m_[static_cast<size_t>(r - 1)];
}

bool Moments::is_realizable() const { return m(2) >= m(1) * m(1); }

CentralMoments central_from_raw(const Moments& m) {
  if (m.order() < 4) {
    throw std::invalid_argument("central_from_raw: needs moments up to m4");
  }
  const Rational& m1 = m.m(1);
  CentralMoments c;
  c.mu2 = m.m(2) - m1 * m1;
  c.mu3 = m.m(3) - Rational(3) * m1 * m.m(2) + Rational(2) * m1.pow(3);
  c.mu4 = m.m(4) - Rational(4) * m1 * m.m(3) +
          Rational(6) * m1.pow(2) * m.m(2) - Rational(3) * m1.pow(4);
  return c;
}

Moments discrete_moments(
    const std::vector<std::pair<Rational, Rational>>& atoms, int order) {
  std::vector<Rational> m(static_cast<size_t>(order));
  for (int r = 1; r <= order; ++r) {
    Rational s;
    for (const auto& [value, prob] : atoms) s += prob * value.pow(r);
    m[static_cast<size_t>(r - 1)] = s;
  }
  return Moments(std::move(m));
}

DistributionPreset preset_discrete(
    std::vector<std::pair<Rational, Rational>> atoms) {
  if (atoms.empty()) {
    throw std::invalid_argument("preset_discrete: no atoms");
  }
  Rational total;
  for (const auto& [value, prob] : atoms) {
    if (prob.sign() <= 0) {
      throw std::invalid_argument("preset_discrete: probabilities must be > 0");
    }
    total += prob;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("preset_discrete: probabilities must sum to 1");
  }
  Moments m = discrete_moments(atoms, 6);
  return DistributionPreset{"discrete", std::move(m),
                            DiscreteSampler{std::move(atoms)}};
}

DistributionPreset preset_normal(const Rational& mean,
                                 const Rational& stddev) {
  if (stddev.sign() <= 0) {
    throw std::invalid_argument("preset_normal: sigma must be > 0");
  }
  // Raw moments from the central ones: central even moments are
  // sigma^k (k-1)!!, odd ones vanish.
  const Rational sigma2 = stddev * stddev;
  std::vector<Rational> raw(6);
  for (int r = 1; r <= 6; ++r) {
    Rational s;
    for (int k = 0; k <= r; k += 2) {
      s += binomial(r, k) * mean.pow(r - k) * sigma2.pow(k / 2) *
           double_factorial(k - 1);
    }
    raw[static_cast<size_t>(r - 1)] = s;
  }
  return DistributionPreset{"normal", Moments(std::move(raw)),
                            NormalSampler{mean, stddev}};
}

DistributionPreset preset(std::string_view name) {
  if (name == "exp1") {
    std::vector<Rational> raw(6);
    for (int r = 1; r <= 6; ++r) raw[static_cast<size_t>(r - 1)] = factorial(r);
    return DistributionPreset{"exp1", Moments(std::move(raw)),
                              ExponentialSampler{}};
  }
  if (name == "rademacher") {
    const Rational half(1, 2);
    return preset_discrete({{Rational(-1), half}, {Rational(1), half}});
  }
  if (name == "zero-two") {
    const Rational half(1, 2);
    return preset_discrete({{Rational(0), half}, {Rational(2), half}});
  }
  throw std::invalid_argument("preset: unknown distribution '" +
                              std::string(name) + "'");
}

Moments parse_moments(std::string_view text) {
  std::vector<Rational> values;
  for (std::string_view part : split(text, ',')) {
    if (part.empty()) {
      throw std::invalid_argument("parse_moments: empty entry");
    }
    const size_t eq = part.find('=');
    if (eq == std::string_view::npos || part[0] != 'm') {
      throw std::invalid_argument("parse_moments: expected mK=VALUE entries");
    }
    const int index = std::stoi(std::string(part.substr(1, eq - 1)));
    if (index != static_cast<int>(values.size()) + 1) {
      throw std::invalid_argument(
          "parse_moments: moments must be given as consecutive m1,m2,...");
    }
    values.push_back(Rational::parse(part.substr(eq + 1)));
  }
  return Moments(std::move(values));
}

DistributionPreset parse_distribution(std::string_view text) {
  if (text.rfind("normal:", 0) == 0) {
    const auto parts = split(text.substr(7), ':');
    if (parts.size() != 2) {
      throw std::invalid_argument("parse_distribution: normal:MU:SIGMA");
    }
    return preset_normal(Rational::parse(parts[0]), Rational::parse(parts[1]));
  }
  if (text.rfind("discrete:", 0) == 0) {
    std::vector<std::pair<Rational, Rational>> atoms;
    for (std::string_view entry : split(text.substr(9), ',')) {
      const auto vp = split(entry, ':');
      if (vp.size() != 2) {
        throw std::invalid_argument(
            "parse_distribution: discrete:v1:p1,v2:p2,...");
      }
      atoms.emplace_back(Rational::parse(vp[0]), Rational::parse(vp[1]));
    }
    return preset_discrete(std::move(atoms));
  }
  return preset(text);
}

}  // namespace detmom
