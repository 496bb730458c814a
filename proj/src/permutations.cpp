#include "detmom/permutations.hpp"

#include <stdexcept>

#include "detmom/factorials.hpp"
#include "detmom/series.hpp"

namespace detmom {

std::uint64_t CycleProfile::total() const {
  std::uint64_t t = 0;
  for (const auto& [cycles, count] : counts) t += count;
  return t;
}

namespace {

void enumerate_derangements(int j, std::vector<int>& image,
                            std::vector<bool>& used, int pos,
                            CycleProfile& profile) {
  if (pos == j) {
    int cycles = 0;
    std::vector<bool> seen(static_cast<size_t>(j), false);
    for (int start = 0; start < j; ++start) {
      if (seen[static_cast<size_t>(start)]) continue;
      ++cycles;
      for (int i = start; !seen[static_cast<size_t>(i)];
           i = image[static_cast<size_t>(i)]) {
        seen[static_cast<size_t>(i)] = true;
      }
    }
    ++profile.counts[cycles];
    return;
  }
  for (int target = 0; target < j; ++target) {
    if (target == pos || used[static_cast<size_t>(target)]) continue;
    used[static_cast<size_t>(target)] = true;
    image[static_cast<size_t>(pos)] = target;
    enumerate_derangements(j, image, used, pos + 1, profile);
    used[static_cast<size_t>(target)] = false;
  }
}

}  // namespace

CycleProfile derangement_cycle_profile(int j) {
  if (j < 0) throw std::invalid_argument("derangement_cycle_profile: j < 0");
  if (j > kMaxDerangementSize) {
    throw std::invalid_argument(
        "derangement_cycle_profile: size exceeds the enumeration guard");
  }
  CycleProfile profile;
  profile.size = j;
  if (j == 0) {
    profile.counts[0] = 1;  // the empty permutation
    return profile;
  }
  std::vector<int> image(static_cast<size_t>(j));
  std::vector<bool> used(static_cast<size_t>(j), false);
  enumerate_derangements(j, image, used, 0, profile);
  return profile;
}

Rational derangement_weight_sum(int j, const Rational& u) {
  const CycleProfile profile = derangement_cycle_profile(j);
  Rational sum;
  for (const auto& [cycles, count] : profile.counts) {
    sum += Rational(static_cast<long>(count)) * u.pow(cycles);
  }
  return sum;
}

EgfCheckReport egf_check(int j_max, int u) {
  if (u < 1) throw std::invalid_argument("egf_check: u must be a positive integer");
  if (j_max > kMaxDerangementSize) {
    throw std::invalid_argument("egf_check: j_max exceeds the enumeration guard");
  }
  // e^{-ux} (1-x)^{-u}, both factors exact with integer u.
  const Series series =
      Series::monomial(Rational(-u), 1, j_max).exp() *
      Series::geometric_power(Rational(1), u, j_max);

  EgfCheckReport report;
  for (int j = 0; j <= j_max; ++j) {
    const Rational enumerated = derangement_weight_sum(j, Rational(u));
    const Rational from_series = factorial(j) * series.at(j);
    if (enumerated != from_series) {
      report.ok = false;
      report.failures.push_back(
          "u=" + std::to_string(u) + " j=" + std::to_string(j) + ": " +
          enumerated.str() + " != " + from_series.str());
    }
  }
  return report;
}

Rational det_moment4_sym_by_derangements(int n, const Moments& m) {
  if (m.order() < 4) {
    throw std::invalid_argument(
        "det_moment4_sym_by_derangements: needs moments up to m4");
  }
  if (!m.m(1).is_zero() || !m.m(3).is_zero()) {
    throw std::invalid_argument(
        "det_moment4_sym_by_derangements: requires symmetric moments "
        "(m1 = m3 = 0)");
  }
  if (n < 0 || n > kMaxDerangementSize) {
    throw std::invalid_argument(
        "det_moment4_sym_by_derangements: n exceeds the enumeration guard");
  }
  Rational sum;
  for (int j = 0; j <= n; ++j) {
    sum += binomial(n, j).pow(2) * factorial(n - j) * m.m(4).pow(n - j) *
           factorial(j) * m.m(2).pow(2 * j) *
           derangement_weight_sum(j, Rational(3));
  }
  return sum;
}

Rational subset_pair_count(int n, int a, int b, int overlap) {
  if (n < 0) throw std::invalid_argument("subset_pair_count: n < 0");
  const Rational tail = reciprocal_factorial(overlap) *
                        reciprocal_factorial(a - overlap) *
                        reciprocal_factorial(b - overlap) *
                        reciprocal_factorial(n - a - b + overlap);
  return factorial(n) * tail;
}

Rational selection_count(char kind, int n, int p, int q) {
  switch (kind) {
    case 'c':
      return subset_pair_count(n, p, p, q);
    case 'd':
      return subset_pair_count(n, p, p + 1, q);
    case 'e':
      return subset_pair_count(n, p + 1, p - 1, q);
    default:
      throw std::invalid_argument("selection_count: kind must be c, d or e");
  }
}

}  // namespace detmom
