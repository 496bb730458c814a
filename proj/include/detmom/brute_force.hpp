#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "detmom/moments.hpp"
#include "detmom/rational.hpp"

namespace detmom {

/// Finite rational-support distribution for exact exhaustive expectations.
struct DiscreteDistribution {
  std::vector<std::pair<Rational, Rational>> atoms;  // (value, probability)

  /// Throws unless all probabilities are positive and sum to one.
  void validate() const;

  Rational moment(int r) const;
  Moments moments(int order) const;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Exact E |U^T U|^{k/2} over all entry assignments of an n x p matrix with
/// i.i.d. entries from `dist` (the square case p = n evaluates |A|^k through
/// the same quantity). k must be even; p = 0 yields 1 by convention.
///
/// Refuses with std::length_error when atoms^(n*p) exceeds `budget`; the
/// message carries the required budget. Enumeration is a row-major odometer
/// over entry assignments; with several workers the sum is split by the first
/// entry's atom index and combined exactly, so the result does not depend on
/// the worker count.
Rational brute_force_moment(const DiscreteDistribution& dist, int n, int p,
                            int k,
                            std::uint64_t budget = kDefaultEnumerationBudget,
                            int workers = 1);

}  // namespace detmom
