#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "detmom/moments.hpp"
#include "detmom/rational.hpp"

namespace detmom {

/// Enumeration guard: derangement counts are exact 64-bit up to this size
/// and the direct generator stays fast.
inline constexpr int kMaxDerangementSize = 10;

/// Cycle-count histogram over the derangements of a given size.
struct CycleProfile {
  int size = 0;
  std::map<int, std::uint64_t> counts;  // cycle count -> derangements

  std::uint64_t total() const;  // the derangement number
};

/// Exact profile by direct backtracking enumeration (no fixed points allowed
/// at any step); j <= kMaxDerangementSize.
CycleProfile derangement_cycle_profile(int j);

/// sum over derangements of size j of u^(number of cycles).
Rational derangement_weight_sum(int j, const Rational& u);

struct EgfCheckReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Verifies sum_{derangements of j} u^cycles == j! [x^j] e^{-ux}/(1-x)^u for
/// every j <= j_max; u must be a positive integer (the series is then built
/// from integer-power tools alone).
EgfCheckReport egf_check(int j_max, int u);

/// Fourth symmetric moment assembled from the column-type decomposition:
/// sum_j C(n,j)^2 (n-j)! m4^(n-j) j! m2^(2j) * (weight sum with u = 3).
/// Valid for symmetric moments (m1 = m3 = 0 enforced); n <= 10.
Rational det_moment4_sym_by_derangements(int n, const Moments& m);

/// Number of ways to pick an a-subset and a b-subset of {1..n} sharing
/// exactly `overlap` elements: n! / (q! (a-q)! (b-q)! (n-a-b+q)!), with
/// reciprocals of negative factorials treated as zero.
Rational subset_pair_count(int n, int a, int b, int overlap);

/// The three selection-count families of the Gram expansion, as a
/// convenience over subset_pair_count: 'c' pairs p with p, 'd' pairs p with
/// p+1, 'e' pairs p+1 with p-1.
Rational selection_count(char kind, int n, int p, int q);

}  // namespace detmom
