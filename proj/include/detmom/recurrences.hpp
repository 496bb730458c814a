#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "detmom/moments.hpp"
#include "detmom/rational.hpp"

namespace detmom {

/// Recurrence evaluation of the fourth square moment through the expansion
/// of (|B| + m1 S)^4 into centered-matrix summands. Memoizes the auxiliary
/// sequences h0, h9, h10 and the centered moments g4. A state owns its memo
/// tables; independent states may run concurrently.
class SummandRecurrence {
 public:
  explicit SummandRecurrence(const Moments& m);

  /// Fourth moment of the centered matrix (the symmetric-entry closed form
  /// evaluated at the central moments); zero for negative index.
  Rational g4(int n);

  /// h0(n) = mu2 g4(n-1) + (n-1)^2 mu2^2 h0(n-1), h0(0) = 0.
  Rational h0(int n);

  /// h9(n) = mu2 h0(n-1) + (n-2)^2 mu2^3 h0(n-2) + (n-2)^2 mu2^2 h9(n-1).
  Rational h9(int n);

  /// h10(n) = (n-2)^2 mu2^3 h0(n-2) + (n-2)^2 mu2^2 h10(n-1).
  Rational h10(int n);

  /// E|A|^4 assembled from the five summands.
  Rational det_moment4(int n);

  /// E|A|^2|B|^2, the diagonal of the mixed square/centered Gram moment;
  /// one of the band seeds of the Gram recurrence system.
  Rational mixed_diag(int n);

  /// The band value E|V1|^4 of the ones-extended centered (p+1) x p matrix:
  /// (p+1)(g4(p) + 3 p^2 mu2 h0(p)); the second band seed.
  Rational ones_extended_band(int p);

  const CentralMoments& central() const { return central_; }

 private:
  Rational memoized(std::vector<std::optional<Rational>>& table, int n,
                    Rational (SummandRecurrence::*fn)(int));
  Rational g4_uncached(int n);
  Rational h0_uncached(int n);
  Rational h9_uncached(int n);
  Rational h10_uncached(int n);

  Rational m1_;
  CentralMoments central_;
  std::vector<std::optional<Rational>> g4_, h0_, h9_, h10_;
};

/// Demand-driven evaluation of the mutually recursive Gram-moment system
/// (the eight auxiliary double sequences plus the Gram moment itself).
/// Circularity on the diagonal band is broken by three closed-form seeds:
/// the square moment at p = n, the mixed diagonal, and the ones-extended
/// band value. Terms whose factorial argument is negative contribute zero.
class GramRecurrence {
 public:
  /// The auxiliary mixed moments of the system, named for the matrices they
  /// pair: `kSquareExtended` = E|U^T U||V1^T V1| with V1 the ones-extended
  /// centered matrix, and so on. Exposed for hand-value checks.
  enum class Aux {
    kSquareExtended,   // alpha
    kExtendedSquared,  // beta
    kSquareSigma,      // gamma
    kSquareCentered,   // delta
    kExtendedSigma,    // epsilon
    kCenteredExtended, // eta
    kCenteredSigma,    // rho
    kSigmaSquared,     // kappa
  };

  explicit GramRecurrence(const Moments& m);

  /// E|U^T U|^2 for an n x p matrix via the recurrence system; requires
  /// mu2 != 0. Returns 0 for p > n and 1 for p = 0.
  Rational gram_moment4(int n, int p);

  Rational aux_moment(Aux which, int n, int p);

 private:
  enum class Fn { kGram4, kAlpha, kBeta, kGamma, kDelta, kEpsilon, kEta, kRho, kKappa };
  static constexpr int kFnCount = 9;

  Rational eval(Fn f, int n, int p);
  Rational recurrence(Fn f, int n, int p);
  Rational centered_gram4(int n, int p);

  Moments moments_;
  SummandRecurrence summands_;
  std::map<std::pair<int, int>, Rational> memo_[kFnCount];
  int depth_ = 0;
};

/// Coefficientwise check of the closed generating functions of the three
/// h-sequences against their recurrences, up to the given order.
bool check_h_series(const Moments& m, int order = 12);

/// Coefficientwise check of the two band-series identities (mixed diagonal
/// and ones-extended band) against their closed forms.
bool check_band_series(const Moments& m, int order = 12);

}  // namespace detmom
