#pragma once

#include <array>
#include <utility>

#include "detmom/moments.hpp"
#include "detmom/rational.hpp"

namespace detmom {

/// E|A|^2 for an n x n matrix of i.i.d. entries with the given raw moments.
Rational det_moment2(int n, const Moments& m);

/// E|U^T U| for an n x p matrix; 1 at p = 0, 0 above the diagonal.
Rational gram_moment2(int n, int p, const Moments& m);

/// E|A|^4 for symmetric entries; uses m2 and m4 only. Evaluated as a
/// polynomial in the raw moments, so m2 = 0 needs no special handling.
Rational det_moment4_sym(int n, const Moments& m);

/// Gram analogue of det_moment4_sym.
Rational gram_moment4_sym(int n, int p, const Moments& m);

/// Weights of the C(n-j+i, i) expansion basis for the general fourth
/// moment, indexed i = -2..4 (shifted by 2). `linear` multiplies (n-p) and
/// `quadratic` multiplies (n-p)(n-p+7) in the Gram variant.
struct FourthMomentWeights {
  std::array<Rational, 7> base;
  std::array<Rational, 7> linear;
  std::array<Rational, 7> quadratic;
};

/// Requires mu2 != 0 (the weights are rational functions of mu2).
FourthMomentWeights fourth_moment_weights(const Rational& m1,
                                          const CentralMoments& c);

/// E|A|^4 for generally distributed entries.
Rational det_moment4(int n, const Moments& m);

/// Evaluation hook with externally supplied weights; exists so alternate
/// weight conventions can be compared against the brute-force oracle.
Rational det_moment4_with_weights(int n, const CentralMoments& c,
                                  const FourthMomentWeights& w);

/// E|U^T U|^2 for generally distributed entries.
Rational gram_moment4(int n, int p, const Moments& m);

/// E|A|^6 for symmetric entries (m2, m4, m6); polynomial evaluation.
Rational det_moment6_sym(int n, const Moments& m);

/// E|A|^6 for centered entries (m1 = 0 required; odd moments may be
/// nonzero).
Rational det_moment6_centered(int n, const Moments& m);

/// E|U^T U|^m for N(mu, sigma^2) entries, any m >= 1 (Wishart moments,
/// central and non-central).
Rational gaussian_gram_moment(int m, int n, int p, const Rational& mu,
                              const Rational& sigma2);

/// Closed quartic polynomials for Gaussian entries; an independent route
/// used to cross-check det_moment4 / gram_moment4.
Rational gaussian_det_moment4(int n, const Rational& mu,
                              const Rational& sigma2);
Rational gaussian_gram_moment4(int n, int p, const Rational& mu,
                               const Rational& sigma2);

/// E V_d^{2l} for the volume of a simplex spanned by d+1 uniform points in a
/// unit-volume d-simplex; l in {1, 2}.
Rational simplex_volume_moment(int d, int l);

/// Large-n behaviour of the fourth moment with Exp(1) entries:
/// value ~ exp1_asymptotic_factor(n) * e^6.
Rational exp1_asymptotic_factor(int n);
/// The quartic polynomial inside that factor.
Rational exp1_asymptotic_poly(int n);

/// Rational enclosure [lo, hi] of e^6 with hi - lo < 10^-digits.
std::pair<Rational, Rational> e6_interval(int digits = 200);

}  // namespace detmom
