#pragma once

#include "detmom/moments.hpp"
#include "detmom/series.hpp"

namespace detmom {

/// Exponential-type generating series of the fourth determinant moments:
/// coefficient n holds det_moment4(n) / (n!)^2.
Series det4_series(const Moments& m, int order = kDefaultSeriesOrder);

/// Same series restricted to symmetric entries (raw m2, m4).
Series det4_sym_series(const Moments& m, int order = kDefaultSeriesOrder);

/// The centered-entry series: coefficient n holds the fourth moment of a
/// matrix of centered entries with the given central moments, over (n!)^2.
Series centered_det4_series(const CentralMoments& c,
                            int order = kDefaultSeriesOrder);

/// Bivariate Gram series: coefficient of t^p omega^(n-p) holds
/// (n-p)!/(n! p!) * gram_moment4(n, p).
BivariateSeries gram4_series(const Moments& m,
                             int order_t = kDefaultBivariateOrder,
                             int order_omega = kDefaultBivariateOrder);

/// Symmetric-entry bivariate Gram series (raw m2, m4).
BivariateSeries gram4_sym_series(const Moments& m,
                                 int order_t = kDefaultBivariateOrder,
                                 int order_omega = kDefaultBivariateOrder);

/// (n!)^2 times coefficient n: recovers the square moment from a series.
Rational extract_square_moment(const Series& s, int n);

/// n! p! / (n-p)! times the (t^p, omega^(n-p)) coefficient: recovers the
/// Gram moment.
Rational extract_gram_moment(const BivariateSeries& b, int n, int p);

/// The fourth raw moment enters the series only through an exp(m4 t) factor,
/// so bumping m4 by one must multiply the whole series by exp(t). Checks
/// that identity coefficientwise to the given order.
bool check_m4_shift(const Moments& m, int order = kDefaultSeriesOrder);

}  // namespace detmom
