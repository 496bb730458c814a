#include "detmom/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "detmom/factorials.hpp"

namespace detmom {

namespace {

void require_order(const Moments& m, int order, const char* who) {
  if (m.order() < order) {
    throw std::invalid_argument(std::string(who) + ": needs moments up to m" +
                                std::to_string(order));
  }
}

}  // namespace

Rational det_moment2(int n, const Moments& m) {
  require_order(m, 2, "det_moment2");
  if (n < 0) throw std::invalid_argument("det_moment2: negative n");
  if (n == 0) return Rational(1);
  const Rational m1sq = m.m(1) * m.m(1);
  return factorial(n) * (m.m(2) + m1sq * Rational(n - 1)) *
         (m.m(2) - m1sq).pow(n - 1);
}

Rational gram_moment2(int n, int p, const Moments& m) {
  require_order(m, 2, "gram_moment2");
  if (n < 0 || p < 0) throw std::invalid_argument("gram_moment2: negative size");
  if (p == 0) return Rational(1);
  if (p > n) return Rational(0);
  const Rational m1sq = m.m(1) * m.m(1);
  return factorial(p) * binomial(n, p) * (m.m(2) + m1sq * Rational(p - 1)) *
         (m.m(2) - m1sq).pow(p - 1);
}

Rational det_moment4_sym(int n, const Moments& m) {
  require_order(m, 4, "det_moment4_sym");
  if (n < 0) throw std::invalid_argument("det_moment4_sym: negative n");
  // (n!)^2 sum_j (m4 - 3 m2^2)^j / j! * m2^(2(n-j)) * C(n-j+2, 2); the
  // denominators of the usual normalised form are cleared so the expression
  // is a genuine polynomial in the moments.
  const Rational excess = m.m(4) - Rational(3) * m.m(2) * m.m(2);
  Rational sum;
  Rational excess_pow(1);
  for (int j = 0; j <= n; ++j) {
    sum += excess_pow / factorial(j) * m.m(2).pow(2 * (n - j)) *
           binomial(n - j + 2, 2);
    excess_pow *= excess;
  }
  return factorial(n).pow(2) * sum;
}

Rational gram_moment4_sym(int n, int p, const Moments& m) {
  require_order(m, 4, "gram_moment4_sym");
  if (n < 0 || p < 0) {
    throw std::invalid_argument("gram_moment4_sym: negative size");
  }
  if (p == 0) return Rational(1);
  if (p > n) return Rational(0);
  const Rational excess = m.m(4) - Rational(3) * m.m(2) * m.m(2);
  Rational sum;
  Rational excess_pow(1);
  for (int j = 0; j <= p; ++j) {
    sum += excess_pow / factorial(j) * m.m(2).pow(2 * (p - j)) *
           binomial(n - j + 2, n - p + 2);
    excess_pow *= excess;
  }
  return factorial(p).pow(2) * binomial(n, p) * sum;
}

FourthMomentWeights fourth_moment_weights(const Rational& m1,
                                          const CentralMoments& c) {
  if (c.mu2.is_zero()) {
    throw std::domain_error("fourth_moment_weights: mu2 = 0 is degenerate");
  }
  const Rational& u2 = c.mu2;
  const Rational& u3 = c.mu3;
  const Rational u2_5 = u2.pow(5);
  const Rational u2_8 = u2.pow(8);

  FourthMomentWeights w;
  w.base[0] = m1.pow(4) * u3.pow(4) / u2_8;
  w.base[1] = Rational(-4) * m1.pow(3) * u3.pow(3) * (u2.pow(2) + m1 * u3) /
              u2_8;
  w.base[2] = Rational(6) * m1.pow(2) * u3.pow(2) *
              (u2.pow(4) + Rational(2) * m1 * u2.pow(2) * u3 +
               m1.pow(2) * u3.pow(2) - m1.pow(2) * u2.pow(3)) /
              u2_8;
  w.base[3] = Rational(2) * m1 *
              (Rational(6) * m1.pow(2) * u2.pow(5) * u3 -
               Rational(2) * m1.pow(3) * u2.pow(6) -
               Rational(2) * u2.pow(6) * u3 +
               Rational(9) * m1.pow(3) * u2.pow(3) * u3.pow(2) -
               Rational(6) * m1 * u2.pow(4) * u3.pow(2) -
               Rational(6) * m1.pow(2) * u2.pow(2) * u3.pow(3) -
               Rational(2) * m1.pow(3) * u3.pow(4)) /
              u2_8;
  w.base[4] = Rational(1) +
              m1 *
                  (Rational(19) * m1.pow(3) * u2.pow(6) -
                   Rational(6) * m1 * u2.pow(7) -
                   Rational(24) * m1.pow(2) * u2.pow(5) * u3 +
                   Rational(4) * u2.pow(6) * u3 -
                   Rational(18) * m1.pow(3) * u2.pow(3) * u3.pow(2) +
                   Rational(6) * m1 * u2.pow(4) * u3.pow(2) +
                   Rational(4) * m1.pow(2) * u2.pow(2) * u3.pow(3) +
                   m1.pow(3) * u3.pow(4)) /
                  u2_8;
  w.base[5] = Rational(3) * m1.pow(2) *
              (Rational(2) * u2.pow(4) - Rational(9) * m1.pow(2) * u2.pow(3) +
               Rational(4) * m1 * u2.pow(2) * u3 +
               Rational(2) * m1.pow(2) * u3.pow(2)) /
              u2_5;
  w.base[6] = Rational(12) * m1.pow(4) / u2.pow(2);

  w.linear[2] = Rational(-2) * m1.pow(4) * u3.pow(2) / u2_5;
  w.linear[3] = Rational(2) * m1.pow(3) *
                (Rational(2) * u2.pow(2) * u3 + Rational(3) * m1 * u3.pow(2) -
                 m1 * u2.pow(3)) /
                u2_5;
  w.linear[4] = m1.pow(2) *
                (Rational(3) * m1.pow(2) * u2.pow(3) -
                 Rational(2) * u2.pow(4) -
                 Rational(8) * m1 * u2.pow(2) * u3 -
                 Rational(6) * m1.pow(2) * u3.pow(2)) /
                u2_5;
  w.linear[5] = m1.pow(2) *
                (Rational(2) * u2.pow(4) + Rational(4) * m1 * u2.pow(2) * u3 +
                 Rational(2) * m1.pow(2) * u3.pow(2) - m1.pow(2) * u2.pow(3)) /
                u2_5;

  w.quadratic[4] = m1.pow(4) / u2.pow(2);
  w.quadratic[5] = Rational(-2) * m1.pow(4) / u2.pow(2);
  w.quadratic[6] = m1.pow(4) / u2.pow(2);
  return w;
}

Rational det_moment4_with_weights(int n, const CentralMoments& c,
                                  const FourthMomentWeights& w) {
  const Rational excess = c.mu4 / (c.mu2 * c.mu2) - Rational(3);
  Rational sum;
  Rational excess_pow(1);
  for (int j = 0; j <= n; ++j) {
    Rational inner;
    for (int i = -2; i <= 4; ++i) {
      const Rational& weight = w.base[static_cast<size_t>(i + 2)];
      if (weight.is_zero()) continue;
      inner += weight * extended_binomial(n - j + i, i);
    }
    sum += excess_pow / factorial(j) * inner;
    excess_pow *= excess;
  }
  return factorial(n).pow(2) * c.mu2.pow(2 * n) * sum;
}

Rational det_moment4(int n, const Moments& m) {
  require_order(m, 4, "det_moment4");
  if (n < 0) throw std::invalid_argument("det_moment4: negative n");
  const CentralMoments c = central_from_raw(m);
  if (c.mu2.is_zero()) {
    // Constant entries: every row repeats for n >= 2.
    if (n == 0) return Rational(1);
    if (n == 1) return m.m(4);
    return Rational(0);
  }
  return det_moment4_with_weights(n, c, fourth_moment_weights(m.m(1), c));
}

Rational gram_moment4(int n, int p, const Moments& m) {
  require_order(m, 4, "gram_moment4");
  if (n < 0 || p < 0) throw std::invalid_argument("gram_moment4: negative size");
  if (p == 0) return Rational(1);
  if (p > n) return Rational(0);
  const CentralMoments c = central_from_raw(m);
  if (c.mu2.is_zero()) {
    // Constant entries: U has rank one, so the Gram determinant vanishes for
    // p >= 2; at p = 1 it is E (sum_i X_i^2)^2 expanded directly.
    if (p == 1) {
      return Rational(n) * m.m(4) +
             Rational(n) * Rational(n - 1) * m.m(2) * m.m(2);
    }
    return Rational(0);
  }
  const FourthMomentWeights w = fourth_moment_weights(m.m(1), c);
  const Rational excess = c.mu4 / (c.mu2 * c.mu2) - Rational(3);
  const Rational band(n - p);
  const Rational band_quad = band * Rational(n - p + 7);
  Rational sum;
  Rational excess_pow(1);
  for (int j = 0; j <= p; ++j) {
    Rational inner;
    for (int i = -2; i <= 4; ++i) {
      const auto idx = static_cast<size_t>(i + 2);
      const Rational weight =
          w.base[idx] + w.linear[idx] * band + w.quadratic[idx] * band_quad;
      if (weight.is_zero()) continue;
      inner += weight * extended_binomial(n - j + i, n - p + i);
    }
    sum += excess_pow / factorial(j) * inner;
    excess_pow *= excess;
  }
  return factorial(p).pow(2) * binomial(n, p) * c.mu2.pow(2 * p) * sum;
}

namespace {

// Shared kernel of the sixth-moment formulas; `sixth` is the cleared
// numerator of the sixth-moment excess and `third_sq` the squared third
// moment (zero in the symmetric case).
Rational det_moment6_kernel(int n, const Rational& m2, const Rational& sixth,
                            const Rational& fourth, const Rational& third_sq) {
  Rational total;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      const Rational head = Rational(1 + i) * Rational(2 + i) *
                            factorial(4 + i) / Rational(48) *
                            binomial(14 + j + 2 * i, j - i) *
                            fourth.pow(j - i) * m2.pow(j + 2 * i);
      if (head.is_zero()) continue;
      if (third_sq.is_zero()) {
        total += head / factorial(n - j) * sixth.pow(n - j);
      } else {
        for (int k = 0; k <= n - j; ++k) {
          total += head / factorial(n - j - k) * binomial(10, k) *
                   sixth.pow(n - j - k) * third_sq.pow(k);
        }
      }
    }
  }
  return factorial(n).pow(2) * total;
}

}  // namespace

Rational det_moment6_sym(int n, const Moments& m) {
  require_order(m, 6, "det_moment6_sym");
  if (n < 0) throw std::invalid_argument("det_moment6_sym: negative n");
  const Rational& m2 = m.m(2);
  const Rational sixth =
      m.m(6) - Rational(15) * m.m(4) * m2 + Rational(30) * m2.pow(3);
  const Rational fourth = m.m(4) - Rational(3) * m2 * m2;
  return det_moment6_kernel(n, m2, sixth, fourth, Rational(0));
}

Rational det_moment6_centered(int n, const Moments& m) {
  require_order(m, 6, "det_moment6_centered");
  if (n < 0) throw std::invalid_argument("det_moment6_centered: negative n");
  if (!m.m(1).is_zero()) {
    throw std::invalid_argument(
        "det_moment6_centered: requires centered entries (m1 = 0)");
  }
  const Rational& m2 = m.m(2);
  const Rational third_sq = m.m(3) * m.m(3);
  const Rational sixth = m.m(6) - Rational(10) * third_sq -
                         Rational(15) * m.m(4) * m2 + Rational(30) * m2.pow(3);
  const Rational fourth = m.m(4) - Rational(3) * m2 * m2;
  return det_moment6_kernel(n, m2, sixth, fourth, third_sq);
}

Rational gaussian_gram_moment(int m, int n, int p, const Rational& mu,
                              const Rational& sigma2) {
  if (m < 1) throw std::invalid_argument("gaussian_gram_moment: m must be >= 1");
  if (sigma2.sign() <= 0) {
    throw std::invalid_argument("gaussian_gram_moment: sigma^2 must be > 0");
  }
  if (n < 0 || p < 0) {
    throw std::invalid_argument("gaussian_gram_moment: negative size");
  }
  if (p == 0) return Rational(1);
  if (p > n) return Rational(0);

  Rational selection(1);
  for (int r = 0; r < m; ++r) {
    selection *= binomial(n + 2 * r, n - p + 2 * r);
  }
  const Rational noncentral = Rational(n) * Rational(p) * mu * mu / sigma2;
  Rational series;
  Rational nc_pow(1);
  for (int s = 0; s <= m; ++s) {
    series +=
        binomial(m, s) * double_factorial(n - 2) /
        double_factorial(n + 2 * s - 2) * nc_pow;
    nc_pow *= noncentral;
  }
  return factorial(p).pow(m) * sigma2.pow(m * p) * selection * series;
}

Rational gaussian_det_moment4(int n, const Rational& mu,
                              const Rational& sigma2) {
  if (n < 0) throw std::invalid_argument("gaussian_det_moment4: negative n");
  if (sigma2.sign() <= 0) {
    throw std::invalid_argument("gaussian_det_moment4: sigma^2 must be > 0");
  }
  const Rational mu2 = mu * mu;
  return factorial(n).pow(2) * Rational(n + 1) * sigma2.pow(2 * (n - 1)) *
         (Rational(n).pow(3) * mu2 * mu2 +
          Rational(n + 2) * sigma2 * (Rational(2 * n) * mu2 + sigma2)) /
         Rational(2);
}

Rational gaussian_gram_moment4(int n, int p, const Rational& mu,
                               const Rational& sigma2) {
  if (n < 0 || p < 0) {
    throw std::invalid_argument("gaussian_gram_moment4: negative size");
  }
  if (sigma2.sign() <= 0) {
    throw std::invalid_argument("gaussian_gram_moment4: sigma^2 must be > 0");
  }
  const Rational mu2 = mu * mu;
  return factorial(n) * factorial(n + 1) * sigma2.pow(2 * (p - 1)) *
         reciprocal_factorial(n - p) * reciprocal_factorial(n - p + 2) *
         (Rational(n) * Rational(p).pow(2) * mu2 * mu2 +
          Rational(n + 2) *
              (Rational(2 * p) * mu2 * sigma2 + sigma2 * sigma2));
}

Rational simplex_volume_moment(int d, int l) {
  if (d < 1) throw std::invalid_argument("simplex_volume_moment: d must be >= 1");
  if (l != 1 && l != 2) {
    throw std::invalid_argument(
        "simplex_volume_moment: only l = 1 and l = 2 are available");
  }
  const DistributionPreset exp1 = preset("exp1");
  const Rational scale = (factorial(d) / factorial(d + 2 * l)).pow(d + 1);
  const Rational moment = (l == 1) ? det_moment2(d + 1, exp1.moments)
                                   : det_moment4(d + 1, exp1.moments);
  return scale * moment;
}

Rational exp1_asymptotic_poly(int n) {
  const Rational x(n);
  return Rational(450) + Rational(141) * x - Rational(27) * x.pow(2) -
         Rational(5) * x.pow(3) + x.pow(4);
}

Rational exp1_asymptotic_factor(int n) {
  if (n < 1) throw std::invalid_argument("exp1_asymptotic_factor: n must be >= 1");
  return factorial(n).pow(2) * exp1_asymptotic_poly(n) / Rational(2);
}

std::pair<Rational, Rational> e6_interval(int digits) {
  if (digits < 1) throw std::invalid_argument("e6_interval: digits must be >= 1");
  const Rational tolerance = Rational(10).pow(-digits);
  Rational partial;
  Rational term(1);  // 6^k / k!
  int k = 0;
  while (true) {
    partial += term;
    ++k;
    term = term * Rational(6) / Rational(k);
    if (k > 6) {
      // Tail bound: geometric with ratio 6/(k+1) < 1 from the next term on.
      const Rational remainder =
          term / (Rational(1) - Rational(6) / Rational(k + 1));
      if (remainder < tolerance) return {partial, partial + remainder};
    }
  }
}

}  // namespace detmom
