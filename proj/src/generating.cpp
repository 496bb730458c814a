#include "detmom/generating.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "detmom/factorials.hpp"

namespace detmom {

namespace {

// Coefficients of the degree-6 numerator polynomial of the square series and
// the degree-4 block that the Gram series adds per power of omega. Index 0
// is the t^1 coefficient.
struct NumeratorPolynomials {
  std::vector<Rational> square;
  std::vector<Rational> gram;
};

NumeratorPolynomials numerator_polynomials(const Rational& m1,
                                           const CentralMoments& c) {
  const Rational& u2 = c.mu2;
  const Rational& u3 = c.mu3;
  NumeratorPolynomials out;
  out.square = {
      m1.pow(4) + Rational(6) * m1.pow(2) * u2 - Rational(2) * u2.pow(2) +
          Rational(4) * m1 * u3,
      Rational(7) * m1.pow(4) * u2.pow(2) -
          Rational(6) * m1.pow(2) * u2.pow(3) + u2.pow(4) +
          Rational(12) * m1.pow(3) * u2 * u3 -
          Rational(8) * m1 * u2.pow(2) * u3 +
          Rational(6) * m1.pow(2) * u3.pow(2),
      Rational(2) * m1 *
          (Rational(2) * m1.pow(3) * u2.pow(4) -
           Rational(6) * m1.pow(2) * u2.pow(3) * u3 +
           Rational(2) * u2.pow(4) * u3 +
           Rational(3) * m1.pow(3) * u2 * u3.pow(2) -
           Rational(6) * m1 * u2.pow(2) * u3.pow(2) +
           Rational(2) * m1.pow(2) * u3.pow(3)),
      m1.pow(2) * u3.pow(2) *
          (m1.pow(2) * u3.pow(2) - Rational(6) * m1.pow(2) * u2.pow(3) +
           Rational(6) * u2.pow(4) - Rational(8) * m1 * u2.pow(2) * u3),
      Rational(2) * m1.pow(3) * u2.pow(2) * u3.pow(3) *
          (Rational(2) * u2.pow(2) - m1 * u3),
      m1.pow(4) * u2.pow(4) * u3.pow(4),
  };
  out.gram = {
      m1.pow(2) + Rational(2) * u2,
      Rational(5) * m1.pow(2) * u2.pow(2) + Rational(4) * m1 * u2 * u3 -
          Rational(2) * u2.pow(3),
      Rational(2) * m1.pow(2) * u2.pow(4) -
          Rational(4) * m1 * u2.pow(3) * u3 +
          Rational(2) * m1.pow(2) * u2 * u3.pow(2),
      Rational(-2) * m1.pow(2) * u2.pow(3) * u3.pow(2),
  };
  return out;
}

Series polynomial_series(const Rational& constant,
                         const std::vector<Rational>& coeffs, int order) {
  std::vector<Rational> v(static_cast<size_t>(order) + 1);
  v[0] = constant;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (static_cast<int>(k) + 1 <= order) v[k + 1] = coeffs[k];
  }
  return Series::from_coefficients(std::move(v));
}

Series exponential_factor(const Rational& rate, int order) {
  return Series::monomial(rate, 1, order).exp();
}

void require_order4(const Moments& m, const char* who) {
  if (m.order() < 4) {
    throw std::invalid_argument(std::string(who) + ": needs moments up to m4");
  }
}

}  // namespace

Series det4_series(const Moments& m, int order) {
  require_order4(m, "det4_series");
  const CentralMoments c = central_from_raw(m);
  const NumeratorPolynomials num = numerator_polynomials(m.m(1), c);
  const Rational rate = c.mu4 - Rational(3) * c.mu2 * c.mu2;
  return exponential_factor(rate, order) *
         Series::geometric_power(c.mu2 * c.mu2, 5, order) *
         polynomial_series(Rational(1), num.square, order);
}

Series det4_sym_series(const Moments& m, int order) {
  require_order4(m, "det4_sym_series");
  const Rational rate = m.m(4) - Rational(3) * m.m(2) * m.m(2);
  return exponential_factor(rate, order) *
         Series::geometric_power(m.m(2) * m.m(2), 3, order);
}

Series centered_det4_series(const CentralMoments& c, int order) {
  const Rational rate = c.mu4 - Rational(3) * c.mu2 * c.mu2;
  return exponential_factor(rate, order) *
         Series::geometric_power(c.mu2 * c.mu2, 3, order);
}

BivariateSeries gram4_series(const Moments& m, int order_t, int order_omega) {
  require_order4(m, "gram4_series");
  const CentralMoments c = central_from_raw(m);
  const NumeratorPolynomials num = numerator_polynomials(m.m(1), c);
  const Rational m1_sq = m.m(1) * m.m(1);
  const Rational mu2_sq = c.mu2 * c.mu2;
  const Rational rate = c.mu4 - Rational(3) * mu2_sq;

  const Series expo = exponential_factor(rate, order_t);
  const Series square_poly = polynomial_series(Rational(1), num.square, order_t);
  const Series gram_poly = polynomial_series(Rational(0), num.gram, order_t);
  const Series omega_sq_term =
      Series::monomial(Rational(2) * m1_sq * m1_sq * mu2_sq, 2, order_t);

  // Expanding 1/(1 - omega - mu2^2 t)^j in omega turns each omega power into
  // a single 1/(1 - mu2^2 t) power, so every omega slice is univariate:
  // slice_i = e^{rate t}/(1-mu2^2 t)^{i+5}
  //           * (squarePoly + i m1^2 gramPoly + C(i,2) 2 m1^4 mu2^2 t^2).
  std::vector<Series> slices;
  slices.reserve(static_cast<size_t>(order_omega) + 1);
  for (int i = 0; i <= order_omega; ++i) {
    Series numerator = square_poly + gram_poly.scaled(Rational(i) * m1_sq);
    if (i >= 2) {
      numerator = numerator + omega_sq_term.scaled(binomial(i, 2));
    }
    slices.push_back(expo * Series::geometric_power(mu2_sq, i + 5, order_t) *
                     numerator);
  }
  return BivariateSeries::from_omega_slices(std::move(slices));
}

BivariateSeries gram4_sym_series(const Moments& m, int order_t,
                                 int order_omega) {
  require_order4(m, "gram4_sym_series");
  const Rational m2_sq = m.m(2) * m.m(2);
  const Rational rate = m.m(4) - Rational(3) * m2_sq;
  const Series expo = exponential_factor(rate, order_t);
  std::vector<Series> slices;
  slices.reserve(static_cast<size_t>(order_omega) + 1);
  for (int i = 0; i <= order_omega; ++i) {
    slices.push_back(expo * Series::geometric_power(m2_sq, i + 3, order_t));
  }
  return BivariateSeries::from_omega_slices(std::move(slices));
}

Rational extract_square_moment(const Series& s, int n) {
  const Rational& coeff = s.at(n);
  return factorial(n).pow(2) * coeff;
}

Rational extract_gram_moment(const BivariateSeries& b, int n, int p) {
  if (n < 0 || p < 0) {
    throw std::out_of_range("extract_gram_moment: negative index");
  }
  // The grid has no cell above the diagonal; the moment there is zero.
  if (p > n) return Rational(0);
  return b.at(p, n - p) * factorial(n) * factorial(p) / factorial(n - p);
}

bool check_m4_shift(const Moments& m, int order) {
  require_order4(m, "check_m4_shift");
  std::vector<Rational> bumped;
  for (int r = 1; r <= m.order(); ++r) bumped.push_back(m.m(r));
  bumped[3] += Rational(1);
  const Series lhs = det4_series(Moments(std::move(bumped)), order);
  const Series rhs =
      Series::monomial(Rational(1), 1, order).exp() * det4_series(m, order);
  return lhs == rhs;
}

}  // namespace detmom
