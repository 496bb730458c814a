#include "detmom/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "detmom/factorials.hpp"

namespace detmom {

namespace {

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
}

}  // namespace

Series Series::zero(int order) {
  check_order(order);
  return Series(std::vector<Rational>(order + 1));
}

Series Series::one(int order) { return constant(Rational(1), order); }

Series Series::constant(const Rational& c, int order) {
  check_order(order);
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return Series(std::move(v));
}

Series Series::monomial(const Rational& c, int power, int order) {
  check_order(order);
  if (power < 0) throw std::invalid_argument("Series: negative power");
  std::vector<Rational> v(order + 1);
  if (power <= order) v[power] = c;
  return Series(std::move(v));
}

Series Series::from_coefficients(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("Series: empty coefficients");
  return Series(std::move(coeffs));
}

Series Series::geometric_power(const Rational& c, int k, int order) {
  check_order(order);
  if (k <= 0) throw std::invalid_argument("Series: power must be positive");
  std::vector<Rational> v(order + 1);
  Rational cn(1);
  for (int n = 0; n <= order; ++n) {
    v[n] = binomial(n + k - 1, k - 1) * cn;
    cn *= c;
  }
  return Series(std::move(v));
}

const Rational& Series::at(int n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("Series: coefficient index past truncation order");
  }
  return c_[static_cast<size_t>(n)];
}

Series Series::operator+(const Series& o) const {
  const int n = std::min(order(), o.order());
  std::vector<Rational> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = c_[i] + o.c_[i];
  return Series(std::move(v));
}

Series Series::operator-(const Series& o) const {
  const int n = std::min(order(), o.order());
  std::vector<Rational> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = c_[i] - o.c_[i];
  return Series(std::move(v));
}

Series Series::operator*(const Series& o) const {
  const int n = std::min(order(), o.order());
  std::vector<Rational> v(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      v[i + j] += c_[i] * o.c_[j];
    }
  }
  return Series(std::move(v));
}

Series Series::scaled(const Rational& c) const {
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * c;
  return Series(std::move(v));
}

Series Series::truncated(int new_order) const {
  check_order(new_order);
  if (new_order > order()) {
    throw std::invalid_argument("Series: cannot extend truncation order");
  }
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

Series Series::exp() const {
  if (!c_[0].is_zero()) {
    throw std::invalid_argument("Series::exp: nonzero constant term");
  }
  const int n = order();
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  // n b_n = sum_{k=1..n} k a_k b_{n-k}, from b' = a' b.
  for (int m = 1; m <= n; ++m) {
    Rational s;
    for (int k = 1; k <= m; ++k) s += Rational(k) * c_[k] * b[m - k];
    b[m] = s / Rational(m);
  }
  return Series(std::move(b));
}

BivariateSeries BivariateSeries::from_omega_slices(std::vector<Series> slices) {
  if (slices.empty()) {
    throw std::invalid_argument("BivariateSeries: no omega slices");
  }
  const int nt = slices.front().order();
  for (const Series& s : slices) {
    if (s.order() != nt) {
      throw std::invalid_argument("BivariateSeries: ragged slice orders");
    }
  }
  return BivariateSeries(std::move(slices), nt);
}

const Rational& BivariateSeries::at(int i, int j) const {
  if (j < 0 || j > order_omega()) {
    throw std::out_of_range("BivariateSeries: omega index out of range");
  }
  return slices_[static_cast<size_t>(j)].at(i);
}

const Series& BivariateSeries::omega_slice(int j) const {
  if (j < 0 || j > order_omega()) {
    throw std::out_of_range("BivariateSeries: omega index out of range");
  }
  return slices_[static_cast<size_t>(j)];
}

}  // namespace detmom
