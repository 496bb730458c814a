#pragma once

#include <vector>

#include "detmom/rational.hpp"

namespace detmom {

inline constexpr int kDefaultSeriesOrder = 32;
inline constexpr int kDefaultBivariateOrder = 16;

/// Truncated formal power series in one variable with exact rational
/// coefficients. Values are immutable; every operation returns a new series
/// truncated to the smaller operand order. Reading past the truncation order
/// is an error, never an implicit zero.
class Series {
 public:
  static Series zero(int order);
  static Series one(int order);
  static Series constant(const Rational& c, int order);
  /// c * t^power, zero-padded to `order`.
  static Series monomial(const Rational& c, int power, int order);
  /// Series with the given coefficients; order = coeffs.size() - 1.
  static Series from_coefficients(std::vector<Rational> coeffs);
  /// Expansion of 1/(1 - c t)^k, whose t^n coefficient is C(n+k-1, k-1) c^n.
  static Series geometric_power(const Rational& c, int k, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of t^n; throws std::out_of_range past the truncation order.
  const Rational& at(int n) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  /// Cauchy product, truncated to the smaller order.
  Series operator*(const Series& o) const;
  Series scaled(const Rational& c) const;
  /// Lower the truncation order (raising it would invent coefficients).
  Series truncated(int new_order) const;

  /// exp of a series with zero constant term, to the same order.
  Series exp() const;

  bool operator==(const Series& o) const { return c_ == o.c_; }

 private:
  explicit Series(std::vector<Rational> c) : c_(std::move(c)) {}

  std::vector<Rational> c_;
};

/// Truncated series in two variables (t, omega) on a rectangular grid.
/// Built from omega-slices, each a univariate series in t.
class BivariateSeries {
 public:
  /// slices[j] is the coefficient of omega^j; every slice must have the same
  /// order, which becomes the t-order of the grid.
  static BivariateSeries from_omega_slices(std::vector<Series> slices);

  int order_t() const { return order_t_; }
  int order_omega() const { return static_cast<int>(slices_.size()) - 1; }

  /// Coefficient of t^i omega^j; throws std::out_of_range outside the grid.
  const Rational& at(int i, int j) const;

  const Series& omega_slice(int j) const;

  bool operator==(const BivariateSeries& o) const {
    return slices_ == o.slices_;
  }

 private:
  BivariateSeries(std::vector<Series> slices, int order_t)
      : slices_(std::move(slices)), order_t_(order_t) {}

  std::vector<Series> slices_;
  int order_t_;
};

}  // namespace detmom
