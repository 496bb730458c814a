#include "detmom/factorials.hpp"

#include <stdexcept>

namespace detmom {

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational double_factorial(long n) {
  if (n < -1) {
    throw std::invalid_argument("double_factorial: argument below -1");
  }
  if (n <= 0) return Rational(1);
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational binomial(long a, long b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index");
  if (b < 0 || b > a) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return Rational(r);
}

Rational extended_binomial(long a, long b) {
  if (b >= 0) {
    if (a < 0) {
      throw std::invalid_argument(
          "extended_binomial: negative upper index with nonnegative lower "
          "index is undefined here");
    }
    return binomial(a, b);
  }
  if (b == -1 || b == -2) {
    if (a >= 0) return Rational(0);
    if (a == -1 && b == -1) return Rational(1);
    if (a == -2 && b == -2) return Rational(1);
    if (a == -1 && b == -2) return Rational(-1);
  }
  throw std::invalid_argument("extended_binomial: undefined extended binomial");
}

Rational reciprocal_factorial(long k) {
  if (k < 0) return Rational(0);
  return Rational(1) / factorial(k);
}

}  // namespace detmom
