#include "detmom/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace detmom {

Rational::Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Rational::parse: malformed rational '" +
                                std::string(text) + "'");
  };
  if (text.empty()) fail();
  const auto slash = text.find('/');
  const std::string num_str(text.substr(0, slash));
  std::string den_str = "1";
  if (slash != std::string_view::npos) {
    if (slash + 1 >= text.size()) fail();
    den_str = std::string(text.substr(slash + 1));
  }
  mpz_class num, den;
  if (num.set_str(num_str, 10) != 0) fail();
  if (den.set_str(den_str, 10) != 0) fail();
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.v_ = -r.v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  return sgn(v_) < 0 ? -*this : *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 raised to negative power");
    return Rational(0);
  }
  const auto k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  return e > 0 ? Rational(num, den) : Rational(den, num);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace detmom
