#include "detmom/recurrences.hpp"

#include <stdexcept>

#include "detmom/closed_forms.hpp"
#include "detmom/factorials.hpp"
#include "detmom/generating.hpp"

namespace detmom {

SummandRecurrence::SummandRecurrence(const Moments& m)
    : m1_(m.m(1)), central_(central_from_raw(m)) {}

Rational SummandRecurrence::memoized(
    std::vector<std::optional<Rational>>& table, int n,
    Rational (SummandRecurrence::*fn)(int)) {
  if (n < 0) return Rational(0);
  if (static_cast<size_t>(n) >= table.size()) {
    table.resize(static_cast<size_t>(n) + 1);
  }
  auto& slot = table[static_cast<size_t>(n)];
  if (!slot) slot = (this->*fn)(n);
  return *slot;
}

Rational SummandRecurrence::g4(int n) {
  return memoized(g4_, n, &SummandRecurrence::g4_uncached);
}

Rational SummandRecurrence::g4_uncached(int n) {
  const Moments centered({Rational(0), central_.mu2, Rational(0), central_.mu4});
  return det_moment4_sym(n, centered);
}

Rational SummandRecurrence::h0(int n) {
  return memoized(h0_, n, &SummandRecurrence::h0_uncached);
}

Rational SummandRecurrence::h0_uncached(int n) {
  if (n == 0) return Rational(0);
  const Rational& u2 = central_.mu2;
  return u2 * g4(n - 1) + Rational(n - 1).pow(2) * u2.pow(2) * h0(n - 1);
}

Rational SummandRecurrence::h9(int n) {
  return memoized(h9_, n, &SummandRecurrence::h9_uncached);
}

Rational SummandRecurrence::h9_uncached(int n) {
  if (n == 0) return Rational(0);
  const Rational& u2 = central_.mu2;
  const Rational f = Rational(n - 2).pow(2);
  return u2 * h0(n - 1) + f * u2.pow(3) * h0(n - 2) +
         f * u2.pow(2) * h9(n - 1);
}

Rational SummandRecurrence::h10(int n) {
  return memoized(h10_, n, &SummandRecurrence::h10_uncached);
}

Rational SummandRecurrence::h10_uncached(int n) {
  if (n == 0) return Rational(0);
  const Rational& u2 = central_.mu2;
  const Rational f = Rational(n - 2).pow(2);
  return f * u2.pow(3) * h0(n - 2) + f * u2.pow(2) * h10(n - 1);
}

Rational SummandRecurrence::det_moment4(int n) {
  if (n < 0) throw std::invalid_argument("SummandRecurrence: negative n");
  const Rational& u2 = central_.mu2;
  const Rational& u3 = central_.mu3;
  const Rational nn = Rational(n).pow(2);
  const Rational n1 = Rational(n - 1).pow(2);
  const Rational n2 = Rational(n - 2).pow(2);
  const Rational n3 = Rational(n - 3).pow(2);

  const Rational cubed = g4(n) + Rational(4) * m1_ * nn * u3 * g4(n - 1);
  const Rational squared =
      Rational(6) * m1_.pow(2) *
      (nn * h0(n) + nn * n1 * u3.pow(2) * g4(n - 2));
  const Rational linear =
      Rational(4) * m1_.pow(3) *
      (Rational(3) * nn * n1 * u3 * h0(n - 1) +
       nn * n1 * n2 * u3.pow(3) * g4(n - 3));
  const Rational pure_s =
      m1_.pow(4) *
      (nn * g4(n - 1) + Rational(6) * nn * n1 * u2 * h0(n - 1) +
       Rational(3) * nn * n1 * h9(n) + Rational(6) * nn * n1 * h10(n) +
       Rational(6) * nn * n1 * n2 * u3.pow(2) * h0(n - 2) +
       nn * n1 * n2 * n3 * u3.pow(4) * g4(n - 4));
  return cubed + squared + linear + pure_s;
}

Rational SummandRecurrence::mixed_diag(int n) {
  if (n < 0) throw std::invalid_argument("SummandRecurrence: negative n");
  const Rational nn = Rational(n).pow(2);
  const Rational n1 = Rational(n - 1).pow(2);
  return g4(n) + Rational(2) * m1_ * nn * central_.mu3 * g4(n - 1) +
         m1_.pow(2) *
             (nn * h0(n) + nn * n1 * central_.mu3.pow(2) * g4(n - 2));
}

Rational SummandRecurrence::ones_extended_band(int p) {
  if (p < 0) throw std::invalid_argument("SummandRecurrence: negative p");
  return Rational(p + 1) *
         (g4(p) + Rational(3) * Rational(p).pow(2) * central_.mu2 * h0(p));
}

GramRecurrence::GramRecurrence(const Moments& m)
    : moments_(m), summands_(m) {}

Rational GramRecurrence::centered_gram4(int n, int p) {
  const CentralMoments& c = summands_.central();
  const Moments centered({Rational(0), c.mu2, Rational(0), c.mu4});
  return gram_moment4_sym(n, p, centered);
}

Rational GramRecurrence::gram_moment4(int n, int p) {
  if (n < 0 || p < 0) {
    throw std::invalid_argument("GramRecurrence: negative size");
  }
  if (summands_.central().mu2.is_zero()) {
    throw std::domain_error(
        "GramRecurrence: mu2 = 0 entries are degenerate for the recurrence "
        "path");
  }
  if (p > n) return Rational(0);
  return eval(Fn::kGram4, n, p);
}

Rational GramRecurrence::aux_moment(Aux which, int n, int p) {
  if (n < 0 || p < 0) {
    throw std::invalid_argument("GramRecurrence: negative size");
  }
  switch (which) {
    case Aux::kSquareExtended:
      return eval(Fn::kAlpha, n, p);
    case Aux::kExtendedSquared:
      return eval(Fn::kBeta, n, p);
    case Aux::kSquareSigma:
      return eval(Fn::kGamma, n, p);
    case Aux::kSquareCentered:
      return eval(Fn::kDelta, n, p);
    case Aux::kExtendedSigma:
      return eval(Fn::kEpsilon, n, p);
    case Aux::kCenteredExtended:
      return eval(Fn::kEta, n, p);
    case Aux::kCenteredSigma:
      return eval(Fn::kRho, n, p);
    case Aux::kSigmaSquared:
      return eval(Fn::kKappa, n, p);
  }
  throw std::logic_error("GramRecurrence: unknown auxiliary");
}

Rational GramRecurrence::eval(Fn f, int n, int p) {
  if (n < 0 || p < 0) return Rational(0);
  auto& memo = memo_[static_cast<int>(f)];
  const auto key = std::make_pair(n, p);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  struct DepthGuard {
    int& depth;
    ~DepthGuard() { --depth; }
  } guard{depth_};
  if (++depth_ > 10000) {
    throw std::logic_error(
        "GramRecurrence: recursion depth guard tripped; the seed set does "
        "not terminate this evaluation");
  }

  Rational v;
  const Rational nr(n);
  switch (f) {
    case Fn::kGram4:
      if (p > n) {
        v = Rational(0);
      } else if (p == 0) {
        v = Rational(1);
      } else if (p == n) {
        v = detmom::det_moment4(n, moments_);  // diagonal seed
      } else {
        v = recurrence(f, n, p);
      }
      break;
    case Fn::kAlpha:
    case Fn::kEta:
      if (p >= n) {
        v = Rational(0);
      } else if (p == 0) {
        v = nr;
      } else {
        v = recurrence(f, n, p);
      }
      break;
    case Fn::kBeta:
      if (p >= n) {
        v = Rational(0);
      } else if (p == 0) {
        v = nr * nr;
      } else if (p == n - 1) {
        v = summands_.ones_extended_band(p);  // band seed
      } else {
        v = recurrence(f, n, p);
      }
      break;
    case Fn::kDelta:
      if (p >= n + 1) {
        v = Rational(0);
      } else if (p == 0) {
        v = Rational(1);
      } else if (p == n) {
        v = summands_.mixed_diag(n);  // band seed
      } else {
        v = recurrence(f, n, p);
      }
      break;
    case Fn::kEpsilon:
      v = (p >= n || p == 0) ? Rational(0) : recurrence(f, n, p);
      break;
    case Fn::kGamma:
    case Fn::kRho:
      v = (p >= n + 1 || p == 0) ? Rational(0) : recurrence(f, n, p);
      break;
    case Fn::kKappa:
      v = (p >= n + 2 || p == 0) ? Rational(0) : recurrence(f, n, p);
      break;
  }

  memo.emplace(key, v);
  return v;
}

Rational GramRecurrence::recurrence(Fn f, int n, int p) {
  const Rational& u2 = summands_.central().mu2;
  const Rational m1 = moments_.m(1);
  const Rational m1_sq = m1 * m1;
  const Rational n_fact = factorial(n);

  Rational sum;
  switch (f) {
    case Fn::kGram4:
      for (int q = 0; q <= p; ++q) {
        if (n - 2 * p + q < 0) continue;
        sum += n_fact * u2.pow(2 * (p - q)) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q) *
               (eval(Fn::kGram4, p, q) +
                Rational(2) * m1_sq / u2 * eval(Fn::kAlpha, p, q) +
                m1_sq * m1_sq / (u2 * u2) * eval(Fn::kBeta, p, q));
      }
      break;
    case Fn::kAlpha:
      for (int q = 0; q <= p; ++q) {
        if (n - 2 * p + q - 1 < 0) continue;
        sum += n_fact * u2.pow(2 * (p - q)) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q - 1) *
               (u2 * eval(Fn::kGamma, p, q) + eval(Fn::kDelta, p, q) +
                m1_sq * eval(Fn::kEpsilon, p, q) +
                m1_sq / u2 * eval(Fn::kEta, p, q));
      }
      break;
    case Fn::kEta:
      for (int q = 0; q <= p; ++q) {
        if (n - 2 * p + q - 1 < 0) continue;
        sum += n_fact * u2.pow(2 * (p - q)) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q - 1) *
               (u2 * eval(Fn::kRho, p, q) + centered_gram4(p, q));
      }
      break;
    case Fn::kGamma:
      for (int q = 0; q <= p - 1; ++q) {
        if (n - 2 * p + q + 1 < 0) continue;
        sum += n_fact * u2.pow(2 * p - 2 * q - 1) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q + 1) *
               (eval(Fn::kAlpha, p, q) + m1_sq / u2 * eval(Fn::kBeta, p, q));
      }
      break;
    case Fn::kRho:
      for (int q = 0; q <= p - 1; ++q) {
        if (n - 2 * p + q + 1 < 0) continue;
        sum += n_fact * u2.pow(2 * p - 2 * q - 1) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q + 1) * eval(Fn::kEta, p, q);
      }
      break;
    case Fn::kDelta:
      for (int q = 0; q <= p; ++q) {
        if (n - 2 * p + q < 0) continue;
        sum += n_fact * u2.pow(2 * (p - q)) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q) *
               (eval(Fn::kDelta, p, q) + m1_sq / u2 * eval(Fn::kEta, p, q));
      }
      break;
    case Fn::kEpsilon:
      for (int q = 0; q <= p - 1; ++q) {
        if (n - 2 * p + q < 0) continue;
        sum += n_fact * u2.pow(2 * p - 2 * q - 1) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q) *
               (u2 * eval(Fn::kEpsilon, p, q) + eval(Fn::kEta, p, q));
      }
      break;
    case Fn::kBeta:
      for (int q = 0; q <= p + 1; ++q) {
        if (n - 2 * p + q - 2 < 0) continue;
        sum += n_fact * u2.pow(2 * (p - q)) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q - 2) *
               (u2 * u2 * eval(Fn::kKappa, p, q) +
                Rational(2) * u2 * eval(Fn::kRho, p, q) +
                centered_gram4(p, q));
      }
      break;
    case Fn::kKappa:
      for (int q = 0; q <= p - 1; ++q) {
        if (n - 2 * p + q + 2 < 0) continue;
        sum += n_fact * u2.pow(2 * (p - q - 1)) / factorial(q) *
               reciprocal_factorial(n - 2 * p + q + 2) * eval(Fn::kBeta, p, q);
      }
      break;
  }
  return sum;
}

bool check_h_series(const Moments& m, int order) {
  SummandRecurrence state(m);
  const CentralMoments& c = state.central();
  const Rational u2_sq = c.mu2 * c.mu2;
  const Series g4 = centered_det4_series(c, order);

  std::vector<Rational> s0(static_cast<size_t>(order) + 1);
  std::vector<Rational> s9(static_cast<size_t>(order) + 1);
  std::vector<Rational> s10(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    const Rational norm = factorial(n).pow(2);
    const Rational nn = Rational(n).pow(2);
    const Rational n1 = Rational(n - 1).pow(2);
    s0[static_cast<size_t>(n)] = nn * state.h0(n) / norm;
    s9[static_cast<size_t>(n)] = nn * n1 * state.h9(n) / norm;
    s10[static_cast<size_t>(n)] = nn * n1 * state.h10(n) / norm;
  }

  const Series geo1 = Series::geometric_power(u2_sq, 1, order);
  const Series geo2 = Series::geometric_power(u2_sq, 2, order);
  const Series h0_closed = Series::monomial(c.mu2, 1, order) * g4 * geo1;
  const Series h9_closed =
      Series::monomial(u2_sq, 2, order) *
      (Series::one(order) + Series::monomial(u2_sq, 1, order)) * g4 * geo2;
  const Series h10_closed =
      Series::monomial(u2_sq * u2_sq, 3, order) * g4 * geo2;

  return Series::from_coefficients(std::move(s0)) == h0_closed &&
         Series::from_coefficients(std::move(s9)) == h9_closed &&
         Series::from_coefficients(std::move(s10)) == h10_closed;
}

bool check_band_series(const Moments& m, int order) {
  SummandRecurrence state(m);
  const CentralMoments& c = state.central();
  const Rational m1 = m.m(1);
  const Rational u2_sq = c.mu2 * c.mu2;
  const Series g4 = centered_det4_series(c, order);
  const Series geo1 = Series::geometric_power(u2_sq, 1, order);

  std::vector<Rational> diag(static_cast<size_t>(order) + 1);
  std::vector<Rational> band(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    diag[static_cast<size_t>(n)] = state.mixed_diag(n) / factorial(n).pow(2);
    band[static_cast<size_t>(n)] =
        state.ones_extended_band(n) / (factorial(n + 1) * factorial(n));
  }

  const Rational& u3 = c.mu3;
  const Series diag_numerator = Series::from_coefficients(
      [&] {
        std::vector<Rational> v(static_cast<size_t>(order) + 1);
        v[0] = Rational(1);
        if (order >= 1) v[1] = m1 * m1 * c.mu2 - u2_sq + Rational(2) * m1 * u3;
        if (order >= 2) {
          v[2] = m1 * m1 * u3 * u3 - Rational(2) * m1 * u2_sq * u3;
        }
        if (order >= 3) v[3] = -(m1 * m1 * u2_sq * u3 * u3);
        return v;
      }());
  const Series diag_closed = diag_numerator * geo1 * g4;

  const Series band_closed =
      (Series::one(order) + Series::monomial(Rational(2) * u2_sq, 1, order)) *
      geo1 * g4;

  return Series::from_coefficients(std::move(diag)) == diag_closed &&
         Series::from_coefficients(std::move(band)) == band_closed;
}

}  // namespace detmom
