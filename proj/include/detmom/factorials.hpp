#pragma once

#include "detmom/rational.hpp"

namespace detmom {

/// n! for n >= 0.
Rational factorial(long n);

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
Rational double_factorial(long n);

/// Standard binomial coefficient; requires a >= 0, returns 0 when b < 0 or
/// b > a.
Rational binomial(long a, long b);

/// Binomial coefficient extended to the negative lower indices -1 and -2:
/// C(-2,-2) = C(-1,-1) = 1, C(-1,-2) = -1 and C(j,-2) = C(j,-1) = 0 for
/// j >= 0. Nonnegative lower indices fall back to the standard coefficient.
/// Any other combination throws.
Rational extended_binomial(long a, long b);

/// 1/k! treated as 0 for negative k; the convention that makes the
/// selection-count and Gram recurrence sums well defined.
Rational reciprocal_factorial(long k);

}  // namespace detmom
