// End-to-end acceptance suite: one pass/fail line per criterion, nonzero
// exit when anything fails. Every comparison is exact unless marked
// statistical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "detmom/brute_force.hpp"
#include "detmom/closed_forms.hpp"
#include "detmom/factorials.hpp"
#include "detmom/generating.hpp"
#include "detmom/matrix.hpp"
#include "detmom/monte_carlo.hpp"
#include "detmom/permutations.hpp"
#include "detmom/recurrences.hpp"
#include "detmom/reference_tables.hpp"
#include "test_util.hpp"

using namespace detmom;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds) {
  std::printf("%s criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL",
              criterion, what.c_str(), seconds);
  if (!ok) ++failures;
}

void run(int criterion, const std::string& what,
         const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("     criterion %2d threw: %s\n", criterion, e.what());
    ok = false;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(criterion, what, ok, seconds);
}

bool criterion1_exponential_table() {
  const auto start = std::chrono::steady_clock::now();
  const Moments exp1 = preset("exp1").moments;
  SummandRecurrence recurrence(exp1);
  const Series series = det4_series(exp1, 10);
  bool ok = true;
  for (int n = 1; n <= 10; ++n) {
    const Rational expected = Rational::parse(kExp1FourthMoments[n - 1]);
    ok = ok && det_moment4(n, exp1) == expected;
    ok = ok && extract_square_moment(series, n) == expected;
    ok = ok && recurrence.det_moment4(n) == expected;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return ok && seconds < 1.0;
}

bool criterion2_gram_table() {
  const Moments exp1 = preset("exp1").moments;
  const BivariateSeries grid = gram4_series(exp1, 8, 8);
  GramRecurrence recurrence(exp1);
  bool ok = true;
  for (int band = 0; band < 8; ++band) {
    for (int p = 1; p <= 6; ++p) {
      const int n = p + band;
      const Rational expected = Rational::parse(kExp1GramMoments[band][p - 1]);
      ok = ok && gram_moment4(n, p, exp1) == expected;
      ok = ok && extract_gram_moment(grid, n, p) == expected;
      if (p < n) ok = ok && recurrence.gram_moment4(n, p) == expected;
    }
  }
  return ok;
}

bool criterion3_reduction_identities() {
  bool ok = true;
  for (const Moments& m : test::identity_moment_vectors()) {
    for (int n = 0; n <= 12; ++n) {
      ok = ok && gram_moment4(n, n, m) == det_moment4(n, m);
    }
  }
  for (const Moments& m : test::symmetric_moment_vectors()) {
    for (int n = 0; n <= 12; ++n) {
      ok = ok && det_moment4(n, m) == det_moment4_sym(n, m);
    }
    ok = ok && gram4_series(m, 12, 12) == gram4_sym_series(m, 12, 12);
  }
  const Moments zero_two = preset("zero-two").moments;
  const Moments rademacher = preset("rademacher").moments;
  for (int n = 0; n <= 15; ++n) {
    ok = ok && det_moment4(n, zero_two) == det_moment4_sym(n + 1, rademacher);
  }
  return ok;
}

bool criterion4_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const DiscreteDistribution rademacher{
      {{Rational(-1), Rational(1, 2)}, {Rational(1), Rational(1, 2)}}};
  const DiscreteDistribution zero_two{
      {{Rational(0), Rational(1, 2)}, {Rational(2), Rational(1, 2)}}};
  const DiscreteDistribution skewed{
      {{Rational(0), Rational(2, 3)}, {Rational(3), Rational(1, 3)}}};
  const DiscreteDistribution centered_skew{
      {{Rational(-1), Rational(2, 3)}, {Rational(2), Rational(1, 3)}}};

  bool ok = true;
  for (const DiscreteDistribution* dist : {&rademacher, &zero_two, &skewed}) {
    const Moments m = dist->moments(6);
    for (int n = 0; n <= 3; ++n) {
      ok = ok && brute_force_moment(*dist, n, n, 2) == det_moment2(n, m);
      ok = ok && brute_force_moment(*dist, n, n, 4) == det_moment4(n, m);
    }
    for (int n = 0; n <= 4; ++n) {
      for (int p = 0; p <= std::min(n, 3); ++p) {
        ok = ok &&
             brute_force_moment(*dist, n, p, 2, kDefaultEnumerationBudget, 2) ==
                 gram_moment2(n, p, m);
        ok = ok &&
             brute_force_moment(*dist, n, p, 4, kDefaultEnumerationBudget, 2) ==
                 gram_moment4(n, p, m);
      }
    }
  }
  // Sixth moments where the formulas apply: symmetric entries and centered
  // (possibly skewed) entries.
  const Moments rm = rademacher.moments(6);
  const Moments cm = centered_skew.moments(6);
  for (int n = 0; n <= 3; ++n) {
    const Rational rad_exact = brute_force_moment(rademacher, n, n, 6);
    ok = ok && det_moment6_sym(n, rm) == rad_exact;
    ok = ok && det_moment6_centered(n, rm) == rad_exact;
    ok = ok && det_moment6_centered(n, cm) ==
                   brute_force_moment(centered_skew, n, n, 6);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return ok && seconds < 10.0;
}

Rational standard_normal_even_moment(int m, int n) {
  // (n!)^m prod_{r<m} C(n+2r, 2r): the even determinant moments of standard
  // normal entries.
  Rational value = factorial(n).pow(m);
  for (int r = 0; r < m; ++r) value *= binomial(n + 2 * r, 2 * r);
  return value;
}

bool criterion5_gaussian_coherence() {
  const std::vector<std::pair<Rational, Rational>> params = {
      {Rational(0), Rational(1)},
      {Rational(1, 2), Rational(9, 4)},
      {Rational(-3), Rational(1, 3)},
  };
  bool ok = true;
  for (const auto& [mu, sigma2] : params) {
    std::vector<Rational> raw(6);
    for (int r = 1; r <= 6; ++r) {
      Rational s;
      for (int k = 0; k <= r; k += 2) {
        s += binomial(r, k) * mu.pow(r - k) * sigma2.pow(k / 2) *
             double_factorial(k - 1);
      }
      raw[static_cast<size_t>(r - 1)] = s;
    }
    const Moments m(std::move(raw));
    for (int n = 0; n <= 20; ++n) {
      const Rational poly = gaussian_det_moment4(n, mu, sigma2);
      ok = ok && det_moment4(n, m) == poly;
      ok = ok && gaussian_gram_moment(2, n, n, mu, sigma2) == poly;
      for (int p = 0; p <= n; ++p) {
        const Rational gram_poly = gaussian_gram_moment4(n, p, mu, sigma2);
        ok = ok && gram_moment4(n, p, m) == gram_poly;
        ok = ok && gaussian_gram_moment(2, n, p, mu, sigma2) == gram_poly;
      }
    }
  }
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 12; ++n) {
      ok = ok && gaussian_gram_moment(m, n, n, Rational(0), Rational(1)) ==
                     standard_normal_even_moment(m, n);
    }
  }
  return ok;
}

bool criterion6_lemma_suite() {
  test::RationalGen gen(1009);
  bool ok = true;
  int det_lemma_cases = 0;
  int cauchy_binet_cases = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(gen.next_index(5));
    RationalMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) c.at(i, j) = gen.next();
    }
    if (trial % 5 == 0 && n >= 2) {
      for (int j = 0; j < n; ++j) c.at(n - 1, j) = c.at(0, j);  // singular
    }
    std::vector<Rational> u(static_cast<size_t>(n)), v(static_cast<size_t>(n));
    for (auto& x : u) x = gen.next();
    for (auto& x : v) x = gen.next();
    ok = ok && check_matrix_det_lemma(c, u, v, gen.next());
    ++det_lemma_cases;

    const int rows = 1 + static_cast<int>(gen.next_index(5));
    const int cols = 1 + static_cast<int>(gen.next_index(5));
    RationalMatrix a(rows, cols), b(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        a.at(i, j) = gen.next();
        b.at(i, j) = gen.next();
      }
    }
    ok = ok && check_cauchy_binet(a, b);
    ++cauchy_binet_cases;
  }
  for (int trial = 0; trial < 100; ++trial) {
    RationalMatrix b(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) b.at(i, j) = gen.next();
    }
    ok = ok && check_rank_one_shift(b, gen.next());
  }
  return ok && det_lemma_cases >= 100 && cauchy_binet_cases >= 100;
}

bool criterion7_derangement_egf() {
  bool ok = true;
  for (int u = 1; u <= 3; ++u) ok = ok && egf_check(9, u).ok;
  for (const Moments& m : test::symmetric_moment_vectors()) {
    for (int n = 0; n <= 8; ++n) {
      ok = ok &&
           det_moment4_sym_by_derangements(n, m) == det_moment4_sym(n, m);
    }
  }
  return ok;
}

bool criterion8_m4_shift() {
  bool ok = true;
  for (const Moments& m : test::identity_moment_vectors()) {
    ok = ok && check_m4_shift(m, 16);
  }
  return ok;
}

bool criterion9_asymptotic_decay() {
  const auto [e6_lo, e6_hi] = e6_interval(200);
  const Moments exp1 = preset("exp1").moments;
  Rational prev_lo(-1);
  bool first = true;
  bool ok = true;
  for (int n : {10, 15, 20, 25, 30}) {
    const Rational exact = det_moment4(n, exp1);
    const Rational factor = exp1_asymptotic_factor(n);
    const Rational approx_lo = factor * e6_lo;
    const Rational approx_hi = factor * e6_hi;
    // Interval of |exact - approx| / exact.
    Rational dev_lo, dev_hi;
    if (approx_lo > exact) {
      dev_lo = (approx_lo - exact) / exact;
      dev_hi = (approx_hi - exact) / exact;
    } else if (approx_hi < exact) {
      dev_lo = (exact - approx_hi) / exact;
      dev_hi = (exact - approx_lo) / exact;
    } else {
      dev_lo = Rational(0);
      dev_hi = (approx_hi - exact > exact - approx_lo ? approx_hi - exact
                                                      : exact - approx_lo) /
               exact;
    }
    if (!first) ok = ok && dev_hi < prev_lo;  // strictly decreasing
    prev_lo = dev_lo;
    first = false;
  }
  return ok;
}

bool criterion10_simplex_moments() {
  bool ok = simplex_volume_moment(1, 2) == Rational(1, 15);
  for (int d = 1; d <= 6; ++d) {
    const Rational scale = (factorial(d) / factorial(d + 4)).pow(d + 1);
    ok = ok && simplex_volume_moment(d, 2) ==
                   scale * Rational::parse(kExp1FourthMoments[d]);
  }
  return ok;
}

bool criterion11_monte_carlo() {
  // Statistical criterion: one retry with a shifted seed is allowed and
  // reported when used.
  const auto exp1 = preset("exp1");
  const auto attempt = [&](std::uint64_t seed) {
    bool ok = true;
    const McEstimate second =
        estimate_moment(exp1.sampler, 3, 3, 2, 1'000'000, seed, 2);
    ok = ok && std::fabs(second.mean - 24.0) < 5.0 * second.standard_error;
    const McEstimate fourth =
        estimate_moment(exp1.sampler, 2, 2, 4, 1'000'000, seed + 1, 2);
    ok = ok && std::fabs(fourth.mean - 960.0) < 5.0 * fourth.standard_error;
    for (int workers : {1, 8}) {
      const McEstimate again =
          estimate_moment(exp1.sampler, 2, 2, 4, 1'000'000, seed + 1, workers);
      ok = ok && again.mean == fourth.mean &&
           again.standard_error == fourth.standard_error;
    }
    return ok;
  };
  if (attempt(20240601)) return true;
  std::printf("     criterion 11: first attempt outside 5 SE, retrying once\n");
  return attempt(20240601 + 977);
}

}  // namespace

int main() {
  run(1, "exponential fourth-moment table by three routes, under 1 s",
      criterion1_exponential_table);
  run(2, "exponential Gram table by closed form, series and recurrence",
      criterion2_gram_table);
  run(3, "diagonal, symmetric-reduction and 0/2 shift identities",
      criterion3_reduction_identities);
  run(4, "exact brute-force oracle equivalence, under 10 s",
      criterion4_oracle_equivalence);
  run(5, "gaussian coherence across quartic and Wishart routes",
      criterion5_gaussian_coherence);
  run(6, "determinant update and Gram expansion lemmas on random matrices",
      criterion6_lemma_suite);
  run(7, "derangement generating function and column-type formula",
      criterion7_derangement_egf);
  run(8, "fourth-raw-moment shift acts as exp(t) on the series",
      criterion8_m4_shift);
  run(9, "asymptotic relative deviation strictly decreases (200-digit e^6)",
      criterion9_asymptotic_decay);
  run(10, "simplex volume moments through the exponential table",
      criterion10_simplex_moments);
  run(11, "Monte-Carlo estimates within 5 SE, worker-count invariant "
          "(statistical)",
      criterion11_monte_carlo);

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
