#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detmom/closed_forms.hpp"
#include "detmom/generating.hpp"
#include "detmom/recurrences.hpp"
#include "detmom/reference_tables.hpp"
#include "test_util.hpp"

using detmom::GramRecurrence;
using detmom::Moments;
using detmom::Rational;
using detmom::SummandRecurrence;

TEST_CASE("centered fourth moments g4") {
  SummandRecurrence exp1(detmom::preset("exp1").moments);
  CHECK(exp1.g4(0) == Rational(1));
  CHECK(exp1.g4(1) == Rational(9));

  // Gaussian centrals scale as sigma^(4n).
  SummandRecurrence gauss(
      detmom::preset_normal(Rational(0), Rational(2)).moments);
  CHECK(gauss.g4(2) == Rational(24) * Rational(4).pow(4));
}

TEST_CASE("h-sequence base cases and first values") {
  const Moments exp1 = detmom::preset("exp1").moments;
  SummandRecurrence state(exp1);
  const Rational mu2 = state.central().mu2;
  const Rational mu4 = state.central().mu4;

  CHECK(state.h0(0) == Rational(0));
  CHECK(state.h0(1) == mu2);
  CHECK(state.h0(2) == mu2 * mu4 + mu2.pow(3));
  CHECK(state.h9(0) == Rational(0));
  CHECK(state.h10(0) == Rational(0));
  CHECK(state.h9(2) == mu2 * mu2);
  CHECK(state.h10(2) == Rational(0));
}

TEST_CASE("summand assembly reproduces the exponential table") {
  SummandRecurrence state(detmom::preset("exp1").moments);
  for (int n = 1; n <= 10; ++n) {
    CHECK(state.det_moment4(n) ==
          Rational::parse(detmom::kExp1FourthMoments[n - 1]));
  }
}

TEST_CASE("all correction summands vanish for centered entries") {
  for (const Moments& m : detmom::test::symmetric_moment_vectors()) {
    SummandRecurrence state(m);
    for (int n = 0; n <= 8; ++n) {
      CHECK(state.det_moment4(n) == state.g4(n));
    }
  }
}

TEST_CASE("summand path for 0/2 entries matches the shift identity") {
  SummandRecurrence state(detmom::preset("zero-two").moments);
  CHECK(state.det_moment4(2) ==
        detmom::det_moment4_sym(3, detmom::preset("rademacher").moments));
}

TEST_CASE("triple-path agreement") {
  for (const Moments& m : detmom::test::identity_moment_vectors()) {
    SummandRecurrence state(m);
    const detmom::Series series = detmom::det4_series(m, 10);
    for (int n = 0; n <= 10; ++n) {
      const Rational closed = detmom::det_moment4(n, m);
      CHECK(state.det_moment4(n) == closed);
      CHECK(detmom::extract_square_moment(series, n) == closed);
    }
  }
}

TEST_CASE("mixed diagonal seed") {
  for (const Moments& m : detmom::test::identity_moment_vectors()) {
    SummandRecurrence state(m);
    const auto& c = state.central();
    CHECK(state.mixed_diag(0) == Rational(1));
    CHECK(state.mixed_diag(1) ==
          c.mu4 + Rational(2) * m.m(1) * c.mu3 + m.m(1) * m.m(1) * c.mu2);
  }
  for (const Moments& m : detmom::test::symmetric_moment_vectors()) {
    SummandRecurrence state(m);
    for (int n = 0; n <= 6; ++n) CHECK(state.mixed_diag(n) == state.g4(n));
  }
}

TEST_CASE("ones-extended band seed") {
  for (const Moments& m : detmom::test::identity_moment_vectors()) {
    SummandRecurrence state(m);
    const auto& c = state.central();
    CHECK(state.ones_extended_band(0) == Rational(1));
    CHECK(state.ones_extended_band(1) ==
          Rational(2) * (c.mu4 + Rational(3) * c.mu2 * c.mu2));
  }
}

TEST_CASE("h-sequence and band generating functions match their closed forms") {
  for (const Moments& m : detmom::test::identity_moment_vectors()) {
    CHECK(detmom::check_h_series(m, 12));
    CHECK(detmom::check_band_series(m, 12));
  }
}

TEST_CASE("gram recurrence hand-unrolled values") {
  for (const Moments& m : detmom::test::identity_moment_vectors()) {
    GramRecurrence rec(m);
    const detmom::CentralMoments c = detmom::central_from_raw(m);
    const Rational m1 = m.m(1);

    CHECK(rec.gram_moment4(2, 1) ==
          Rational(2) * m.m(2) * m.m(2) + Rational(2) * m.m(4));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kSquareSigma, 1, 1) == m.m(2));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kSquareExtended, 2, 1) ==
          Rational(2) * (c.mu2 * m.m(2) + c.mu4 + Rational(2) * m1 * c.mu3 +
                         m1 * m1 * c.mu2));
  }
}

TEST_CASE("gram recurrence base values") {
  GramRecurrence rec(detmom::preset("exp1").moments);
  for (int n = 0; n <= 6; ++n) {
    CHECK(rec.gram_moment4(n, 0) == Rational(1));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kSquareCentered, n, 0) ==
          Rational(1));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kSquareExtended, n, 0) ==
          Rational(n));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kCenteredExtended, n, 0) ==
          Rational(n));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kExtendedSquared, n, 0) ==
          Rational(n) * Rational(n));
  }
}

TEST_CASE("vanishing ranges of the auxiliary sequences") {
  GramRecurrence rec(detmom::preset("exp1").moments);
  for (int n = 1; n <= 5; ++n) {
    CHECK(rec.aux_moment(GramRecurrence::Aux::kSquareExtended, n, n) ==
          Rational(0));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kExtendedSquared, n, n) ==
          Rational(0));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kExtendedSigma, n, n) ==
          Rational(0));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kCenteredExtended, n, n) ==
          Rational(0));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kSquareSigma, n, n + 1) ==
          Rational(0));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kCenteredSigma, n, n + 1) ==
          Rational(0));
    CHECK(rec.aux_moment(GramRecurrence::Aux::kSigmaSquared, n, n + 2) ==
          Rational(0));
  }
}

TEST_CASE("gram recurrence reproduces the exponential Gram table") {
  GramRecurrence rec(detmom::preset("exp1").moments);
  CHECK(rec.gram_moment4(3, 2) == Rational(3744));
  CHECK(rec.gram_moment4(4, 3) == Rational(297216));
  for (int band = 0; band < 4; ++band) {
    for (int p = 1; p <= 4; ++p) {
      CHECK(rec.gram_moment4(p + band, p) ==
            Rational::parse(detmom::kExp1GramMoments[band][p - 1]));
    }
  }
}

TEST_CASE("gram recurrence agrees with the closed form") {
  for (const Moments& m : detmom::test::identity_moment_vectors()) {
    GramRecurrence rec(m);
    for (int n = 0; n <= 7; ++n) {
      for (int p = 0; p <= n; ++p) {
        CHECK(rec.gram_moment4(n, p) == detmom::gram_moment4(n, p, m));
      }
    }
  }
}

TEST_CASE("recurrence paths hold at larger sizes") {
  const Moments exp1 = detmom::preset("exp1").moments;
  SummandRecurrence summands(exp1);
  CHECK(summands.det_moment4(20) == detmom::det_moment4(20, exp1));

  const Moments formal({Rational(1, 3), Rational(2), Rational(-1, 5),
                        Rational(7), Rational(11, 2), Rational(-4)});
  SummandRecurrence formal_summands(formal);
  CHECK(formal_summands.det_moment4(20) == detmom::det_moment4(20, formal));

  GramRecurrence gram(exp1);
  CHECK(gram.gram_moment4(10, 4) == detmom::gram_moment4(10, 4, exp1));
  CHECK(gram.gram_moment4(12, 5) == detmom::gram_moment4(12, 5, exp1));
}

TEST_CASE("cross-path agreement on random moment vectors") {
  detmom::test::RationalGen gen(2027);
  int tested = 0;
  while (tested < 10) {
    std::vector<Rational> raw(4);
    for (auto& x : raw) x = gen.next(5, 4);
    const Moments m(std::move(raw));
    if (detmom::central_from_raw(m).mu2.is_zero()) continue;
    ++tested;

    SummandRecurrence summands(m);
    GramRecurrence gram(m);
    const detmom::Series series = detmom::det4_series(m, 6);
    const detmom::BivariateSeries grid = detmom::gram4_series(m, 6, 6);
    for (int n = 0; n <= 6; ++n) {
      const Rational square = detmom::det_moment4(n, m);
      CHECK(summands.det_moment4(n) == square);
      CHECK(detmom::extract_square_moment(series, n) == square);
      for (int p = 0; p <= n; ++p) {
        const Rational value = detmom::gram_moment4(n, p, m);
        CHECK(gram.gram_moment4(n, p) == value);
        CHECK(detmom::extract_gram_moment(grid, n, p) == value);
      }
    }
  }
}

TEST_CASE("degenerate entries are rejected by the recurrence path") {
  const Moments constant =
      detmom::discrete_moments({{Rational(2), Rational(1)}}, 4);
  GramRecurrence rec(constant);
  CHECK_THROWS_AS(rec.gram_moment4(2, 1), std::domain_error);
}
