#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "detmom/brute_force.hpp"
#include "detmom/closed_forms.hpp"
#include "detmom/matrix.hpp"
#include "test_util.hpp"

using detmom::DiscreteDistribution;
using detmom::Rational;
using detmom::RationalMatrix;

namespace {

RationalMatrix random_matrix(detmom::test::RationalGen& gen, int rows,
                             int cols) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = gen.next();
  }
  return m;
}

const DiscreteDistribution kRademacher{
    {{Rational(-1), Rational(1, 2)}, {Rational(1), Rational(1, 2)}}};
const DiscreteDistribution kZeroTwo{
    {{Rational(0), Rational(1, 2)}, {Rational(2), Rational(1, 2)}}};
const DiscreteDistribution kSkewed{
    {{Rational(0), Rational(2, 3)}, {Rational(3), Rational(1, 3)}}};

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(detmom::det_exact(RationalMatrix(0, 0)) == Rational(1));
  CHECK(detmom::det_exact(RationalMatrix::identity(3)) == Rational(1));

  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(2);
  m.at(1, 0) = Rational(3);
  m.at(1, 1) = Rational(4);
  CHECK(detmom::det_exact(m) == Rational(-2));

  RationalMatrix rank1(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      rank1.at(i, j) = Rational(i + 1) * Rational(j + 2);
    }
  }
  CHECK(detmom::det_exact(rank1) == Rational(0));

  CHECK_THROWS_AS(detmom::det_exact(RationalMatrix(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("fraction-free and cofactor determinants agree") {
  detmom::test::RationalGen gen(101);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      const RationalMatrix m = random_matrix(gen, n, n);
      CHECK(detmom::det_exact(m) == detmom::det_cofactor(m));
    }
  }
}

TEST_CASE("determinants are multiplicative") {
  detmom::test::RationalGen gen(106);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix a = random_matrix(gen, 4, 4);
    const RationalMatrix b = random_matrix(gen, 4, 4);
    CHECK(detmom::det_exact(a * b) ==
          detmom::det_exact(a) * detmom::det_exact(b));
  }
}

TEST_CASE("adjugate of a singular matrix annihilates it") {
  detmom::test::RationalGen gen(107);
  RationalMatrix m = random_matrix(gen, 4, 4);
  for (int j = 0; j < 4; ++j) m.at(2, j) = m.at(0, j) + m.at(1, j);
  REQUIRE(detmom::det_exact(m) == detmom::Rational(0));
  const RationalMatrix prod = m * detmom::adjugate_exact(m);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(prod.at(i, j) == detmom::Rational(0));
  }
}

TEST_CASE("adjugate identity") {
  CHECK(detmom::adjugate_exact(RationalMatrix::identity(3)).at(1, 1) ==
        Rational(1));
  RationalMatrix scalar(1, 1);
  scalar.at(0, 0) = Rational(7);
  CHECK(detmom::adjugate_exact(scalar).at(0, 0) == Rational(1));

  detmom::test::RationalGen gen(102);
  for (int trial = 0; trial < 8; ++trial) {
    const RationalMatrix m = random_matrix(gen, 4, 4);
    const RationalMatrix prod = m * detmom::adjugate_exact(m);
    const Rational det = detmom::det_exact(m);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(prod.at(i, j) == (i == j ? det : Rational(0)));
      }
    }
  }
}

TEST_CASE("rank-one determinant update identity") {
  detmom::test::RationalGen gen(103);
  SUBCASE("lambda = 0 and zero matrix") {
    const RationalMatrix c = random_matrix(gen, 3, 3);
    std::vector<Rational> u(3), v(3);
    for (auto& x : u) x = gen.next();
    for (auto& x : v) x = gen.next();
    CHECK(detmom::check_matrix_det_lemma(c, u, v, Rational(0)));
    CHECK(detmom::check_matrix_det_lemma(RationalMatrix(3, 3), u, v,
                                         gen.next()));
    std::vector<Rational> short_vec(2);
    CHECK_THROWS_AS(detmom::check_matrix_det_lemma(c, short_vec, v, gen.next()),
                    std::invalid_argument);
  }
  SUBCASE("random and singular matrices") {
    for (int trial = 0; trial < 40; ++trial) {
      RationalMatrix c = random_matrix(gen, 4, 4);
      if (trial % 4 == 0) {
        // Force singularity: duplicate a row.
        for (int j = 0; j < 4; ++j) c.at(3, j) = c.at(0, j);
      }
      std::vector<Rational> u(4), v(4);
      for (auto& x : u) x = gen.next();
      for (auto& x : v) x = gen.next();
      CHECK(detmom::check_matrix_det_lemma(c, u, v, gen.next()));
    }
  }
}

TEST_CASE("minor-expansion identity of the Gram product") {
  detmom::test::RationalGen gen(104);
  SUBCASE("p > n forces zero") {
    const RationalMatrix c = random_matrix(gen, 2, 3);
    const RationalMatrix d = random_matrix(gen, 2, 3);
    CHECK(detmom::check_cauchy_binet(c, d));
  }
  SUBCASE("square case is the product identity") {
    const RationalMatrix c = random_matrix(gen, 3, 3);
    const RationalMatrix d = random_matrix(gen, 3, 3);
    CHECK(detmom::check_cauchy_binet(c, d));
    CHECK(detmom::det_exact(c.transpose() * d) ==
          detmom::det_exact(c.transpose()) * detmom::det_exact(d));
  }
  SUBCASE("rectangular cases") {
    for (int trial = 0; trial < 20; ++trial) {
      const RationalMatrix c = random_matrix(gen, 4, 2);
      const RationalMatrix d = random_matrix(gen, 4, 2);
      CHECK(detmom::check_cauchy_binet(c, d));
    }
  }
}

TEST_CASE("all-ones rank-one shift identity") {
  detmom::test::RationalGen gen(105);
  RationalMatrix single(1, 1);
  single.at(0, 0) = Rational(5);
  CHECK(detmom::check_rank_one_shift(single, Rational(3)));
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix b = random_matrix(gen, 4, 4);
    CHECK(detmom::check_rank_one_shift(b, gen.next()));
    if (trial < 3) CHECK(detmom::check_rank_one_shift(b, Rational(0)));
  }
}

TEST_CASE("brute force expectations on tiny cases") {
  CHECK(detmom::brute_force_moment(kRademacher, 2, 2, 4) == Rational(8));
  CHECK(detmom::brute_force_moment(kZeroTwo, 1, 1, 4) == Rational(8));
  CHECK(detmom::brute_force_moment(kZeroTwo, 2, 1, 4) == Rational(24));
  CHECK(detmom::brute_force_moment(kRademacher, 3, 0, 4) == Rational(1));
  // Above the diagonal the Gram matrix is rank deficient.
  CHECK(detmom::brute_force_moment(kRademacher, 1, 2, 4) == Rational(0));
  CHECK_THROWS_AS(detmom::brute_force_moment(kRademacher, 2, 2, 3),
                  std::invalid_argument);
}

TEST_CASE("brute force refuses over-budget enumerations") {
  CHECK_THROWS_AS(detmom::brute_force_moment(kRademacher, 5, 5, 2, 1000),
                  std::length_error);
}

TEST_CASE("brute force is deterministic across worker counts") {
  for (int workers : {1, 2, 3}) {
    CHECK(detmom::brute_force_moment(kSkewed, 3, 2, 4, 1'000'000, workers) ==
          detmom::brute_force_moment(kSkewed, 3, 2, 4));
  }
}

TEST_CASE("rational-valued atoms take the generic path") {
  const DiscreteDistribution halves{
      {{Rational(1, 2), Rational(1, 2)}, {Rational(-1, 2), Rational(1, 2)}}};
  // Scaling rademacher entries by 1/2 scales |A|^4 for n = 2 by (1/2)^8.
  CHECK(detmom::brute_force_moment(halves, 2, 2, 4) ==
        Rational(8) / Rational(256));
}

TEST_CASE("oracle matches the closed forms on small sizes") {
  const std::vector<const DiscreteDistribution*> dists = {
      &kRademacher, &kZeroTwo, &kSkewed};
  for (const auto* dist : dists) {
    const detmom::Moments m = dist->moments(6);
    for (int n = 0; n <= 2; ++n) {
      CHECK(detmom::brute_force_moment(*dist, n, n, 2) ==
            detmom::det_moment2(n, m));
      CHECK(detmom::brute_force_moment(*dist, n, n, 4) ==
            detmom::det_moment4(n, m));
      for (int p = 0; p <= n; ++p) {
        CHECK(detmom::brute_force_moment(*dist, n, p, 2) ==
              detmom::gram_moment2(n, p, m));
        CHECK(detmom::brute_force_moment(*dist, n, p, 4) ==
              detmom::gram_moment4(n, p, m));
      }
    }
  }
}

TEST_CASE("sixth-moment formulas against the oracle") {
  const detmom::Moments rad = kRademacher.moments(6);
  CHECK(detmom::brute_force_moment(kRademacher, 2, 2, 6) == Rational(32));
  CHECK(detmom::det_moment6_sym(2, rad) == Rational(32));

  const DiscreteDistribution centered_skew{
      {{Rational(-1), Rational(2, 3)}, {Rational(2), Rational(1, 3)}}};
  const detmom::Moments cs = centered_skew.moments(6);
  CHECK(cs.m(1) == Rational(0));
  CHECK(cs.m(3) == Rational(2));
  for (int n = 0; n <= 2; ++n) {
    CHECK(detmom::det_moment6_centered(n, cs) ==
          detmom::brute_force_moment(centered_skew, n, n, 6));
  }

  // Three-atom centered support with nonzero odd moments.
  const DiscreteDistribution three_atoms{{{Rational(-1), Rational(1, 2)},
                                          {Rational(0), Rational(1, 4)},
                                          {Rational(2), Rational(1, 4)}}};
  const detmom::Moments ta = three_atoms.moments(6);
  REQUIRE(ta.m(1) == Rational(0));
  for (int n = 0; n <= 3; ++n) {
    CHECK(detmom::det_moment6_centered(n, ta) ==
          detmom::brute_force_moment(three_atoms, n, n, 6));
  }
}
