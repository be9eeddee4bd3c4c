#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hankel/hankel.hpp"
#include "hankel/matrix.hpp"
#include "oracles.hpp"

using hankel::Integer;
using hankel::IntegerMatrix;
using hankel::make_rational;
using hankel::MomentSequence;
using hankel::Rational;
using hankel::RationalMatrix;

namespace {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::vector<MomentSequence> builtins() {
  return {MomentSequence::gamma(), MomentSequence::gompertz(), MomentSequence::zeta(2),
          MomentSequence::zeta(3), MomentSequence::factorial()};
}

}  // namespace

TEST_CASE("P matrix") {
  const auto delta = MomentSequence::gompertz();
  CHECK(hankel::build_p_matrix(delta, 0) == RationalMatrix{{0, 1}, {1, 2}});
  CHECK(hankel::build_p_matrix(delta, 1) == RationalMatrix{{0, 1, 2}, {1, 2, 5}, {2, 5, 16}});
  CHECK(hankel::build_p_matrix(MomentSequence::factorial(), 0) == RationalMatrix{{0, 1}, {1, 1}});
}

TEST_CASE("Q matrix") {
  const auto delta = MomentSequence::gompertz();
  CHECK(hankel::build_q_matrix(delta, 0) == RationalMatrix{{2}});
  CHECK(hankel::build_q_matrix(delta, 1) == RationalMatrix{{2, 5}, {5, 16}});
  CHECK(hankel::build_q_matrix(MomentSequence::zeta(2), 0) ==
        RationalMatrix{{make_rational(3, 4)}});
}

TEST_CASE("built matrices are Hankel") {
  for (const auto& seq : builtins()) {
    for (std::size_t n : {0u, 3u, 7u}) {
      for (const auto& m : {hankel::build_p_matrix(seq, n), hankel::build_q_matrix(seq, n)}) {
        CHECK(m.entries().size() == m.order() * m.order());
        for (std::size_t i = 0; i < m.order(); ++i)
          for (std::size_t j = 0; j < m.order(); ++j)
            for (std::size_t i2 = 0; i2 < m.order(); ++i2) {
              if (i + j < i2 || i + j - i2 >= m.order()) continue;
              REQUIRE(m(i, j) == m(i2, i + j - i2));
            }
      }
    }
  }
}

TEST_CASE("moment access failure propagates from builders") {
  const auto short_seq = MomentSequence::custom("short", {Rational(1), Rational(2), Rational(5)});
  CHECK_NOTHROW(hankel::build_q_matrix(short_seq, 0));
  CHECK_THROWS_AS(hankel::build_p_matrix(short_seq, 1), hankel::IndexOutOfRange);
}

TEST_CASE("det_fraction_free") {
  CHECK(hankel::det_fraction_free(IntegerMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).value == 1);
  CHECK(hankel::det_fraction_free(IntegerMatrix{{0, 1, 2}, {1, 2, 5}, {2, 5, 16}}).value == -4);
  CHECK(hankel::det_fraction_free(IntegerMatrix{{2, 5}, {5, 16}}).value == 7);
  CHECK(hankel::det_fraction_free(IntegerMatrix{}).value == 1);

  SUBCASE("zero pivot forces a row exchange") {
    const auto r = hankel::det_fraction_free(IntegerMatrix{{0, 1}, {1, 0}});
    CHECK(r.value == -1);
    CHECK(r.pivot_swaps == 1);
  }
  SUBCASE("all-zero pivot column") {
    CHECK(hankel::det_fraction_free(IntegerMatrix{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}).value == 0);
    CHECK(hankel::det_fraction_free(IntegerMatrix{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}).value == 0);
  }
  SUBCASE("matches cofactor expansion on random integer matrices") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::size_t> order(1, 5);
    for (int trial = 0; trial < 500; ++trial) {
      const auto m = oracle::random_integer_matrix(rng, order(rng), -9, 9);
      REQUIRE(hankel::det_fraction_free(m).value == oracle::cofactor_det(m));
    }
  }
  SUBCASE("sparse random matrices exercise pivoting") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> order(2, 6);
    std::bernoulli_distribution zero(0.6);
    for (int trial = 0; trial < 300; ++trial) {
      auto m = oracle::random_integer_matrix(rng, order(rng), -9, 9);
      for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
          if (zero(rng)) m(i, j) = 0;
      const Integer expected = oracle::cofactor_det(m);
      REQUIRE(hankel::det_fraction_free(m).value == expected);
      REQUIRE(hankel::det_rational(to_rational(m)) == Rational(expected));
    }
  }
}

TEST_CASE("det_rational") {
  CHECK(hankel::det_rational(RationalMatrix{{make_rational(3, 4)}}) == make_rational(3, 4));
  CHECK(hankel::det_rational(RationalMatrix{{make_rational(1, 2), make_rational(1, 3)},
                                            {make_rational(1, 3), make_rational(1, 4)}}) ==
        make_rational(1, 72));
  const auto p0 = hankel::build_p_matrix(MomentSequence::gamma(), 0);
  CHECK(p0 == RationalMatrix{{0, make_rational(1, 2)}, {make_rational(1, 2), make_rational(41, 36)}});
  CHECK(hankel::det_rational(p0) == make_rational(-1, 4));

  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> order(1, 5);
  SUBCASE("matches cofactor expansion over the rationals") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = oracle::random_rational_matrix(rng, order(rng));
      REQUIRE(hankel::det_rational(m) == oracle::cofactor_det(m));
    }
  }
  SUBCASE("transpose invariance") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = oracle::random_rational_matrix(rng, order(rng));
      REQUIRE(hankel::det_rational(m) == hankel::det_rational(m.transposed()));
    }
  }
  SUBCASE("row scaling scales the determinant") {
    std::uniform_int_distribution<std::size_t> pick(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
      auto m = oracle::random_rational_matrix(rng, order(rng));
      const Rational before = hankel::det_rational(m);
      const Rational c = oracle::random_rational(rng);
      const std::size_t row = pick(rng) % m.order();
      for (std::size_t j = 0; j < m.order(); ++j) m(row, j) *= c;
      REQUIRE(hankel::det_rational(m) == c * before);
    }
  }
}

TEST_CASE("arrow_det") {
  CHECK(hankel::arrow_det(RationalMatrix{{5}}) == Rational(5));
  CHECK(hankel::arrow_det(RationalMatrix{{1, 2}, {3, 4}}) == Rational(-2));
  CHECK(hankel::arrow_det(RationalMatrix{{0, 1, 1}, {1, 2, 0}, {1, 0, 3}}) == Rational(-5));
  CHECK_THROWS_AS(hankel::arrow_det(RationalMatrix{{1, 1, 1}, {1, 2, 1}, {1, 0, 3}}),
                  hankel::ArrowShapeViolation);
  CHECK_THROWS_AS(hankel::arrow_det(RationalMatrix{{1, 1, 1}, {1, 0, 0}, {1, 0, 3}}),
                  hankel::ZeroDiagonal);

  SUBCASE("agrees with det_rational on random arrow matrices") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<std::size_t> order(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = order(rng);
      RationalMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m(0, i) = oracle::random_rational(rng, 20);
        m(i, 0) = oracle::random_rational(rng, 20);
      }
      for (std::size_t i = 1; i < n; ++i) {
        do m(i, i) = oracle::random_rational(rng, 20);
        while (m(i, i).is_zero());
      }
      REQUIRE(hankel::arrow_det(m) == hankel::det_rational(m));
      REQUIRE(hankel::arrow_det(m) == oracle::cofactor_det(m));
    }
  }
}

TEST_CASE("hankel_P and hankel_Q") {
  const auto delta = MomentSequence::gompertz();
  CHECK(hankel::hankel_p(delta, 1) == Rational(4));
  CHECK(hankel::hankel_q(delta, 1) == Rational(7));
  CHECK(hankel::hankel_p(delta, 3) / hankel::hankel_q(delta, 3) == make_rational(124, 209));
  const auto z2 = MomentSequence::zeta(2);
  CHECK(hankel::hankel_p(z2, 1) / hankel::hankel_q(z2, 1) == make_rational(135, 89));

  SUBCASE("P_0/Q_0 = a_1^2/a_2") {
    for (const auto& seq : builtins()) {
      const Rational a1 = seq.moment(1);
      CHECK(hankel::hankel_p(seq, 0) / hankel::hankel_q(seq, 0) == a1 * a1 / seq.moment(2));
    }
  }
  SUBCASE("Q_n > 0 on the built-in families") {
    for (const auto& seq : builtins())
      for (std::size_t n = 0; n <= 25; ++n) REQUIRE(hankel::hankel_q(seq, n).sign() > 0);
  }
  SUBCASE("non-positive Q is reported") {
    const auto alternating = MomentSequence::custom(
        "alt", {Rational(-1), Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)});
    CHECK(hankel::hankel_q(alternating, 0) == Rational(1));
    try {
      hankel::hankel_q(alternating, 1);
      FAIL("expected NonPositiveQ");
    } catch (const hankel::NonPositiveQ& e) {
      CHECK(e.index() == 1);
    }
  }
}
