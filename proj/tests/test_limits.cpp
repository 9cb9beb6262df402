#include <stdexcept>

#include "doctest.h"
#include "qharmonic/composition.hpp"
#include "qharmonic/limits.hpp"
#include "qharmonic/sums.hpp"

namespace {

using qharmonic::Composition;
using qharmonic::make_rational;
using qharmonic::parse_composition;
using qharmonic::qzeta_routes;
using qharmonic::qzeta_truncated;
using qharmonic::Rational;
using qharmonic::SumKind;
using qharmonic::truncated_limit;
using qharmonic::TruncationResult;

Rational abs_diff(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d < 0 ? -d : d;
}

}  // namespace

TEST_CASE("one-term truncation of the depth-one series") {
  const TruncationResult r =
      truncated_limit(SumKind::z_weak, parse_composition("2"),
                      make_rational(1, 2), 1);
  CHECK(r.value == make_rational(1, 2));
  CHECK(r.terms_used == 1);
  CHECK(r.tail_bound > 0);
}

TEST_CASE("partial sums of a positive series grow and settle") {
  Rational previous_value;
  Rational previous_bound;
  for (int N = 1; N <= 12; ++N) {
    const TruncationResult r =
        truncated_limit(SumKind::z_weak, parse_composition("2"),
                        make_rational(1, 2), N);
    if (N > 1) {
      CHECK(r.value > previous_value);
      // The newly added term is part of the previously omitted tail.
      CHECK(r.value - previous_value <= previous_bound);
      CHECK(r.tail_bound < previous_bound);
    }
    previous_value = r.value;
    previous_bound = r.tail_bound;
  }
}

TEST_CASE("tail bounds dominate the remaining distance to a finer sum") {
  const Rational q0 = make_rational(1, 2);
  for (SumKind kind : {SumKind::z_weak, SumKind::a_weak, SumKind::z_strict,
                       SumKind::a_strict}) {
    for (const char* text : {"2", "1,1", "2,1"}) {
      const Composition s = parse_composition(text);
      const TruncationResult fine = truncated_limit(kind, s, q0, 40);
      for (int N : {3, 8, 15}) {
        const TruncationResult coarse = truncated_limit(kind, s, q0, N);
        CAPTURE(text);
        CAPTURE(N);
        CHECK(abs_diff(fine.value, coarse.value) <= coarse.tail_bound);
      }
    }
  }
}

TEST_CASE("dual series approach the same limit") {
  // The depth-one weight-two Z series and the (1,1) A series converge to
  // the same number; their truncations agree within the combined bounds.
  const Rational q0 = make_rational(1, 2);
  const TruncationResult a =
      truncated_limit(SumKind::a_weak, parse_composition("1,1"), q0, 20);
  const TruncationResult z =
      truncated_limit(SumKind::z_weak, parse_composition("2"), q0, 20);
  CHECK(abs_diff(a.value, z.value) <= a.tail_bound + z.tail_bound);
}

TEST_CASE("truncation rejects parameters outside the open unit interval") {
  const Composition s = parse_composition("2");
  for (const Rational& q0 :
       {Rational(0), Rational(1), make_rational(3, 2), Rational(-1)}) {
    CHECK_THROWS_WITH_AS(truncated_limit(SumKind::z_weak, s, q0, 5),
                         "truncation point must satisfy 0 < q0 < 1",
                         std::invalid_argument);
  }
}

TEST_CASE("truncation rejects malformed series descriptions") {
  const Rational q0 = make_rational(1, 2);
  CHECK_THROWS_AS(truncated_limit(SumKind::z_weak, Composition(), q0, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      truncated_limit(SumKind::z_weak, parse_composition("1,0"), q0, 5),
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      truncated_limit(SumKind::w_weak, parse_composition("2"), q0, 5),
      "truncated_limit supports the Z and A kinds only",
      std::invalid_argument);
  CHECK_THROWS_AS(
      truncated_limit(SumKind::z_weak, parse_composition("2"), q0, 0),
      std::invalid_argument);
}

TEST_CASE("zeta-style truncation at one term") {
  const TruncationResult r =
      qzeta_truncated(parse_composition("2"), make_rational(1, 2), 1);
  CHECK(r.value == make_rational(1, 2));
  CHECK(r.terms_used == 1);
}

TEST_CASE("zeta-style tail bounds dominate the distance to a finer sum") {
  for (const char* text : {"2", "2,1", "3,1,1"}) {
    const Composition s = parse_composition(text);
    for (const Rational& q0 : {make_rational(1, 3), make_rational(1, 2)}) {
      const TruncationResult fine = qzeta_truncated(s, q0, 40);
      for (int N : {2, 6, 12}) {
        const TruncationResult coarse = qzeta_truncated(s, q0, N);
        CAPTURE(text);
        CAPTURE(N);
        CHECK(abs_diff(fine.value, coarse.value) <= coarse.tail_bound);
      }
    }
  }
}

TEST_CASE("both zeta-style summation routes agree at every length") {
  for (const char* text : {"2", "2,1"}) {
    const Composition s = parse_composition(text);
    for (const Rational& q0 : {make_rational(1, 3), make_rational(1, 2)}) {
      for (int N = 1; N <= 12; ++N) {
        const qharmonic::QZetaRoutes r = qzeta_routes(s, q0, N);
        CAPTURE(text);
        CAPTURE(N);
        CHECK(r.defining_series == r.reciprocal_parameter);
      }
    }
  }
}

TEST_CASE("zeta-style truncation needs a convergent leading entry") {
  CHECK_THROWS_WITH_AS(
      qzeta_truncated(parse_composition("1,2"), make_rational(1, 2), 5),
      "series requires a first entry >= 2 for convergence",
      std::invalid_argument);
  CHECK_THROWS_AS(qzeta_truncated(Composition(), make_rational(1, 2), 5),
                  std::invalid_argument);
}
