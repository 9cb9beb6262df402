#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qharmonic/composition.hpp"
#include "qharmonic/qcombinatorics.hpp"
#include "qharmonic/qratfun.hpp"
#include "qharmonic/sums.hpp"
#include "qharmonic/verify.hpp"

namespace {

using qharmonic::Composition;
using qharmonic::eval_sum;
using qharmonic::eval_sum_brute;
using qharmonic::make_rational;
using qharmonic::parse_composition;
using qharmonic::QPoly;
using qharmonic::QRatFun;
using qharmonic::Rational;
using qharmonic::SumKind;

constexpr SumKind kAllKinds[] = {SumKind::z_weak, SumKind::a_weak,
                                 SumKind::w_weak, SumKind::z_strict,
                                 SumKind::a_strict};

QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

}  // namespace

TEST_CASE("kind tags round-trip") {
  for (SumKind kind : kAllKinds) {
    auto parsed = qharmonic::parse_sum_kind(qharmonic::sum_kind_tag(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK_FALSE(qharmonic::parse_sum_kind("nope").has_value());
}

TEST_CASE("weak sum of a single depth-one argument") {
  CHECK(eval_sum(SumKind::z_weak, parse_composition("1"), 2) ==
        QRatFun(poly({0, 1, 2}), poly({1, 1})));
}

TEST_CASE("any single entry at n equal one gives q") {
  for (int s1 : {0, 1, 2, 7}) {
    CHECK(eval_sum(SumKind::z_weak,
                   Composition(std::vector<int>{s1}), 1) ==
          QRatFun(poly({0, 1})));
  }
}

TEST_CASE("empty argument list conventions differ weak versus strict") {
  CHECK(eval_sum(SumKind::z_weak, Composition(), 5) == QRatFun::one());
  CHECK(eval_sum(SumKind::z_weak, Composition(), 0).is_zero());
  CHECK(eval_sum(SumKind::a_weak, Composition(), 3) == QRatFun::one());
  CHECK(eval_sum(SumKind::z_strict, Composition(), 0) == QRatFun::one());
  CHECK(eval_sum(SumKind::a_strict, Composition(), 0) == QRatFun::one());
  CHECK(eval_sum(SumKind::z_strict, Composition(), 4) == QRatFun::one());
}

TEST_CASE("n equal zero annihilates every nonempty sum") {
  for (SumKind kind : kAllKinds) {
    CHECK(eval_sum(kind, parse_composition("2,1"), 0).is_zero());
  }
}

TEST_CASE("strict chains longer than n are empty") {
  CHECK(eval_sum(SumKind::a_strict, parse_composition("1,1"), 1).is_zero());
  CHECK(eval_sum(SumKind::z_strict, parse_composition("1,1,1"), 2)
            .is_zero());
}

TEST_CASE("zero arguments are constant one factors for the a-kind") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(eval_sum(SumKind::a_weak, parse_composition("0"), n) ==
          QRatFun::one());
  }
}

TEST_CASE("negative entries are rejected") {
  CHECK_THROWS_AS(
      eval_sum(SumKind::z_weak, Composition(std::vector<int>{-1}), 3),
      std::invalid_argument);
}

TEST_CASE("dynamic programming matches literal nested loops") {
  // Every composition of weight <= 4 and length <= 3, all kinds, n <= 5.
  for (const Composition& s : qharmonic::compositions_up_to_weight(4)) {
    if (s.size() > 3) continue;
    for (int n = 0; n <= 5; ++n) {
      for (SumKind kind : kAllKinds) {
        CAPTURE(qharmonic::sum_kind_tag(kind));
        CAPTURE(s.to_string());
        CAPTURE(n);
        CHECK(eval_sum(kind, s, n) == eval_sum_brute(kind, s, n));
      }
    }
  }
}

TEST_CASE("dynamic programming matches literal loops on zero entries") {
  for (const char* text : {"0", "0,1", "2,0,1", "0,0,1", "1,0"}) {
    const Composition s = parse_composition(text);
    for (int n = 0; n <= 4; ++n) {
      for (SumKind kind : kAllKinds) {
        CAPTURE(text);
        CAPTURE(n);
        CHECK(eval_sum(kind, s, n) == eval_sum_brute(kind, s, n));
      }
    }
  }
}

TEST_CASE("the literal-loop oracle guards against blowup") {
  CHECK_THROWS_WITH_AS(
      eval_sum_brute(SumKind::z_weak, Composition::ones(7), 8),
      "oracle too large", std::domain_error);
}

TEST_CASE("recurrence evaluation agrees with direct evaluation") {
  for (const Composition& s : qharmonic::compositions_up_to_weight(5)) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(s.to_string());
      CAPTURE(n);
      CHECK(qharmonic::eval_a_recursive(s, n) ==
            eval_sum(SumKind::a_weak, s, n));
      CHECK(qharmonic::eval_a_strict_recursive(s, n) ==
            eval_sum(SumKind::a_strict, s, n));
    }
  }
}

TEST_CASE("recurrence evaluation handles a leading zero argument") {
  for (const Composition& tail : qharmonic::compositions_up_to_weight(4)) {
    std::vector<int> entries = {0};
    entries.insert(entries.end(), tail.entries().begin(),
                   tail.entries().end());
    const Composition s(entries);
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(s.to_string());
      CHECK(qharmonic::eval_a_recursive(s, n) ==
            eval_sum(SumKind::a_weak, s, n));
      CHECK(qharmonic::eval_a_strict_recursive(s, n) ==
            eval_sum(SumKind::a_strict, s, n));
    }
  }
}

TEST_CASE("unrolled depth-one recurrence") {
  for (int n = 1; n <= 8; ++n) {
    QRatFun expected;
    for (int r = 1; r <= n; ++r) {
      expected += QRatFun(QPoly::power_of_q(r), qharmonic::q_integer(r));
    }
    CHECK(qharmonic::eval_a_recursive(parse_composition("1"), n) ==
          expected);
  }
}

TEST_CASE("value at one by substitution and by integer arithmetic") {
  CHECK(qharmonic::eval_q1(SumKind::z_weak, parse_composition("1"), 3) ==
        make_rational(11, 6));
  CHECK(qharmonic::eval_q1(SumKind::z_weak, Composition(), 4) ==
        Rational(1));
  for (const Composition& s : qharmonic::compositions_up_to_weight(4)) {
    for (int n = 1; n <= 6; ++n) {
      for (SumKind kind : kAllKinds) {
        const qharmonic::Q1Routes routes =
            qharmonic::eval_q1_routes(kind, s, n);
        CAPTURE(s.to_string());
        CHECK(routes.via_symbolic == routes.via_direct);
      }
    }
  }
}

TEST_CASE("canonical denominators involve only q-integer factors") {
  for (const Composition& s : qharmonic::compositions_up_to_weight(4)) {
    for (int n = 1; n <= 5; ++n) {
      QPoly master({Rational(1)});
      for (int k = 1; k <= n; ++k) {
        for (int e = 0; e < s.weight(); ++e) {
          master = master * qharmonic::q_integer(k);
        }
      }
      const QRatFun value = eval_sum(SumKind::z_weak, s, n);
      CHECK(qharmonic::divide(master, value.den()).remainder.is_zero());
    }
  }
}

TEST_CASE("no canonical denominator vanishes at one") {
  for (const Composition& s : qharmonic::compositions_up_to_weight(4)) {
    for (int n = 0; n <= 5; ++n) {
      for (SumKind kind : kAllKinds) {
        const QRatFun value = eval_sum(kind, s, n);
        CHECK(value.den().eval(Rational(1)) != 0);
      }
    }
  }
}
