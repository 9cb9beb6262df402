// Acceptance gate: runs the full battery of checks the library promises,
// printing one PASS/FAIL line per criterion (details indented beneath)
// and exiting 0 only if every criterion passed.
//
// Criterion 8 documents a genuine negative result: the single-sum
// expansion of a weak nested sum over the coarsenings of its argument is
// false in general (merged indices contribute q^(r k), not q^k).  The
// gate runs the sweep, reports the counterexamples, and stays red rather
// than weakening the statement it checks.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qharmonic/composition.hpp"
#include "qharmonic/limits.hpp"
#include "qharmonic/qcombinatorics.hpp"
#include "qharmonic/qratfun.hpp"
#include "qharmonic/rational.hpp"
#include "qharmonic/sums.hpp"
#include "qharmonic/verify.hpp"

namespace {

using qharmonic::check_identity;
using qharmonic::Composition;
using qharmonic::IdentityId;
using qharmonic::make_rational;
using qharmonic::Params;
using qharmonic::parse_composition;
using qharmonic::QRatFun;
using qharmonic::Rational;
using qharmonic::Report;
using qharmonic::SumKind;
using qharmonic::Verdict;

// Pinned numeric gates.
constexpr double kSweepSecondsLimit = 120.0;
constexpr std::uint64_t kSeed = 20260822;
const Rational kCombinedBoundLimit = make_rational(1, 1000000000);

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& on_failure) {
    if (!ok) {
      passed = false;
      details.push_back(on_failure);
    }
  }
  void note(const std::string& line) { details.push_back(line); }
};

int g_failures = 0;

void run(int number, const std::string& title, void (*body)(Outcome&)) {
  Outcome outcome;
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.passed = false;
    outcome.note(std::string("unexpected exception: ") + e.what());
  }
  if (!outcome.passed) ++g_failures;
  std::cout << (outcome.passed ? "PASS" : "FAIL") << "  " << number << ". "
            << title << "\n";
  for (const std::string& line : outcome.details) {
    std::cout << "      " << line << "\n";
  }
  std::cout.flush();
}

std::string rational_str(const Rational& r) { return qharmonic::to_string(r); }

// --- 1 -------------------------------------------------------------

void criterion_duality_sweep(Outcome& out) {
  qharmonic::SweepOptions opt;
  opt.max_weight = 6;
  opt.max_n = 8;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Report> reports =
      qharmonic::sweep(IdentityId::theorem1, opt);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  out.require(reports.size() == 63 * 8,
              "expected 504 reports, got " + std::to_string(reports.size()));
  out.require(qharmonic::all_hold(reports), "a duality instance failed");
  out.require(seconds < kSweepSecondsLimit,
              "sweep took " + std::to_string(seconds) + " s");
  out.note("504 instances (weight <= 6, n <= 8) in " +
           std::to_string(seconds) + " s, all equal canonically");
}

// --- 2 -------------------------------------------------------------

void criterion_worked_pairs(Outcome& out) {
  for (const char* text : {"1,1,3,1", "2,2"}) {
    for (int n = 1; n <= 6; ++n) {
      const Report r = qharmonic::check_theorem1(parse_composition(text), n);
      out.require(r.verdict == Verdict::holds,
                  std::string("pair s=") + text + " failed at n=" +
                      std::to_string(n));
    }
  }
  const auto pair1 = qharmonic::dual_pair_from_blocks({3, 1}, {2, 1});
  out.require(pair1.first == parse_composition("1,1,3,1") &&
                  pair1.second == parse_composition("3,1,2"),
              "blocks (3,1),(2,1) produced " + pair1.first.to_string() +
                  " / " + pair1.second.to_string());
  const auto pair2 = qharmonic::dual_pair_from_blocks({1, 1}, {1, 2});
  out.require(pair2.first == parse_composition("2,2") &&
                  pair2.second == parse_composition("1,2,1"),
              "blocks (1,1),(1,2) produced " + pair2.first.to_string() +
                  " / " + pair2.second.to_string());
  out.note("both worked argument pairs hold for n = 1..6 and are "
           "reproduced by their block parameterization");
}

// --- 3 -------------------------------------------------------------

void criterion_qbinomial_identities(Outcome& out) {
  for (int n = 1; n <= 20; ++n) {
    out.require(check_identity(IdentityId::george,
                               Params().set("n", n)).verdict ==
                    Verdict::holds,
                "depth-one identity failed at n=" + std::to_string(n));
  }
  for (int m = 0; m <= 4; ++m) {
    for (int n = 1; n <= 10; ++n) {
      out.require(
          check_identity(IdentityId::qkarl,
                         Params().set("m", m).set("n", n)).verdict ==
              Verdict::holds,
          "signed q-binomial sum failed at m=" + std::to_string(m) +
              " n=" + std::to_string(n));
    }
  }
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 10; ++n) {
      out.require(
          check_identity(IdentityId::qkarl_dual,
                         Params().set("m", m).set("n", n)).verdict ==
              Verdict::holds,
          "power-sum form failed at m=" + std::to_string(m) + " n=" +
              std::to_string(n));
    }
  }
  out.note("n <= 20 depth-one, m <= 4 and n <= 10 for both nested forms");
}

// --- 4 -------------------------------------------------------------

void criterion_value_at_one_routes(Outcome& out) {
  int instances = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 10; ++n) {
      for (SumKind kind : {SumKind::z_weak, SumKind::a_weak}) {
        const qharmonic::Q1Routes routes =
            qharmonic::eval_q1_routes(kind, Composition::ones(m), n);
        out.require(routes.via_symbolic == routes.via_direct,
                    "routes disagree at m=" + std::to_string(m) + " n=" +
                        std::to_string(n));
        ++instances;
      }
      out.require(check_identity(IdentityId::karl,
                                 Params().set("m", m).set("n", n)).verdict ==
                      Verdict::holds,
                  "classical identity failed at m=" + std::to_string(m) +
                      " n=" + std::to_string(n));
    }
  }
  out.note(std::to_string(instances) +
           " substitution-vs-integer route pairs agree exactly");
}

// --- 5 -------------------------------------------------------------

void criterion_unit_normalization(Outcome& out) {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 1; n <= 8; ++n) {
      out.require(
          check_identity(IdentityId::an01m,
                         Params().set("m", m).set("n", n)).verdict ==
              Verdict::holds,
          "normalized product differs from 1 at m=" + std::to_string(m) +
              " n=" + std::to_string(n));
    }
  }
  out.note("zero-led unit arguments times [n]^m give exactly 1 for "
           "m <= 5, n <= 8");
}

// --- 6 -------------------------------------------------------------

void criterion_strict_unit_identity(Outcome& out) {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 10; ++n) {
      out.require(
          check_identity(IdentityId::thm2_strict_ones,
                         Params().set("m", m).set("n", n)).verdict ==
              Verdict::holds,
          "strict unit identity failed at m=" + std::to_string(m) + " n=" +
              std::to_string(n));
    }
  }
  out.note("m <= 5, n <= 10 including the m = 0 and n = 0 boundaries");
}

// --- 7 -------------------------------------------------------------

void criterion_recurrences_and_oracle(Outcome& out) {
  for (const Composition& s : qharmonic::compositions_up_to_weight(5)) {
    for (int n = 1; n <= 6; ++n) {
      const bool weak_ok = qharmonic::eval_a_recursive(s, n) ==
                           qharmonic::eval_sum(SumKind::a_weak, s, n);
      const bool strict_ok = qharmonic::eval_a_strict_recursive(s, n) ==
                             qharmonic::eval_sum(SumKind::a_strict, s, n);
      out.require(weak_ok && strict_ok,
                  "recurrence mismatch at s=" + s.to_string() + " n=" +
                      std::to_string(n));
    }
  }
  constexpr SumKind kinds[] = {SumKind::z_weak, SumKind::a_weak,
                               SumKind::w_weak, SumKind::z_strict,
                               SumKind::a_strict};
  for (const Composition& s : qharmonic::compositions_up_to_weight(4)) {
    if (s.size() > 3) continue;
    for (int n = 0; n <= 5; ++n) {
      for (SumKind kind : kinds) {
        out.require(qharmonic::eval_sum(kind, s, n) ==
                        qharmonic::eval_sum_brute(kind, s, n),
                    "oracle mismatch at kind=" +
                        qharmonic::sum_kind_tag(kind) + " s=" +
                        s.to_string() + " n=" + std::to_string(n));
      }
    }
  }
  out.note("recurrences match direct evaluation (weight <= 5, n <= 6); "
           "direct matches nested literal loops (weight <= 4, length <= 3, "
           "n <= 5, all five kinds)");
}

// --- 8 -------------------------------------------------------------

void criterion_coarsening_expansion(Outcome& out) {
  qharmonic::SweepOptions opt;
  opt.max_weight = 6;
  opt.max_length = 4;
  opt.max_n = 6;
  // Throws std::logic_error if the evaluators ever disagree with the
  // collision-corrected decomposition, so a completed sweep certifies
  // both evaluators while the displayed form is judged on its merits.
  const std::vector<Report> reports =
      qharmonic::sweep(IdentityId::weak_strict_expansion, opt);
  size_t holds = 0;
  size_t fails = 0;
  for (const Report& r : reports) {
    if (r.verdict == Verdict::holds) ++holds;
    if (r.verdict == Verdict::fails) ++fails;
  }
  out.require(fails == 0, "the coarsening expansion is refuted on " +
                              std::to_string(fails) + " of " +
                              std::to_string(reports.size()) +
                              " instances (it holds on the " +
                              std::to_string(holds) +
                              " single-entry arguments only)");
  out.note("smallest counterexample: s=1,1 n=1 gives q^2 on the weak side "
           "but q after expanding over coarsenings");
  out.note("cause: r coincident indices at value k contribute q^(r k), "
           "while every coarsening term carries q^k");
  out.note("the collision-corrected decomposition (weak sum = strict sums "
           "over merge patterns with q^(r k) factors) held on every "
           "instance, so both evaluators are cross-validated");
}

// --- 9 -------------------------------------------------------------

void criterion_inverse_pair(Outcome& out) {
  const Report campaign =
      check_identity(IdentityId::prodinger_pair, Params()
                                                     .set("seed", kSeed)
                                                     .set("trials", 100)
                                                     .set("max_n", 6));
  out.require(campaign.verdict == Verdict::holds,
              "a random sequence violated the second inverse relation: " +
                  campaign.witness.value_or(""));
  for (const char* text : {"2", "1,1"}) {
    for (int n = 1; n <= 5; ++n) {
      const Report r = check_identity(
          IdentityId::prodinger_pair,
          Params().set("s", parse_composition(text)).set("n", n));
      out.require(r.verdict == Verdict::holds,
                  std::string("duality instantiation failed at s=") + text +
                      " n=" + std::to_string(n));
    }
  }
  out.note("100 seeded random sequences (seed " + std::to_string(kSeed) +
           ", n <= 6) plus the duality instantiations for s=2 and s=1,1");
}

// --- 10 ------------------------------------------------------------

// Literal rational-arithmetic transcriptions of the two sides of the
// signed q-binomial identity with m nested unit exponents, used to pin
// down what the four-parameter identity specializes to.
Rational signed_qbinomial_side(int m, int n, const Rational& q0) {
  Rational sum(0);
  for (int k = 1; k <= n; ++k) {
    const long e = static_cast<long>(k) * (k + 1) / 2 +
                   static_cast<long>(m - 1) * k;
    const Rational term =
        qharmonic::q_binomial_at(n, k, q0) * qharmonic::rational_pow(q0, e) /
        qharmonic::rational_pow(
            Rational(1) - qharmonic::rational_pow(q0, k), m);
    sum += (k % 2 == 1) ? term : -term;
  }
  return sum;
}

Rational nested_unit_side(int m, int n, const Rational& q0) {
  // Sum over n >= k_1 >= ... >= k_m >= 1 of prod q0^(k_j)/(1 - q0^(k_j)).
  std::vector<Rational> level(static_cast<size_t>(n) + 1, Rational(1));
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> next(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) {
      const Rational factor = qharmonic::rational_pow(q0, k) /
                              (Rational(1) - qharmonic::rational_pow(q0, k));
      next[static_cast<size_t>(k)] =
          next[static_cast<size_t>(k - 1)] +
          factor * level[static_cast<size_t>(k)];
    }
    // next[k] accumulates over the outermost remaining index <= k.
    for (int k = 1; k <= n; ++k) {
      level[static_cast<size_t>(k)] = next[static_cast<size_t>(k)];
    }
    level[0] = Rational(0);
  }
  return level[static_cast<size_t>(n)];
}

void criterion_four_parameter(Outcome& out) {
  const Report campaign = check_identity(
      IdentityId::fulas, Params().set("seed", kSeed).set("trials", 25));
  out.require(campaign.verdict == Verdict::holds,
              "a sampled point violated the identity: " +
                  campaign.witness.value_or(""));

  struct Point {
    int n;
    int m;
    Rational q0;
  };
  const std::vector<Point> points = {{1, 1, make_rational(1, 2)},
                                     {2, 2, make_rational(1, 3)},
                                     {3, 1, make_rational(2, 5)},
                                     {4, 3, make_rational(1, 2)},
                                     {5, 5, make_rational(3, 7)}};
  for (const Point& p : points) {
    const qharmonic::FulasSides sides = qharmonic::fulas_sides(
        p.n, p.m, Rational(0), Rational(-1), Rational(1), Rational(1), p.q0);
    const Rational nested = nested_unit_side(p.m, p.n, p.q0);
    const Rational binom = signed_qbinomial_side(p.m, p.n, p.q0);
    const std::string where =
        " at n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) +
        " q=" + rational_str(p.q0);
    out.require(sides.lhs == nested,
                "specialized nested side differs" + where);
    out.require(sides.rhs == binom,
                "specialized signed-binomial side differs" + where);
    out.require(sides.lhs == sides.rhs, "sides differ" + where);
  }
  out.note("25 seeded points (seed " + std::to_string(kSeed) +
           ", n, m <= 5) hold; at a=0 b=-1 c=z=1 both sides reduce, term "
           "by term, to the signed q-binomial identity at 5 points");
}

// --- 11 ------------------------------------------------------------

void criterion_series_truncation(Outcome& out) {
  const Report r = check_identity(
      IdentityId::uchimura_limit,
      Params().set("q", make_rational(1, 2)).set("N", 40));
  out.require(r.verdict == Verdict::holds,
              "truncations differ by more than their combined tail bound");
  if (!r.tail_bound) {
    out.require(false, "no tail bound reported");
    return;
  }
  out.require(*r.tail_bound < kCombinedBoundLimit,
              "combined bound " + rational_str(*r.tail_bound) +
                  " is not below 1/10^9");
  // All comparisons above are exact; the printed values are approximate.
  std::ostringstream approx;
  approx << std::scientific << std::setprecision(3) << "q = 1/2, 40 outer "
         << "terms: residual ~" << r.residual.value_or(Rational(0)).get_d()
         << " <= combined tail bound ~" << r.tail_bound->get_d()
         << " < 1/10^9, compared in exact rational arithmetic";
  out.note(approx.str());
}

// --- 12 ------------------------------------------------------------

void criterion_zeta_routes(Outcome& out) {
  for (const char* text : {"2", "2,1"}) {
    const Composition s = parse_composition(text);
    for (const Rational& q0 : {make_rational(1, 3), make_rational(1, 2)}) {
      for (int N = 1; N <= 30; ++N) {
        const qharmonic::QZetaRoutes routes =
            qharmonic::qzeta_routes(s, q0, N);
        out.require(routes.defining_series == routes.reciprocal_parameter,
                    std::string("routes disagree at s=") + text + " q=" +
                        rational_str(q0) + " N=" + std::to_string(N));
      }
    }
  }
  out.note("defining series and reciprocal-parameter route agree exactly "
           "for s=2 and s=2,1 at q = 1/3 and 1/2, every N <= 30");
}

}  // namespace

int main() {
  std::cout << "acceptance gate (exact arithmetic throughout; numeric gates "
               "pinned in source)\n";
  run(1, "exhaustive duality sweep, weight <= 6, n <= 8, under " +
             std::to_string(static_cast<int>(kSweepSecondsLimit)) + " s",
      criterion_duality_sweep);
  run(2, "worked dual pairs and their block parameterization",
      criterion_worked_pairs);
  run(3, "signed q-binomial identities, depth one and nested",
      criterion_qbinomial_identities);
  run(4, "value-at-one routes agree (substitution vs integer arithmetic)",
      criterion_value_at_one_routes);
  run(5, "zero-led unit arguments normalize to 1", criterion_unit_normalization);
  run(6, "strict unit-exponent alternating identity with boundaries",
      criterion_strict_unit_identity);
  run(7, "recurrences and the literal-loop oracle", criterion_recurrences_and_oracle);
  run(8, "weak sum equals its coarsening expansion (refuted; see details)",
      criterion_coarsening_expansion);
  run(9, "inverse-pair equivalence, random and duality-derived",
      criterion_inverse_pair);
  run(10, "four-parameter rational identity and its specialization",
      criterion_four_parameter);
  run(11, "infinite-series truncation within a computed bound below 1/10^9",
      criterion_series_truncation);
  run(12, "zeta-style series routes agree at every truncation length",
      criterion_zeta_routes);
  if (g_failures == 0) {
    std::cout << "acceptance: all 12 criteria passed\n";
  } else {
    std::cout << "acceptance: " << (12 - g_failures) << " of 12 criteria "
              << "passed, " << g_failures << " failed\n";
  }
  return g_failures == 0 ? 0 : 1;
}
