#pragma once

#include "qharmonic/composition.hpp"
#include "qharmonic/sums.hpp"

namespace qharmonic {

/// Partial sum of an infinite series together with a rigorous bound on
/// everything omitted.  value is exact; |true limit - value| <= tail_bound
/// whenever the series' tail analysis applies (0 < q0 < 1).
struct TruncationResult {
  Rational value;
  int terms_used = 0;
  Rational tail_bound;
};

/// Truncation of the n -> infinity series of the given kind: the outer
/// index k_1 runs over 1..N and inner chains are unbounded below it.  In
/// the A-kind limit the outer binomial factor becomes
/// 1 / prod_{j=1}^{k_1} (1 - q0^j).
///
/// Requires 0 < q0 < 1 (exact rational), entries of s >= 1, m >= 1,
/// N >= 1.  Supported kinds: z_weak, a_weak, z_strict, a_strict.
/// The tail bound is conservative: first omitted term bound divided by
/// one minus a ratio bound, all in exact rational arithmetic.
TruncationResult truncated_limit(SumKind kind, const Composition& s,
                                 const Rational& q0, int N);

/// Truncation of the strict multiple-zeta-style series
///   sum over k_1 > ... > k_m >= 1 of prod q0^((s_j - 1) k_j) / [k_j]^(s_j)
/// with outer index up to N.  Requires s_1 >= 2 (convergence), remaining
/// entries >= 1, 0 < q0 < 1.  Computed by two independent routes - the
/// defining series, and q0^(weight) times the strict Z partial sum at
/// parameter 1/q0 - which are algebraically identical term by term; a
/// mismatch throws std::logic_error.
TruncationResult qzeta_truncated(const Composition& s, const Rational& q0,
                                 int N);

/// Both routes of the truncation above, exposed for route-agreement
/// checks; each is the partial sum over k_1 <= N.
struct QZetaRoutes {
  Rational defining_series;
  Rational reciprocal_parameter;
};
QZetaRoutes qzeta_routes(const Composition& s, const Rational& q0, int N);

}  // namespace qharmonic
