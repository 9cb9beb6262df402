#pragma once

#include <optional>
#include <string>

#include "qharmonic/composition.hpp"
#include "qharmonic/qratfun.hpp"

namespace qharmonic {

/// The five finite nested q-sum families.
///
/// All range over chains n >= k_1 >= ... >= k_m >= 1 (weak) or
/// n >= k_1 > ... > k_m >= 1 (strict) and multiply one factor per index:
///   Z kinds:        q^(k_j)           / [k_j]^(s_j)
///   A and W kinds:  q^((s_j - 1) k_j) / [k_j]^(s_j)
/// A kinds carry an outer factor depending on the largest index k_1:
///   weak:   (-1)^(k_1 + 1) q^(k_1(k_1+1)/2) [n choose k_1]_q
///   strict: (-1)^(k_1)     q^(k_1(k_1+1)/2) [n choose k_1]_q
/// Conventions: with m >= 1 every kind is 0 at n = 0.  With m = 0 the weak
/// kinds are 1 for n >= 1 and 0 at n = 0 (extended convention); the strict
/// kinds are 1 for every n >= 0.
enum class SumKind { z_weak, a_weak, w_weak, z_strict, a_strict };

bool is_strict(SumKind kind);
bool is_a_kind(SumKind kind);

/// Short tags used by the CLI: Zw, Aw, Ww, Zs, As.
std::string sum_kind_tag(SumKind kind);
std::optional<SumKind> parse_sum_kind(const std::string& tag);

/// Canonical value of the sum.  Entries of s must be >= 0 (zeros
/// contribute Laurent powers of q, absorbed into the denominator),
/// n >= 0.  Cost O(m n) rational-function operations via prefix-sum
/// dynamic programming over the nesting.
QRatFun eval_sum(SumKind kind, const Composition& s, int n);

/// Independent oracle: literal nested loops over all index chains, summing
/// term by term with generic rational-function arithmetic.  Throws
/// std::domain_error("oracle too large") when n^m > 10^6.
QRatFun eval_sum_brute(SumKind kind, const Composition& s, int n);

/// A-kind value through its triangular recurrence
///   A_n[s_1, rest] = sum_{r=1}^n q^r [r]^-1 A_r[s_1 - 1, rest]
/// with the first-entry-0 reduction A_n[0, s_2, rest] = [n]^-1
/// A_n[s_2 - 1, rest] and bases A_n[] = A_n[0] = 1.  Entries must be >= 1
/// except that a single leading 0 is accepted.  Memoization is confined to
/// the call.
QRatFun eval_a_recursive(const Composition& s, int n);

/// Strict analogue: same outer recurrence, but the first-entry-0 reduction
/// steps n down with a sign: A>_n[0, rest] = -A>_(n-1)[rest], and the
/// empty base is 1 for every n >= 0.
QRatFun eval_a_strict_recursive(const Composition& s, int n);

/// Exact value at q = 1 (plain harmonic nested sums with binomial outer
/// factors for A kinds).  Computed by two independent routes - evaluating
/// the canonical rational function at 1, and direct rational arithmetic
/// from the q = 1 form - and throws std::logic_error if they ever
/// disagree.
Rational eval_q1(SumKind kind, const Composition& s, int n);

/// Both q = 1 routes, exposed for tests; eval_q1 compares these.
struct Q1Routes {
  Rational via_symbolic;
  Rational via_direct;
};
Q1Routes eval_q1_routes(SumKind kind, const Composition& s, int n);

}  // namespace qharmonic
