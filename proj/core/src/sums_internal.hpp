#pragma once

#include "qharmonic/composition.hpp"
#include "qharmonic/qratfun.hpp"
#include "qharmonic/sums.hpp"

namespace qharmonic::internal {

// Common-denominator evaluator for compositions with all entries >= 1:
// numerators stay in Z[q] over the known denominator prod_{i<=n} [i]^sigma,
// and the single final canonicalization divides out cyclotomic factors.
// Returns the same canonical value as the generic path.
QRatFun eval_sum_fast(SumKind kind, const Composition& s, int n);

}  // namespace qharmonic::internal
