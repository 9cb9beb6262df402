// Microbenchmarks for the evaluation kernels: canonical rational-function
// evaluation at growing weight, the dynamic-programming evaluator against
// the literal nested loops, polynomial gcd on structured inputs, and a
// full duality sweep.

#include <benchmark/benchmark.h>

#include <vector>

#include "qharmonic/composition.hpp"
#include "qharmonic/qcombinatorics.hpp"
#include "qharmonic/qpoly.hpp"
#include "qharmonic/sums.hpp"
#include "qharmonic/verify.hpp"

namespace {

using qharmonic::Composition;
using qharmonic::QPoly;
using qharmonic::SumKind;

// A fixed zigzag argument of the requested weight, so runs are comparable.
Composition zigzag(int weight) {
  std::vector<int> entries;
  int remaining = weight;
  bool two = true;
  while (remaining > 0) {
    const int e = two && remaining >= 2 ? 2 : 1;
    entries.push_back(e);
    remaining -= e;
    two = !two;
  }
  return Composition(entries);
}

void BM_EvalSumByWeight(benchmark::State& state) {
  const Composition s = zigzag(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qharmonic::eval_sum(SumKind::z_weak, s, 6));
  }
}
BENCHMARK(BM_EvalSumByWeight)->DenseRange(2, 6);

void BM_EvalSumDp(benchmark::State& state) {
  const Composition s = zigzag(4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qharmonic::eval_sum(SumKind::z_weak, s, n));
  }
}
BENCHMARK(BM_EvalSumDp)->Arg(3)->Arg(5);

void BM_EvalSumBrute(benchmark::State& state) {
  const Composition s = zigzag(4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qharmonic::eval_sum_brute(SumKind::z_weak, s, n));
  }
}
BENCHMARK(BM_EvalSumBrute)->Arg(3)->Arg(5);

void BM_PolyGcd(benchmark::State& state) {
  // gcd of two products of q-integers with a large common factor.
  const int n = static_cast<int>(state.range(0));
  QPoly left({qharmonic::Rational(1)});
  QPoly right({qharmonic::Rational(1)});
  for (int k = 1; k <= n; ++k) {
    left = left * qharmonic::q_integer(k);
    if (k % 2 == 0) right = right * qharmonic::q_integer(k);
  }
  right = right * qharmonic::q_integer(n + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qharmonic::poly_gcd(left, right));
  }
}
BENCHMARK(BM_PolyGcd)->Arg(6)->Arg(10);

void BM_DualitySweep(benchmark::State& state) {
  qharmonic::SweepOptions opt;
  opt.max_weight = static_cast<int>(state.range(0));
  opt.max_n = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qharmonic::sweep(qharmonic::IdentityId::theorem1, opt));
  }
}
BENCHMARK(BM_DualitySweep)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
