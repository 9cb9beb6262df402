#include "qharmonic/limits.hpp"

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qharmonic/qcombinatorics.hpp"

namespace qharmonic {

namespace {

void validate_point(const Rational& q0) {
  if (!(q0 > 0 && q0 < 1)) {
    throw std::invalid_argument("truncation point must satisfy 0 < q0 < 1");
  }
}

// Inner-chain sums at a fixed point: G(k) = sum over admissible chains
// (k_2, ..., k_m) below outer index k of the per-index factors.  G == 1
// when m == 1.
std::vector<Rational> inner_chain_sums(SumKind kind, const Composition& s,
                                       const Rational& q0, int N) {
  const int m = s.size();
  const bool strict = is_strict(kind);
  const bool z_weights =
      (kind == SumKind::z_weak || kind == SumKind::z_strict);
  auto factor = [&](int sj, int k) -> Rational {
    const int e = z_weights ? k : (sj - 1) * k;
    return rational_pow(q0, e) /
           rational_pow(q_integer_at(k, q0), sj);
  };
  std::vector<Rational> level(static_cast<size_t>(N), Rational(1));
  for (int j = m; j >= 2; --j) {
    std::vector<Rational> next(static_cast<size_t>(N), Rational(0));
    if (j == m) {
      for (int k = 1; k <= N; ++k) {
        next[static_cast<size_t>(k) - 1] = factor(s[j - 1], k);
      }
    } else {
      Rational prefix(0);
      for (int k = 1; k <= N; ++k) {
        if (!strict) prefix += level[static_cast<size_t>(k) - 1];
        next[static_cast<size_t>(k) - 1] =
            factor(s[j - 1], k) * prefix;
        if (strict) prefix += level[static_cast<size_t>(k) - 1];
      }
    }
    level = std::move(next);
  }
  // Collapse level 2 into its prefix below each outer index.
  std::vector<Rational> g(static_cast<size_t>(N), Rational(1));
  if (m >= 2) {
    Rational prefix(0);
    for (int k = 1; k <= N; ++k) {
      if (!strict) prefix += level[static_cast<size_t>(k) - 1];
      g[static_cast<size_t>(k) - 1] = prefix;
      if (strict) prefix += level[static_cast<size_t>(k) - 1];
    }
  }
  return g;
}

// Sum_{k > N} b_k where b_{k+1} <= ratio(k) * b_k and ratio is
// nonincreasing with limit < 1: walk forward until the ratio bound drops
// below 1, then close with a geometric tail.
Rational geometric_tail(const std::function<Rational(int)>& bound,
                        const std::function<Rational(int)>& ratio, int N) {
  Rational acc(0);
  int k = N + 1;
  for (int guard = 0; guard < 4096; ++guard) {
    const Rational r = ratio(k);
    if (r < 1) {
      return acc + bound(k) / (Rational(1) - r);
    }
    acc += bound(k);
    ++k;
  }
  throw std::logic_error("tail bound did not become geometric");
}

}  // namespace

TruncationResult truncated_limit(SumKind kind, const Composition& s,
                                 const Rational& q0, int N) {
  validate_point(q0);
  if (N < 1) throw std::invalid_argument("truncation length must be >= 1");
  if (s.empty()) {
    throw std::invalid_argument("truncation requires a nonempty composition");
  }
  if (!s.all_positive()) {
    throw std::invalid_argument("truncation entries must be >= 1");
  }
  if (kind == SumKind::w_weak) {
    throw std::invalid_argument(
        "truncated_limit supports the Z and A kinds only");
  }
  const int m = s.size();
  const std::vector<Rational> g = inner_chain_sums(kind, s, q0, N);

  TruncationResult out;
  out.terms_used = N;
  Rational value(0);
  if (!is_a_kind(kind)) {
    Rational qpow(1);
    for (int k = 1; k <= N; ++k) {
      qpow *= q0;
      value += qpow / rational_pow(q_integer_at(k, q0), s[0]) *
               g[static_cast<size_t>(k) - 1];
    }
    // Every index factor is at most q0^(k_j), so chains below the outer
    // index contribute at most (q0/(1-q0))^(m-1) and the outer terms are
    // geometric with ratio q0.
    const Rational c =
        rational_pow(q0 / (Rational(1) - q0), m - 1);
    out.tail_bound =
        c * rational_pow(q0, N + 1) / (Rational(1) - q0);
  } else {
    const bool weak = (kind == SumKind::a_weak);
    Rational poch(1);
    Rational qpow(1);
    for (int k = 1; k <= N; ++k) {
      qpow *= q0;            // q0^k
      poch *= Rational(1) - qpow;
      // q0^(k(k+1)/2) built as the running product of q0^k.
      Rational tri = rational_pow(q0, k * (k + 1) / 2);
      Rational term = tri / poch *
                      rational_pow(q0, (s[0] - 1) * k) /
                      rational_pow(q_integer_at(k, q0), s[0]) *
                      g[static_cast<size_t>(k) - 1];
      const bool negate = weak ? (k % 2 == 0) : (k % 2 == 1);
      value += negate ? -term : term;
    }
    // Lower bound for the infinite products prod_{j<=k}(1 - q0^j), valid
    // for every k > N: take the exact product to K and bound the rest by
    // 1 - q0^(K+1)/(1-q0), pushing K forward until that residual is
    // positive.
    int K = N + 1;
    Rational residual =
        Rational(1) - rational_pow(q0, K + 1) / (Rational(1) - q0);
    while (residual <= 0) {
      ++K;
      residual =
          Rational(1) - rational_pow(q0, K + 1) / (Rational(1) - q0);
    }
    const Rational plower = pochhammer_one_minus_q_at(q0, K) * residual;
    // |term(k)| <= q0^(k(k+1)/2) (k+m)^(m-1) / plower: each index factor
    // is at most 1 and there are at most (k+m)^(m-1) chains below k.
    auto bound = [&](int k) -> Rational {
      return rational_pow(q0, k * (k + 1) / 2) *
             rational_pow(Rational(k + m), m - 1) / plower;
    };
    auto ratio = [&](int k) -> Rational {
      return rational_pow(q0, k + 1) *
             rational_pow(Rational(k + 1 + m) / Rational(k + m), m - 1);
    };
    out.tail_bound = geometric_tail(bound, ratio, N);
  }
  out.value = value;
  return out;
}

QZetaRoutes qzeta_routes(const Composition& s, const Rational& q0, int N) {
  validate_point(q0);
  if (N < 1) throw std::invalid_argument("truncation length must be >= 1");
  if (s.empty() || !s.all_positive()) {
    throw std::invalid_argument("series entries must be >= 1");
  }
  if (s[0] < 2) {
    throw std::invalid_argument(
        "series requires a first entry >= 2 for convergence");
  }
  QZetaRoutes routes;

  // Route 1: the defining strict series, A/W-style weights, no outer
  // factor.
  {
    const std::vector<Rational> g =
        inner_chain_sums(SumKind::a_strict, s, q0, N);
    Rational value(0);
    for (int k = 1; k <= N; ++k) {
      value += rational_pow(q0, (s[0] - 1) * k) /
               rational_pow(q_integer_at(k, q0), s[0]) *
               g[static_cast<size_t>(k) - 1];
    }
    routes.defining_series = value;
  }

  // Route 2: q0^weight times the strict Z partial sum at parameter 1/q0.
  {
    const Rational qr = Rational(1) / q0;
    const std::vector<Rational> g =
        inner_chain_sums(SumKind::z_strict, s, qr, N);
    Rational value(0);
    Rational qpow(1);
    for (int k = 1; k <= N; ++k) {
      qpow *= qr;
      value += qpow / rational_pow(q_integer_at(k, qr), s[0]) *
               g[static_cast<size_t>(k) - 1];
    }
    routes.reciprocal_parameter = rational_pow(q0, s.weight()) * value;
  }
  return routes;
}

TruncationResult qzeta_truncated(const Composition& s, const Rational& q0,
                                 int N) {
  const QZetaRoutes routes = qzeta_routes(s, q0, N);
  if (routes.defining_series != routes.reciprocal_parameter) {
    throw std::logic_error(
        "qzeta_truncated: the two computation routes disagree "
        "(internal error)");
  }
  TruncationResult out;
  out.value = routes.defining_series;
  out.terms_used = N;
  const int m = s.size();
  // |term(k)| <= q0^((s_1-1) k) k^(m-1): inner factors are at most 1 and
  // there are at most k^(m-1) strict chains below k.
  auto bound = [&](int k) -> Rational {
    return rational_pow(q0, (s[0] - 1) * k) *
           rational_pow(Rational(k), m - 1);
  };
  auto ratio = [&](int k) -> Rational {
    return rational_pow(q0, s[0] - 1) *
           rational_pow(Rational(k + 1) / Rational(k), m - 1);
  };
  out.tail_bound = geometric_tail(bound, ratio, N);
  return out;
}

}  // namespace qharmonic
