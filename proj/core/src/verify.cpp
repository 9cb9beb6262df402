#include "qharmonic/verify.hpp"

#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "qharmonic/qcombinatorics.hpp"
#include "qharmonic/word.hpp"

namespace qharmonic {

namespace {

struct IdEntry {
  IdentityId id;
  const char* tag;
};

constexpr IdEntry kIdTable[] = {
    {IdentityId::theorem1, "THEOREM1"},
    {IdentityId::cor_limit_q1, "COR_LIMIT_Q1"},
    {IdentityId::cor_limit_ninf, "COR_LIMIT_NINF"},
    {IdentityId::duality_ab, "DUALITY_AB"},
    {IdentityId::qkarl, "QKARL"},
    {IdentityId::qkarl_dual, "QKARL_DUAL"},
    {IdentityId::george, "GEORGE"},
    {IdentityId::karl, "KARL"},
    {IdentityId::an01m, "AN01M"},
    {IdentityId::lemma_qsum, "LEMMA_QSUM"},
    {IdentityId::qbinom_thm, "QBINOM_THM"},
    {IdentityId::thm2_strict_ones, "THM2_STRICT_ONES"},
    {IdentityId::cor_strict_ninf, "COR_STRICT_NINF"},
    {IdentityId::cor_strict_q1, "COR_STRICT_Q1"},
    {IdentityId::weak_strict_expansion, "WEAK_STRICT_EXPANSION"},
    {IdentityId::prodinger_pair, "PRODINGER_PAIR"},
    {IdentityId::fulas, "FULAS"},
    {IdentityId::uchimura_limit, "UCHIMURA_LIMIT"},
    {IdentityId::qzeta_relation, "QZETA_RELATION"},
};

void require_params(const std::string& tag, const Params& params,
                    std::initializer_list<const char*> keys) {
  std::string missing;
  for (const char* key : keys) {
    if (!params.has(key)) {
      if (!missing.empty()) missing += ", ";
      missing += key;
    }
  }
  if (!missing.empty()) {
    std::string all;
    for (const char* key : keys) {
      if (!all.empty()) all += ", ";
      all += key;
    }
    throw std::invalid_argument(tag + " requires params {" + all +
                                "}; missing: " + missing);
  }
}

QPoly pow_poly(const QPoly& base, int e) {
  QPoly acc = QPoly::one();
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

QPoly one_minus_qpow(int k) {
  return QPoly::one() - QPoly::power_of_q(k);
}

Report base_report(IdentityId id, Params params, Method method) {
  Report report;
  report.id = id;
  report.params = std::move(params);
  report.method = method;
  return report;
}

/// Records a fails verdict with the instance and both canonical values.
void record_mismatch(Report& report, const std::string& instance,
                     const std::string& lhs, const std::string& rhs) {
  report.verdict = Verdict::fails;
  if (!report.witness) {
    report.witness = instance + ": lhs = " + lhs + "; rhs = " + rhs;
  }
}

bool gate(Report& report, const QRatFun& lhs, const QRatFun& rhs,
          const std::string& instance) {
  if (lhs == rhs) return true;
  record_mismatch(report, instance, lhs.to_string(), rhs.to_string());
  return false;
}

bool gate(Report& report, const Rational& lhs, const Rational& rhs,
          const std::string& instance) {
  if (lhs == rhs) return true;
  record_mismatch(report, instance, to_string(lhs), to_string(rhs));
  return false;
}

bool gate(Report& report, const QPoly& lhs, const QPoly& rhs,
          const std::string& instance) {
  if (lhs == rhs) return true;
  record_mismatch(report, instance, lhs.to_string(), rhs.to_string());
  return false;
}

/// Sum over n >= k_1 >= ... >= k_m >= 1 of prod f(k_j); 1 when m == 0.
QRatFun nested_weak_ratfun(const std::function<QRatFun(int)>& f, int m,
                           int n) {
  if (m == 0) return QRatFun::one();
  if (n == 0) return QRatFun();
  std::vector<QRatFun> level(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) level[static_cast<size_t>(k) - 1] = f(k);
  for (int j = m - 1; j >= 1; --j) {
    std::vector<QRatFun> next(static_cast<size_t>(n));
    QRatFun prefix;
    for (int k = 1; k <= n; ++k) {
      prefix += level[static_cast<size_t>(k) - 1];
      next[static_cast<size_t>(k) - 1] = f(k) * prefix;
    }
    level = std::move(next);
  }
  QRatFun total;
  for (const QRatFun& v : level) total += v;
  return total;
}

Rational nested_weak_rational(const std::function<Rational(int)>& f, int m,
                              int n) {
  if (m == 0) return Rational(1);
  if (n == 0) return Rational(0);
  std::vector<Rational> level(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) level[static_cast<size_t>(k) - 1] = f(k);
  for (int j = m - 1; j >= 1; --j) {
    std::vector<Rational> next(static_cast<size_t>(n));
    Rational prefix(0);
    for (int k = 1; k <= n; ++k) {
      prefix += level[static_cast<size_t>(k) - 1];
      next[static_cast<size_t>(k) - 1] = f(k) * prefix;
    }
    level = std::move(next);
  }
  Rational total(0);
  for (const Rational& v : level) total += v;
  return total;
}

Composition tail_of(const Composition& s) {
  std::vector<int> rest(s.entries().begin() + 1, s.entries().end());
  return Composition(std::move(rest));
}

Rational abs_rational(const Rational& v) { return v < 0 ? -v : v; }

/// Deterministic draws; raw modulo keeps the stream identical across
/// platforms since mt19937_64 itself is fully specified.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(gen_() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(int max_abs_num, int max_den) {
    const int num = uniform(-max_abs_num, max_abs_num);
    const int den = uniform(1, max_den);
    return make_rational(num, den);
  }

  QPoly poly(int max_degree, int max_abs_coeff) {
    const int deg = uniform(0, max_degree);
    std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1);
    for (Rational& c : coeffs) c = Rational(uniform(-max_abs_coeff,
                                                    max_abs_coeff));
    return QPoly(std::move(coeffs));
  }

  QPoly nonzero_poly(int max_degree, int max_abs_coeff) {
    for (;;) {
      QPoly p = poly(max_degree, max_abs_coeff);
      if (!p.is_zero()) return p;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// ---------------------------------------------------------------------------
// Individual checkers
// ---------------------------------------------------------------------------

Report check_duality_ab(const std::vector<int>& a, const std::vector<int>& b,
                        int n) {
  const auto pair = dual_pair_from_blocks(a, b);
  Params params;
  params.set("a", Composition(a))
      .set("b", Composition(b))
      .set("n", n)
      .set("first", pair.first)
      .set("second", pair.second);
  Report report = base_report(IdentityId::duality_ab, std::move(params),
                              Method::symbolic);
  if (!(dual(pair.first) == pair.second)) {
    record_mismatch(report, "block pair is not dual",
                    pair.first.to_string(), pair.second.to_string());
    return report;
  }
  gate(report, eval_sum(SumKind::z_weak, pair.first, n),
       eval_sum(SumKind::a_weak, pair.second, n),
       "a=" + Composition(a).to_string() + " b=" +
           Composition(b).to_string() + " n=" + std::to_string(n));
  return report;
}

Report check_qkarl(int m, int n) {
  if (m < 0 || n < 1) {
    throw std::invalid_argument("QKARL requires m >= 0 and n >= 1");
  }
  Report report = base_report(
      IdentityId::qkarl, Params().set("m", m).set("n", n), Method::symbolic);
  QRatFun lhs;
  for (int k = 1; k <= n; ++k) {
    const int e = k * (k - 1) / 2 + m * k;  // k(k+1)/2 + (m-1)k, always >= 0
    QRatFun term(q_binomial(n, k).shifted(e),
                 pow_poly(one_minus_qpow(k), m));
    lhs += (k % 2 == 1) ? term : -term;
  }
  const QRatFun rhs = nested_weak_ratfun(
      [](int k) {
        return QRatFun(QPoly::power_of_q(k), one_minus_qpow(k));
      },
      m, n);
  gate(report, lhs, rhs, "m=" + std::to_string(m) + " n=" +
                             std::to_string(n));
  return report;
}

Report check_qkarl_dual(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("QKARL_DUAL requires m >= 1 and n >= 1");
  }
  Report report = base_report(IdentityId::qkarl_dual,
                              Params().set("m", m).set("n", n),
                              Method::symbolic);
  QRatFun lhs;
  for (int k = 1; k <= n; ++k) {
    lhs += QRatFun(QPoly::power_of_q(k), pow_poly(q_integer(k), m));
  }
  gate(report, lhs, eval_sum(SumKind::a_weak, Composition::ones(m), n),
       "m=" + std::to_string(m) + " n=" + std::to_string(n));
  return report;
}

Report check_george(int n) {
  if (n < 1) throw std::invalid_argument("GEORGE requires n >= 1");
  Report report = base_report(IdentityId::george, Params().set("n", n),
                              Method::symbolic);
  QRatFun lhs;
  QRatFun rhs;
  for (int k = 1; k <= n; ++k) {
    QRatFun term(q_binomial(n, k).shifted(k * (k + 1) / 2),
                 one_minus_qpow(k));
    lhs += (k % 2 == 1) ? term : -term;
    rhs += QRatFun(QPoly::power_of_q(k), one_minus_qpow(k));
  }
  gate(report, lhs, rhs, "n=" + std::to_string(n));
  return report;
}

Report check_karl(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("KARL requires m >= 1 and n >= 1");
  }
  Report report = base_report(
      IdentityId::karl, Params().set("m", m).set("n", n), Method::sampled);
  Rational lhs(0);
  for (int k = 1; k <= n; ++k) {
    const Rational term = Rational(binomial_int(n, k)) /
                          rational_pow(Rational(k), m);
    lhs += (k % 2 == 1) ? term : -term;
  }
  const Rational rhs = nested_weak_rational(
      [](int k) { return make_rational(1, k); }, m, n);
  gate(report, lhs, rhs, "m=" + std::to_string(m) + " n=" +
                             std::to_string(n));
  return report;
}

Report check_an01m(int m, int n) {
  if (m < 0 || n < 1) {
    throw std::invalid_argument("AN01M requires m >= 0 and n >= 1");
  }
  Report report = base_report(
      IdentityId::an01m, Params().set("m", m).set("n", n), Method::symbolic);
  std::vector<int> entries{0};
  entries.insert(entries.end(), static_cast<size_t>(m), 1);
  const QRatFun lhs = eval_sum(SumKind::a_weak, Composition(entries), n) *
                      QRatFun(pow_poly(q_integer(n), m));
  gate(report, lhs, QRatFun::one(),
       "m=" + std::to_string(m) + " n=" + std::to_string(n));
  return report;
}

Report check_lemma_qsum(int k, int n) {
  if (k < 1 || n < k) {
    throw std::invalid_argument("LEMMA_QSUM requires 1 <= k <= n");
  }
  Report report = base_report(IdentityId::lemma_qsum,
                              Params().set("k", k).set("n", n),
                              Method::symbolic);
  QPoly lhs;
  for (int r = k; r <= n; ++r) {
    lhs += q_binomial(r - 1, k - 1).shifted(r);
  }
  gate(report, lhs, q_binomial(n, k).shifted(k),
       "k=" + std::to_string(k) + " n=" + std::to_string(n));
  return report;
}

Report check_qbinom_thm(int n, const std::vector<std::pair<Rational, Rational>>& points) {
  if (n < 0) throw std::invalid_argument("QBINOM_THM requires n >= 0");
  Params params;
  params.set("n", n).set("points", static_cast<int>(points.size()));
  Report report = base_report(IdentityId::qbinom_thm, std::move(params),
                              Method::sampled);
  for (const auto& [x, y] : points) {
    const QPoly lhs = q_shifted_power(x, y, n);
    QPoly rhs;
    for (int m = 0; m <= n; ++m) {
      const Rational scale =
          rational_pow(x, n - m) * rational_pow(y, m);
      rhs += (q_binomial(n, m) * scale).shifted(m * (m - 1) / 2);
    }
    if (!gate(report, lhs, rhs,
              "n=" + std::to_string(n) + " x=" + to_string(x) + " y=" +
                  to_string(y))) {
      return report;
    }
  }
  return report;
}

Report check_thm2(int m, int n) {
  if (m < 0 || n < 0) {
    throw std::invalid_argument("THM2_STRICT_ONES requires m, n >= 0");
  }
  Report report = base_report(IdentityId::thm2_strict_ones,
                              Params().set("m", m).set("n", n),
                              Method::symbolic);
  QRatFun lhs = eval_sum(SumKind::z_strict, Composition::ones(m), n);
  if (m % 2 == 1) lhs = -lhs;
  gate(report, lhs, eval_sum(SumKind::a_strict, Composition::ones(m), n),
       "m=" + std::to_string(m) + " n=" + std::to_string(n));
  return report;
}

Report check_cor_strict_q1(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("COR_STRICT_Q1 requires m >= 1 and n >= 1");
  }
  Report report = base_report(IdentityId::cor_strict_q1,
                              Params().set("m", m).set("n", n),
                              Method::sampled);
  Rational lhs = eval_q1(SumKind::z_strict, Composition::ones(m), n);
  if (m % 2 == 1) lhs = -lhs;
  gate(report, lhs, eval_q1(SumKind::a_strict, Composition::ones(m), n),
       "m=" + std::to_string(m) + " n=" + std::to_string(n));
  return report;
}

Report check_cor_strict_ninf(int m, const Rational& q0, int N) {
  if (m < 1) throw std::invalid_argument("COR_STRICT_NINF requires m >= 1");
  Report report = base_report(
      IdentityId::cor_strict_ninf,
      Params().set("m", m).set("q", q0).set("N", N), Method::truncated);
  const TruncationResult z =
      truncated_limit(SumKind::z_strict, Composition::ones(m), q0, N);
  const TruncationResult a =
      truncated_limit(SumKind::a_strict, Composition::ones(m), q0, N);
  Rational lhs = z.value;
  if (m % 2 == 1) lhs = -lhs;
  report.residual = abs_rational(lhs - a.value);
  report.tail_bound = z.tail_bound + a.tail_bound;
  report.verdict = (*report.residual <= *report.tail_bound)
                       ? Verdict::holds
                       : Verdict::inconclusive;
  return report;
}

Report check_cor_limit_q1(const Composition& s, int n) {
  const Composition ds = dual(s);
  const auto blocks = blocks_from_composition(s);
  Params params;
  params.set("s", s)
      .set("n", n)
      .set("dual", ds)
      .set("a", Composition(blocks.first))
      .set("b", Composition(blocks.second));
  Report report = base_report(IdentityId::cor_limit_q1, std::move(params),
                              Method::sampled);
  gate(report, eval_q1(SumKind::z_weak, s, n),
       eval_q1(SumKind::a_weak, ds, n),
       "s=" + s.to_string() + " n=" + std::to_string(n));
  return report;
}

Report check_cor_limit_ninf(const Composition& s, const Rational& q0,
                            int N) {
  const Composition ds = dual(s);
  const auto blocks = blocks_from_composition(s);
  Params params;
  params.set("s", s)
      .set("q", q0)
      .set("N", N)
      .set("dual", ds)
      .set("a", Composition(blocks.first))
      .set("b", Composition(blocks.second));
  Report report = base_report(IdentityId::cor_limit_ninf, std::move(params),
                              Method::truncated);
  const TruncationResult z = truncated_limit(SumKind::z_weak, s, q0, N);
  const TruncationResult a = truncated_limit(SumKind::a_weak, ds, q0, N);
  report.residual = abs_rational(z.value - a.value);
  report.tail_bound = z.tail_bound + a.tail_bound;
  report.verdict = (*report.residual <= *report.tail_bound)
                       ? Verdict::holds
                       : Verdict::inconclusive;
  return report;
}

namespace {

/// Sum over n >= k_1 > ... > k_g >= 1 of prod_j f(j, k_j), where j is the
/// 1-based position (1 = outermost index); 1 when g == 0.
QRatFun strict_chain_ratfun(const std::function<QRatFun(int, int)>& f, int g,
                            int n) {
  if (g == 0) return QRatFun::one();
  if (n <= 0) return QRatFun();
  std::vector<QRatFun> level(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) level[static_cast<size_t>(k) - 1] = f(g, k);
  for (int j = g - 1; j >= 1; --j) {
    std::vector<QRatFun> next(static_cast<size_t>(n));
    QRatFun prefix;  // sum of the inner level over k' < k
    for (int k = 1; k <= n; ++k) {
      next[static_cast<size_t>(k) - 1] = f(j, k) * prefix;
      prefix += level[static_cast<size_t>(k) - 1];
    }
    level = std::move(next);
  }
  QRatFun total;
  for (const QRatFun& v : level) total += v;
  return total;
}

}  // namespace

Report check_weak_strict_expansion(const Composition& s, int n) {
  if (s.empty() || !s.all_positive() || n < 0) {
    throw std::invalid_argument(
        "WEAK_STRICT_EXPANSION requires nonempty positive s and n >= 0");
  }
  const int m = static_cast<int>(s.size());
  const QRatFun lhs = eval_sum(SumKind::z_weak, s, n);

  // Exact decomposition of the weak chain by the pattern of index
  // coincidences: each subset of the m-1 adjacent pairs that are forced
  // equal yields a strict chain whose run of r merged indices carries the
  // literal collision factor q^(r k)/[k]^sigma.  This must always hold; a
  // mismatch means the evaluators themselves disagree.
  QRatFun collision_corrected;
  for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<std::pair<int, int>> runs;  // (r, sigma) outermost first
    int r = 1;
    int sigma = s[0];
    for (int i = 1; i < m; ++i) {
      if (mask & (1u << (i - 1))) {  // index i-1 and i coincide
        ++r;
        sigma += s[static_cast<size_t>(i)];
      } else {
        runs.emplace_back(r, sigma);
        r = 1;
        sigma = s[static_cast<size_t>(i)];
      }
    }
    runs.emplace_back(r, sigma);
    collision_corrected += strict_chain_ratfun(
        [&](int j, int k) -> QRatFun {
          const auto& [rj, sj] = runs[static_cast<size_t>(j) - 1];
          return QRatFun(QPoly::power_of_q(rj * k),
                         pow_poly(q_integer(k), sj));
        },
        static_cast<int>(runs.size()), n);
  }
  if (!(lhs == collision_corrected)) {
    throw std::logic_error(
        "internal evaluator disagreement in the collision-corrected "
        "decomposition at s=" + s.to_string() + " n=" + std::to_string(n));
  }

  // The plain single-sum expansion replaces every collision factor
  // q^(r k)/[k]^sigma by q^k/[k]^sigma, so for length >= 2 and n >= 1 the
  // two sides differ by (1-q)-weighted lower-weight terms; the verdict
  // records that honestly, with the witness carrying both canonical forms.
  Report report = base_report(
      IdentityId::weak_strict_expansion,
      Params().set("s", s).set("n", n).set("corrected_decomposition", "holds"),
      Method::symbolic);
  QRatFun rhs;
  for (const Composition& t : coarsenings(s)) {
    rhs += eval_sum(SumKind::z_strict, t, n);
  }
  gate(report, lhs, rhs, "s=" + s.to_string() + " n=" + std::to_string(n));
  return report;
}

Report check_prodinger_instantiation(const Composition& s, int n) {
  Params params;
  params.set("s", s).set("n", n).set("dual", dual(s));
  Report report = base_report(IdentityId::prodinger_pair, std::move(params),
                              Method::symbolic);
  const InversePairSequences seqs = theorem1_sequences(s, n);
  const std::vector<QRatFun> forward = prodinger_forward(seqs.alpha, n);
  for (int j = 0; j <= n; ++j) {
    if (!gate(report, forward[static_cast<size_t>(j)],
              seqs.beta[static_cast<size_t>(j)],
              "s=" + s.to_string() + " forward mismatch at j=" +
                  std::to_string(j))) {
      return report;
    }
  }
  const Report inner = check_prodinger_equivalence(seqs.alpha, n);
  if (inner.verdict != Verdict::holds) {
    report.verdict = inner.verdict;
    report.witness = inner.witness;
  }
  return report;
}

Report check_prodinger_campaign(std::uint64_t seed, int trials, int max_n) {
  if (trials < 1 || max_n < 1) {
    throw std::invalid_argument(
        "PRODINGER_PAIR campaign requires trials >= 1 and max_n >= 1");
  }
  Params params;
  params.set("trials", trials).set("max_n", max_n);
  Report report = base_report(IdentityId::prodinger_pair, std::move(params),
                              Method::symbolic);
  report.seed = seed;
  SeededRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = rng.uniform(1, max_n);
    std::vector<QRatFun> alpha(static_cast<size_t>(n) + 1);
    for (QRatFun& a : alpha) {
      a = QRatFun(rng.poly(3, 9), rng.nonzero_poly(2, 9));
    }
    const Report inner = check_prodinger_equivalence(alpha, n);
    if (inner.verdict != Verdict::holds) {
      report.verdict = inner.verdict;
      report.witness = "trial " + std::to_string(t) + ": " +
                       inner.witness.value_or("mismatch");
      return report;
    }
  }
  return report;
}

Report check_fulas_campaign(std::uint64_t seed, int trials) {
  if (trials < 1) {
    throw std::invalid_argument("FULAS campaign requires trials >= 1");
  }
  Params params;
  params.set("trials", trials);
  Report report = base_report(IdentityId::fulas, std::move(params),
                              Method::sampled);
  report.seed = seed;
  SeededRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = 0;
    int m = 0;
    Rational a, b, c, z, q0;
    // Redraw until the point avoids every vanishing factor of the
    // identity's preconditions.
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) {
        throw std::logic_error("could not draw a valid sample point");
      }
      n = rng.uniform(1, 5);
      m = rng.uniform(1, 5);
      a = rng.rational(99, 99);
      b = rng.rational(99, 99);
      c = rng.rational(99, 99);
      z = rng.rational(99, 99);
      const int den = rng.uniform(2, 99);
      q0 = make_rational(rng.uniform(1, den - 1), den);
      if (c == 0 || a * z - b * c == 0) continue;
      bool pole = false;
      for (int k = 1; k <= n && !pole; ++k) {
        if (c - z * rational_pow(q0, k) == 0) pole = true;
      }
      if (!pole) break;
    }
    const FulasSides sides = fulas_sides(n, m, a, b, c, z, q0);
    if (sides.lhs != sides.rhs) {
      record_mismatch(report,
                      "trial " + std::to_string(t) + ": n=" +
                          std::to_string(n) + " m=" + std::to_string(m) +
                          " a=" + to_string(a) + " b=" + to_string(b) +
                          " c=" + to_string(c) + " z=" + to_string(z) +
                          " q=" + to_string(q0),
                      to_string(sides.lhs), to_string(sides.rhs));
      return report;
    }
  }
  return report;
}

Report check_uchimura(const Rational& q0, int N) {
  if (!(q0 > 0 && q0 < 1) || N < 1) {
    throw std::invalid_argument(
        "UCHIMURA_LIMIT requires 0 < q < 1 and N >= 1");
  }
  Report report = base_report(IdentityId::uchimura_limit,
                              Params().set("q", q0).set("N", N),
                              Method::truncated);
  Rational lhs(0);
  Rational rhs(0);
  Rational poch(1);  // prod_{j<=k} (1 - q0^j)
  Rational qpow(1);  // q0^k
  for (int k = 1; k <= N; ++k) {
    qpow *= q0;
    const Rational poch_prev = poch;
    poch *= Rational(1) - qpow;
    const Rational term =
        rational_pow(q0, k * (k + 1) / 2) /
        (poch_prev * (Rational(1) - qpow) * (Rational(1) - qpow));
    lhs += (k % 2 == 1) ? term : -term;
    rhs += qpow / (Rational(1) - qpow);
  }
  // The displayed sides are the unit-argument series sides scaled by
  // 1/(1-q); cross-check the literal loops against that independent
  // computation and inherit its tail bounds (scaled the same way).
  const Composition one = Composition::ones(1);
  const TruncationResult a = truncated_limit(SumKind::a_weak, one, q0, N);
  const TruncationResult z = truncated_limit(SumKind::z_weak, one, q0, N);
  const Rational scale = Rational(1) - q0;
  if (lhs * scale != a.value || rhs * scale != z.value) {
    throw std::logic_error(
        "internal route disagreement in the truncated series");
  }
  report.residual = abs_rational(lhs - rhs);
  report.tail_bound = (a.tail_bound + z.tail_bound) / scale;
  report.verdict = (*report.residual <= *report.tail_bound)
                       ? Verdict::holds
                       : Verdict::inconclusive;
  return report;
}

Report check_qzeta(const Composition& s, const Rational& q0, int N) {
  Report report = base_report(
      IdentityId::qzeta_relation,
      Params().set("s", s).set("q", q0).set("N", N), Method::sampled);
  for (int len = 1; len <= N; ++len) {
    const QZetaRoutes routes = qzeta_routes(s, q0, len);
    if (routes.defining_series != routes.reciprocal_parameter) {
      record_mismatch(report,
                      "s=" + s.to_string() + " q=" + to_string(q0) +
                          " N=" + std::to_string(len),
                      to_string(routes.defining_series),
                      to_string(routes.reciprocal_parameter));
      return report;
    }
  }
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tags and small types
// ---------------------------------------------------------------------------

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const IdEntry& e : kIdTable) out.push_back(e.id);
  return out;
}

std::string identity_tag(IdentityId id) {
  for (const IdEntry& e : kIdTable) {
    if (e.id == id) return e.tag;
  }
  throw std::logic_error("unknown identity id");
}

std::optional<IdentityId> parse_identity_tag(const std::string& tag) {
  for (const IdEntry& e : kIdTable) {
    if (tag == e.tag) return e.id;
  }
  return std::nullopt;
}

std::string method_tag(Method method) {
  switch (method) {
    case Method::symbolic: return "symbolic";
    case Method::sampled: return "sampled";
    case Method::truncated: return "truncated";
  }
  throw std::logic_error("unknown method");
}

std::string verdict_tag(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  throw std::logic_error("unknown verdict");
}

Params& Params::set(const std::string& key, const std::string& value) {
  entries_[key] = value;
  return *this;
}
Params& Params::set(const std::string& key, int value) {
  return set(key, std::to_string(value));
}
Params& Params::set(const std::string& key, std::uint64_t value) {
  return set(key, std::to_string(value));
}
Params& Params::set(const std::string& key, const Rational& value) {
  return set(key, to_string(value));
}
Params& Params::set(const std::string& key, const Composition& value) {
  return set(key, value.to_string());
}

bool Params::has(const std::string& key) const {
  return entries_.count(key) > 0;
}

const std::string& Params::raw(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    throw std::invalid_argument("missing parameter '" + key + "'");
  }
  return it->second;
}

int Params::get_int(const std::string& key) const {
  const std::string& text = raw(key);
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter '" + key +
                                "' is not an integer: '" + text + "'");
  }
}

std::uint64_t Params::get_u64(const std::string& key) const {
  const std::string& text = raw(key);
  try {
    size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<std::uint64_t>(value);
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter '" + key +
                                "' is not a non-negative integer: '" + text +
                                "'");
  }
}

Rational Params::get_rational(const std::string& key) const {
  try {
    return parse_rational(raw(key));
  } catch (const std::invalid_argument& e) {
    if (!has(key)) throw;
    throw std::invalid_argument("parameter '" + key + "': " + e.what());
  }
}

Composition Params::get_composition(const std::string& key) const {
  try {
    return parse_composition(raw(key));
  } catch (const std::invalid_argument& e) {
    if (!has(key)) throw;
    throw std::invalid_argument("parameter '" + key + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json report_json(const Report& report) {
  nlohmann::ordered_json j;
  j["id"] = identity_tag(report.id);
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params.entries()) {
    j["params"][key] = value;
  }
  j["method"] = method_tag(report.method);
  j["verdict"] = verdict_tag(report.verdict);
  if (report.witness) j["witness"] = *report.witness;
  if (report.seed) j["seed"] = *report.seed;
  if (report.residual) j["residual"] = to_string(*report.residual);
  if (report.tail_bound) j["tail_bound"] = to_string(*report.tail_bound);
  return j;
}

}  // namespace

std::string report_to_json(const Report& report) {
  return report_json(report).dump(2);
}

std::string reports_to_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Report& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

bool all_hold(const std::vector<Report>& reports) {
  for (const Report& r : reports) {
    if (r.verdict != Verdict::holds) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Checkers with public signatures
// ---------------------------------------------------------------------------

Report check_theorem1(const Composition& s, int n) {
  const Composition ds = dual(s);
  Params params;
  params.set("s", s).set("n", n).set("dual", ds);
  Report report = base_report(IdentityId::theorem1, std::move(params),
                              Method::symbolic);
  const std::string instance =
      "s=" + s.to_string() + " n=" + std::to_string(n);
  if (gate(report, eval_sum(SumKind::z_weak, s, n),
           eval_sum(SumKind::a_weak, ds, n), instance)) {
    gate(report, eval_sum(SumKind::a_weak, s, n),
         eval_sum(SumKind::z_weak, ds, n), instance + " (reflected)");
  }
  return report;
}

Report probe_theorem1_undualized(const Composition& s, int n) {
  Params params;
  params.set("s", s).set("n", n).set("probe", "undualized");
  Report report = base_report(IdentityId::theorem1, std::move(params),
                              Method::symbolic);
  gate(report, eval_sum(SumKind::z_weak, s, n),
       eval_sum(SumKind::a_weak, s, n),
       "s=" + s.to_string() + " n=" + std::to_string(n) +
           " (argument deliberately not dualized)");
  return report;
}

Report probe_limit_undualized(const Composition& s, const Rational& q0,
                              int N) {
  Params params;
  params.set("s", s).set("q", q0).set("N", N).set("probe", "undualized");
  Report report = base_report(IdentityId::cor_limit_ninf, std::move(params),
                              Method::truncated);
  const TruncationResult z = truncated_limit(SumKind::z_weak, s, q0, N);
  const TruncationResult a = truncated_limit(SumKind::a_weak, s, q0, N);
  report.residual = abs_rational(z.value - a.value);
  report.tail_bound = z.tail_bound + a.tail_bound;
  report.verdict = (*report.residual <= *report.tail_bound)
                       ? Verdict::holds
                       : Verdict::inconclusive;
  return report;
}

FulasSides fulas_sides(int n, int m, const Rational& a, const Rational& b,
                       const Rational& c, const Rational& z,
                       const Rational& q0) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("the identity requires n >= 1 and m >= 1");
  }
  if (q0 == 0) throw std::domain_error("q vanishes");
  if (c == 0) throw std::domain_error("c vanishes");
  if (a * z - b * c == 0) throw std::domain_error("(az - bc) vanishes");
  const Rational poch = pochhammer_one_minus_q_at(q0, n);
  if (poch == 0) throw std::domain_error("(1-q)_q^n vanishes");
  std::vector<Rational> cz(static_cast<size_t>(n) + 1);  // c - z q0^k
  for (int k = 1; k <= n; ++k) {
    cz[static_cast<size_t>(k)] = c - z * rational_pow(q0, k);
    if (cz[static_cast<size_t>(k)] == 0) {
      throw std::domain_error("(c - z q^k) vanishes at k=" +
                              std::to_string(k));
    }
  }
  FulasSides sides;
  sides.lhs = nested_weak_rational(
      [&](int k) -> Rational {
        return (a - b * rational_pow(q0, k)) / cz[static_cast<size_t>(k)];
      },
      m, n);
  Rational prefactor(1);
  for (int k = 1; k <= n; ++k) prefactor *= cz[static_cast<size_t>(k)];
  prefactor /= poch * rational_pow(a * z - b * c, n - 1);
  Rational sum(0);
  for (int k = 1; k <= n; ++k) {
    const Rational qk = rational_pow(q0, k);
    Rational term = q_binomial_at(n, k, q0) *
                    rational_pow(q0, static_cast<long>(k) * (k + 1) / 2 -
                                         static_cast<long>(n) * k) *
                    (Rational(1) - qk) *
                    rational_pow(a - b * qk, m + n - 1) /
                    rational_pow(cz[static_cast<size_t>(k)], m + 1);
    sum += (k % 2 == 1) ? term : -term;
  }
  sides.rhs = prefactor * sum;
  return sides;
}

Report check_fulas(int n, int m, const Rational& a, const Rational& b,
                   const Rational& c, const Rational& z,
                   const Rational& q0) {
  Params params;
  params.set("n", n)
      .set("m", m)
      .set("a", a)
      .set("b", b)
      .set("c", c)
      .set("z", z)
      .set("q", q0);
  Report report =
      base_report(IdentityId::fulas, std::move(params), Method::sampled);
  const FulasSides sides = fulas_sides(n, m, a, b, c, z, q0);
  gate(report, sides.lhs, sides.rhs,
       "n=" + std::to_string(n) + " m=" + std::to_string(m) + " q=" +
           to_string(q0));
  return report;
}

std::vector<QRatFun> prodinger_forward(const std::vector<QRatFun>& alpha,
                                       int n) {
  if (n < 0 || alpha.size() != static_cast<size_t>(n) + 1) {
    throw std::invalid_argument(
        "sequence length must be n + 1 (indexed 0..n)");
  }
  std::vector<QRatFun> beta(static_cast<size_t>(n) + 1);
  QRatFun previous;  // the j-1 partial sum; 0 before j = 0
  for (int j = 0; j <= n; ++j) {
    QRatFun current;
    for (int k = 0; k <= j; ++k) {
      QRatFun term = QRatFun(q_binomial(j, k).shifted(k * (k - 1) / 2)) *
                     alpha[static_cast<size_t>(k)];
      current += (k % 2 == 0) ? term : -term;
    }
    beta[static_cast<size_t>(j)] = current - previous;
    previous = current;
  }
  return beta;
}

Report check_prodinger_equivalence(const std::vector<QRatFun>& alpha,
                                   int n) {
  Params params;
  params.set("n", n);
  Report report = base_report(IdentityId::prodinger_pair, std::move(params),
                              Method::symbolic);
  const std::vector<QRatFun> beta = prodinger_forward(alpha, n);
  for (int j = 0; j <= n; ++j) {
    QRatFun lhs;
    QRatFun rhs;
    for (int k = 0; k <= j; ++k) {
      lhs += QRatFun::power_of_q(-k) * alpha[static_cast<size_t>(k)];
      QRatFun term = QRatFun::power_of_q(k * (k - 1) / 2 - k * j) *
                     QRatFun(q_binomial(j, k)) *
                     beta[static_cast<size_t>(k)];
      rhs += (k % 2 == 0) ? term : -term;
    }
    if (!gate(report, lhs, rhs, "inverse relation at j=" +
                                    std::to_string(j))) {
      return report;
    }
  }
  return report;
}

InversePairSequences theorem1_sequences(const Composition& s, int n) {
  if (s.empty() || !s.all_positive() || n < 0) {
    throw std::invalid_argument(
        "sequences require a nonempty positive composition and n >= 0");
  }
  const Composition rest = tail_of(s);
  const Composition ds = dual(s);
  InversePairSequences seqs;
  seqs.alpha.resize(static_cast<size_t>(n) + 1);
  seqs.beta.resize(static_cast<size_t>(n) + 1);
  QRatFun z_prev;  // the (k-1)-th value of the dual-argument weak sum
  for (int k = 1; k <= n; ++k) {
    seqs.alpha[static_cast<size_t>(k)] =
        -(QRatFun(QPoly::power_of_q(s[0] * k), pow_poly(q_integer(k), s[0])) *
          eval_sum(SumKind::w_weak, rest, k));
    const QRatFun z_here = eval_sum(SumKind::z_weak, ds, k);
    seqs.beta[static_cast<size_t>(k)] = z_here - z_prev;
    z_prev = z_here;
  }
  return seqs;
}

Report check_identity(IdentityId id, const Params& params) {
  const std::string tag = identity_tag(id);
  switch (id) {
    case IdentityId::theorem1: {
      require_params(tag, params, {"s", "n"});
      return check_theorem1(params.get_composition("s"),
                            params.get_int("n"));
    }
    case IdentityId::cor_limit_q1: {
      require_params(tag, params, {"s", "n"});
      return check_cor_limit_q1(params.get_composition("s"),
                                params.get_int("n"));
    }
    case IdentityId::cor_limit_ninf: {
      require_params(tag, params, {"s", "q", "N"});
      return check_cor_limit_ninf(params.get_composition("s"),
                                  params.get_rational("q"),
                                  params.get_int("N"));
    }
    case IdentityId::duality_ab: {
      require_params(tag, params, {"a", "b", "n"});
      return check_duality_ab(params.get_composition("a").entries(),
                              params.get_composition("b").entries(),
                              params.get_int("n"));
    }
    case IdentityId::qkarl: {
      require_params(tag, params, {"m", "n"});
      return check_qkarl(params.get_int("m"), params.get_int("n"));
    }
    case IdentityId::qkarl_dual: {
      require_params(tag, params, {"m", "n"});
      return check_qkarl_dual(params.get_int("m"), params.get_int("n"));
    }
    case IdentityId::george: {
      require_params(tag, params, {"n"});
      return check_george(params.get_int("n"));
    }
    case IdentityId::karl: {
      require_params(tag, params, {"m", "n"});
      return check_karl(params.get_int("m"), params.get_int("n"));
    }
    case IdentityId::an01m: {
      require_params(tag, params, {"m", "n"});
      return check_an01m(params.get_int("m"), params.get_int("n"));
    }
    case IdentityId::lemma_qsum: {
      require_params(tag, params, {"k", "n"});
      return check_lemma_qsum(params.get_int("k"), params.get_int("n"));
    }
    case IdentityId::qbinom_thm: {
      require_params(tag, params, {"n"});
      std::vector<std::pair<Rational, Rational>> points;
      if (params.has("x") || params.has("y")) {
        require_params(tag, params, {"n", "x", "y"});
        points.emplace_back(params.get_rational("x"),
                            params.get_rational("y"));
      } else {
        points = {{Rational(1), Rational(1)},
                  {Rational(2), Rational(1)},
                  {Rational(1), Rational(-1)},
                  {make_rational(1, 2), make_rational(1, 3)},
                  {Rational(3), Rational(-2)},
                  {Rational(0), Rational(1)},
                  {Rational(1), Rational(0)}};
      }
      return check_qbinom_thm(params.get_int("n"), points);
    }
    case IdentityId::thm2_strict_ones: {
      require_params(tag, params, {"m", "n"});
      return check_thm2(params.get_int("m"), params.get_int("n"));
    }
    case IdentityId::cor_strict_ninf: {
      require_params(tag, params, {"m", "q", "N"});
      return check_cor_strict_ninf(params.get_int("m"),
                                   params.get_rational("q"),
                                   params.get_int("N"));
    }
    case IdentityId::cor_strict_q1: {
      require_params(tag, params, {"m", "n"});
      return check_cor_strict_q1(params.get_int("m"), params.get_int("n"));
    }
    case IdentityId::weak_strict_expansion: {
      require_params(tag, params, {"s", "n"});
      return check_weak_strict_expansion(params.get_composition("s"),
                                         params.get_int("n"));
    }
    case IdentityId::prodinger_pair: {
      if (params.has("s")) {
        require_params(tag, params, {"s", "n"});
        return check_prodinger_instantiation(params.get_composition("s"),
                                             params.get_int("n"));
      }
      require_params(tag, params, {"seed", "trials", "max_n"});
      return check_prodinger_campaign(params.get_u64("seed"),
                                      params.get_int("trials"),
                                      params.get_int("max_n"));
    }
    case IdentityId::fulas: {
      if (params.has("a") || params.has("b") || params.has("c") ||
          params.has("z")) {
        require_params(tag, params, {"n", "m", "a", "b", "c", "z", "q"});
        return check_fulas(params.get_int("n"), params.get_int("m"),
                           params.get_rational("a"), params.get_rational("b"),
                           params.get_rational("c"), params.get_rational("z"),
                           params.get_rational("q"));
      }
      require_params(tag, params, {"seed", "trials"});
      return check_fulas_campaign(params.get_u64("seed"),
                                  params.get_int("trials"));
    }
    case IdentityId::uchimura_limit: {
      require_params(tag, params, {"q", "N"});
      return check_uchimura(params.get_rational("q"), params.get_int("N"));
    }
    case IdentityId::qzeta_relation: {
      require_params(tag, params, {"s", "q", "N"});
      return check_qzeta(params.get_composition("s"),
                         params.get_rational("q"), params.get_int("N"));
    }
  }
  throw std::logic_error("unknown identity id");
}

}  // namespace qharmonic
