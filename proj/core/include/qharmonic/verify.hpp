#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qharmonic/composition.hpp"
#include "qharmonic/limits.hpp"
#include "qharmonic/qratfun.hpp"
#include "qharmonic/sums.hpp"

namespace qharmonic {

/// The checkable identity families.  Tags are stable text identifiers used
/// by the CLI and report files.
enum class IdentityId {
  theorem1,               // Z_n[s] = A_n[dual(s)], plus the reflected form
  cor_limit_q1,           // the same at q = 1 (harmonic-sum duality)
  cor_limit_ninf,         // the same as n -> infinity (series truncation)
  duality_ab,             // block-parameterized statement over (a, b)
  qkarl,                  // signed q-binomial sum = nested unit-exponent sum
  qkarl_dual,             // single power sum = A-type nested unit sum
  george,                 // the m = 1 signed q-binomial identity
  karl,                   // the q = 1 classical binomial/harmonic identity
  an01m,                  // A_n[0,{1}^m] * [n]^m = 1
  lemma_qsum,             // sum of q^r [r-1 choose k-1] = q^k [n choose k]
  qbinom_thm,             // (x+y)_q^n expansion with q-binomial kernel
  thm2_strict_ones,       // (-1)^m Z>_n[{1}^m] = A>_n[{1}^m]
  cor_strict_ninf,        // strict unit identity as n -> infinity
  cor_strict_q1,          // strict unit identity at q = 1
  weak_strict_expansion,  // Z_n[s] = sum of Z>_n over coarsenings(s)
  prodinger_pair,         // signed q-binomial inverse-pair equivalence
  fulas,                  // four-parameter rational generalization
  uchimura_limit,         // the infinite-series unit identity, truncated
  qzeta_relation,         // zeta-series route agreement via q -> 1/q
};

/// All ids in declaration order.
std::vector<IdentityId> all_identities();

/// Stable uppercase tag, e.g. "THEOREM1".
std::string identity_tag(IdentityId id);
std::optional<IdentityId> parse_identity_tag(const std::string& tag);

enum class Method { symbolic, sampled, truncated };
enum class Verdict { holds, fails, inconclusive };
std::string method_tag(Method method);
std::string verdict_tag(Verdict verdict);

/// Ordered text key/value record naming the instance a check ran on.
/// Typed accessors throw std::invalid_argument naming the key on a missing
/// or malformed entry.
class Params {
 public:
  Params() = default;

  Params& set(const std::string& key, const std::string& value);
  Params& set(const std::string& key, int value);
  Params& set(const std::string& key, std::uint64_t value);
  Params& set(const std::string& key, const Rational& value);
  Params& set(const std::string& key, const Composition& value);

  bool has(const std::string& key) const;
  const std::string& raw(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  Rational get_rational(const std::string& key) const;
  Composition get_composition(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string> entries_;
};

/// Outcome of one identity check.  A fails verdict always carries a
/// witness (the offending instance and both values); truncated checks
/// carry the residual and the combined tail bound; sampled campaigns
/// record their seed.
struct Report {
  IdentityId id = IdentityId::theorem1;
  Params params;
  Method method = Method::symbolic;
  Verdict verdict = Verdict::holds;
  std::optional<std::string> witness;
  std::optional<std::uint64_t> seed;
  std::optional<Rational> residual;
  std::optional<Rational> tail_bound;
};

/// JSON object with fields id, params, method, verdict and, when present,
/// witness, seed, residual, tail_bound.
std::string report_to_json(const Report& report);
/// JSON array of the objects above.
std::string reports_to_json(const std::vector<Report>& reports);

bool all_hold(const std::vector<Report>& reports);

/// The main duality check: Z_n[s] = A_n[dual(s)] as canonical rational
/// functions, cross-checked with the reflected form A_n[s] = Z_n[dual(s)].
/// Requires s nonempty with entries >= 1 and n >= 1.
Report check_theorem1(const Composition& s, int n);

/// Deliberately compares Z_n[s] against A_n[s] (the argument NOT
/// dualized).  False for most s, so tests use it to confirm the fails /
/// inconclusive paths stay honest.
Report probe_theorem1_undualized(const Composition& s, int n);
Report probe_limit_undualized(const Composition& s, const Rational& q0,
                              int N);

/// Dispatch by id.  Required parameter keys per id (missing keys raise
/// std::invalid_argument listing them):
///   THEOREM1, COR_LIMIT_Q1, WEAK_STRICT_EXPANSION: s, n
///   DUALITY_AB: a, b, n          COR_LIMIT_NINF, QZETA_RELATION: s, q, N
///   QKARL, KARL, QKARL_DUAL, AN01M, COR_STRICT_Q1: m, n
///   GEORGE: n                    LEMMA_QSUM: k, n
///   QBINOM_THM: n (optional x, y; default: a fixed list of seven points)
///   THM2_STRICT_ONES: m, n       COR_STRICT_NINF: m, q, N
///   UCHIMURA_LIMIT: q, N
///   PRODINGER_PAIR: s, n (instantiation)  or  seed, trials, max_n
///   FULAS: n, m, a, b, c, z, q (one point)  or  seed, trials
Report check_identity(IdentityId id, const Params& params);

/// Both sides of the four-parameter identity at an exact rational point.
/// Throws std::domain_error naming the vanishing factor when the point is
/// invalid (q0 = 0, c = 0, az - bc = 0, or c - z q0^k = 0 for some
/// k <= n).
struct FulasSides {
  Rational lhs;
  Rational rhs;
};
FulasSides fulas_sides(int n, int m, const Rational& a, const Rational& b,
                       const Rational& c, const Rational& z,
                       const Rational& q0);
Report check_fulas(int n, int m, const Rational& a, const Rational& b,
                   const Rational& c, const Rational& z, const Rational& q0);

/// Given alpha_0..alpha_n, returns the unique beta_0..beta_n for which the
/// first inverse-pair relation
///   sum_{k<=j} beta_k = sum_{k<=j} (-1)^k q^(k(k-1)/2) [j choose k]_q alpha_k
/// holds for every j = 0..n (recovered by differencing consecutive j).
/// Throws std::invalid_argument unless alpha.size() == n + 1.
std::vector<QRatFun> prodinger_forward(const std::vector<QRatFun>& alpha,
                                       int n);

/// Computes beta via prodinger_forward, then verifies the second relation
///   sum_{k<=j} q^(-k) alpha_k
///     = sum_{k<=j} (-1)^k q^(k(k-1)/2 - kj) [j choose k]_q beta_k
/// at every j = 0..n as canonical rational-function equality.
Report check_prodinger_equivalence(const std::vector<QRatFun>& alpha, int n);

/// The duality instantiation of the inverse pair: alpha_k built from s
/// (signed outer factor of the A-type sum at outer index k), beta_k the
/// outer-index-k slice of Z[dual(s)], alpha_0 = beta_0 = 0.  The first
/// relation then encodes A_j[s] = Z_j[dual(s)] at every j.
struct InversePairSequences {
  std::vector<QRatFun> alpha;
  std::vector<QRatFun> beta;
};
InversePairSequences theorem1_sequences(const Composition& s, int n);

/// Deterministic parameter grids for sweep().  q0 and truncation_terms
/// feed the series-based ids; trials and seed feed the sampled campaigns;
/// max_length == 0 means no length cap.
struct SweepOptions {
  int max_weight = 4;
  int max_n = 5;
  int max_m = 4;
  int max_length = 0;
  int trials = 25;
  int truncation_terms = 20;
  Rational q0 = Rational(1, 2);
  std::uint64_t seed = 20260822;
  int threads = 1;
};

/// Runs check_identity over the id's grid.  Report order follows the
/// deterministic grid enumeration regardless of thread count.  Throws
/// std::invalid_argument when the options produce an empty grid.
std::vector<Report> sweep(IdentityId id, const SweepOptions& options);

/// All compositions with entries >= 1 and weight in [1, max_weight],
/// ordered by weight, then first entry, then recursively; 2^(w-1) of each
/// weight w.
std::vector<Composition> compositions_up_to_weight(int max_weight);

}  // namespace qharmonic
