#include "qharmonic/sums.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "qharmonic/qcombinatorics.hpp"
#include "sums_internal.hpp"

namespace qharmonic {

bool is_strict(SumKind kind) {
  return kind == SumKind::z_strict || kind == SumKind::a_strict;
}

bool is_a_kind(SumKind kind) {
  return kind == SumKind::a_weak || kind == SumKind::a_strict;
}

std::string sum_kind_tag(SumKind kind) {
  switch (kind) {
    case SumKind::z_weak: return "Zw";
    case SumKind::a_weak: return "Aw";
    case SumKind::w_weak: return "Ww";
    case SumKind::z_strict: return "Zs";
    case SumKind::a_strict: return "As";
  }
  throw std::logic_error("unknown sum kind");
}

std::optional<SumKind> parse_sum_kind(const std::string& tag) {
  if (tag == "Zw") return SumKind::z_weak;
  if (tag == "Aw") return SumKind::a_weak;
  if (tag == "Ww") return SumKind::w_weak;
  if (tag == "Zs") return SumKind::z_strict;
  if (tag == "As") return SumKind::a_strict;
  return std::nullopt;
}

namespace {

void validate_args(const Composition& s, int n) {
  if (n < 0) throw std::invalid_argument("sum upper limit must be >= 0");
  for (int e : s.entries()) {
    if (e < 0) throw std::invalid_argument("exponent entries must be >= 0");
  }
}

// Value of the empty-composition sum under each kind's convention.
QRatFun empty_composition_value(SumKind kind, int n) {
  if (is_strict(kind)) return QRatFun::one();
  return n >= 1 ? QRatFun::one() : QRatFun();
}

// Per-index factor: q^k / [k]^s for Z kinds, q^((s-1)k) / [k]^s otherwise.
QRatFun index_factor(SumKind kind, int s, int k) {
  const bool z = (kind == SumKind::z_weak || kind == SumKind::z_strict);
  const int e = z ? k : (s - 1) * k;
  QPoly den = QPoly::one();
  const QPoly qint = q_integer(k);
  for (int i = 0; i < s; ++i) den = den * qint;
  if (e < 0) den = den * QPoly::power_of_q(-e);
  return QRatFun(QPoly::power_of_q(e > 0 ? e : 0), den);
}

// Outer factor attached to the largest index of A kinds.
QRatFun a_outer_factor(SumKind kind, int n, int k) {
  QPoly p = q_binomial(n, k).shifted(k * (k + 1) / 2);
  const bool negate =
      kind == SumKind::a_weak ? (k % 2 == 0) : (k % 2 == 1);
  return QRatFun(negate ? -p : p);
}

// Prefix-sum dynamic programming with generic rational-function
// arithmetic; handles zero entries (Laurent powers of q).
QRatFun eval_sum_generic(SumKind kind, const Composition& s, int n) {
  const int m = s.size();
  const bool strict = is_strict(kind);
  // level[k-1] holds F_j(k); seeded at the innermost level j = m.
  std::vector<QRatFun> level(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    level[static_cast<size_t>(k) - 1] = index_factor(kind, s[m - 1], k);
  }
  for (int j = m - 1; j >= 1; --j) {
    std::vector<QRatFun> next(static_cast<size_t>(n));
    QRatFun prefix;
    for (int k = 1; k <= n; ++k) {
      if (!strict) prefix += level[static_cast<size_t>(k) - 1];
      next[static_cast<size_t>(k) - 1] =
          index_factor(kind, s[j - 1], k) * prefix;
      if (strict) prefix += level[static_cast<size_t>(k) - 1];
    }
    level = std::move(next);
  }
  QRatFun total;
  for (int k = 1; k <= n; ++k) {
    QRatFun term = level[static_cast<size_t>(k) - 1];
    if (is_a_kind(kind)) term = term * a_outer_factor(kind, n, k);
    total += term;
  }
  return total;
}

}  // namespace

QRatFun eval_sum(SumKind kind, const Composition& s, int n) {
  validate_args(s, n);
  if (s.empty()) return empty_composition_value(kind, n);
  if (n == 0) return QRatFun();
  if (s.all_positive()) return internal::eval_sum_fast(kind, s, n);
  return eval_sum_generic(kind, s, n);
}

QRatFun eval_sum_brute(SumKind kind, const Composition& s, int n) {
  validate_args(s, n);
  if (s.empty()) return empty_composition_value(kind, n);
  if (n == 0) return QRatFun();
  const int m = s.size();
  if (std::pow(static_cast<double>(n), static_cast<double>(m)) > 1e6) {
    throw std::domain_error("oracle too large");
  }
  const bool strict = is_strict(kind);
  std::vector<int> chain(static_cast<size_t>(m));
  QRatFun total;
  // Literal enumeration of every admissible index chain.
  auto recurse = [&](auto&& self, int j) -> void {
    if (j == m) {
      QRatFun term = QRatFun::one();
      for (int i = 0; i < m; ++i) {
        term = term * index_factor(kind, s[i], chain[static_cast<size_t>(i)]);
      }
      if (is_a_kind(kind)) {
        term = term * a_outer_factor(kind, n, chain[0]);
      }
      total += term;
      return;
    }
    const int upper =
        j == 0 ? n : chain[static_cast<size_t>(j) - 1] - (strict ? 1 : 0);
    for (int k = 1; k <= upper; ++k) {
      chain[static_cast<size_t>(j)] = k;
      self(self, j + 1);
    }
  };
  recurse(recurse, 0);
  return total;
}

namespace {

using Memo = std::map<std::pair<std::vector<int>, int>, QRatFun>;

QRatFun a_recursive_impl(const std::vector<int>& s, int n, Memo& memo) {
  if (s.empty()) return n >= 1 ? QRatFun::one() : QRatFun();
  if (n == 0) return QRatFun();
  const auto key = std::make_pair(s, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  QRatFun result;
  if (s[0] == 0) {
    if (s.size() == 1) {
      result = QRatFun::one();
    } else {
      // First-entry-0 reduction: divide by [n] and shift the next entry.
      std::vector<int> rest(s.begin() + 1, s.end());
      rest[0] -= 1;
      result = QRatFun(QPoly::one(), q_integer(n)) *
               a_recursive_impl(rest, n, memo);
    }
  } else {
    std::vector<int> lowered(s);
    lowered[0] -= 1;
    for (int r = 1; r <= n; ++r) {
      const QRatFun factor(QPoly::power_of_q(r), q_integer(r));
      result += factor * a_recursive_impl(lowered, r, memo);
    }
  }
  memo.emplace(key, result);
  return result;
}

QRatFun a_strict_recursive_impl(const std::vector<int>& s, int n,
                                Memo& memo) {
  if (s.empty()) return QRatFun::one();
  if (n == 0) return QRatFun();
  const auto key = std::make_pair(s, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  QRatFun result;
  if (s[0] == 0) {
    // Strict first-entry-0 reduction: drop the entry, step n down, negate.
    std::vector<int> rest(s.begin() + 1, s.end());
    result = -a_strict_recursive_impl(rest, n - 1, memo);
  } else {
    std::vector<int> lowered(s);
    lowered[0] -= 1;
    for (int r = 1; r <= n; ++r) {
      const QRatFun factor(QPoly::power_of_q(r), q_integer(r));
      result += factor * a_strict_recursive_impl(lowered, r, memo);
    }
  }
  memo.emplace(key, result);
  return result;
}

void validate_recursive_args(const Composition& s, int n) {
  if (n < 0) throw std::invalid_argument("sum upper limit must be >= 0");
  const auto& e = s.entries();
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || (e[i] == 0 && i != 0)) {
      throw std::invalid_argument(
          "recurrence entries must be >= 1 (a single leading 0 is allowed)");
    }
  }
}

}  // namespace

QRatFun eval_a_recursive(const Composition& s, int n) {
  validate_recursive_args(s, n);
  Memo memo;
  return a_recursive_impl(s.entries(), n, memo);
}

QRatFun eval_a_strict_recursive(const Composition& s, int n) {
  validate_recursive_args(s, n);
  Memo memo;
  return a_strict_recursive_impl(s.entries(), n, memo);
}

namespace {

Rational q1_direct(SumKind kind, const Composition& s, int n) {
  if (s.empty()) {
    if (is_strict(kind)) return Rational(1);
    return Rational(n >= 1 ? 1 : 0);
  }
  if (n == 0) return Rational(0);
  const int m = s.size();
  if (std::pow(static_cast<double>(n), static_cast<double>(m)) > 1e7) {
    throw std::domain_error("q=1 nested sum too large");
  }
  // At q = 1 every kind's per-index factor collapses to 1 / k_j^(s_j).
  const bool strict = is_strict(kind);
  std::vector<int> chain(static_cast<size_t>(m));
  Rational total(0);
  auto recurse = [&](auto&& self, int j) -> void {
    if (j == m) {
      Rational term(1);
      for (int i = 0; i < m; ++i) {
        term /= rational_pow(Rational(chain[static_cast<size_t>(i)]),
                             s[i]);
      }
      if (is_a_kind(kind)) {
        const int k1 = chain[0];
        Rational outer(binomial_int(n, k1));
        const bool negate =
            kind == SumKind::a_weak ? (k1 % 2 == 0) : (k1 % 2 == 1);
        if (negate) outer = -outer;
        term *= outer;
      }
      total += term;
      return;
    }
    const int upper =
        j == 0 ? n : chain[static_cast<size_t>(j) - 1] - (strict ? 1 : 0);
    for (int k = 1; k <= upper; ++k) {
      chain[static_cast<size_t>(j)] = k;
      self(self, j + 1);
    }
  };
  recurse(recurse, 0);
  return total;
}

}  // namespace

Q1Routes eval_q1_routes(SumKind kind, const Composition& s, int n) {
  validate_args(s, n);
  Q1Routes r;
  r.via_symbolic = eval_sum(kind, s, n).eval_at(Rational(1));
  r.via_direct = q1_direct(kind, s, n);
  return r;
}

Rational eval_q1(SumKind kind, const Composition& s, int n) {
  const Q1Routes r = eval_q1_routes(kind, s, n);
  if (r.via_symbolic != r.via_direct) {
    throw std::logic_error(
        "eval_q1: symbolic and direct routes disagree (internal error)");
  }
  return r.via_symbolic;
}

}  // namespace qharmonic
