#include <numeric>
#include <stdexcept>
#include <vector>

#include "qharmonic/qcombinatorics.hpp"
#include "sums_internal.hpp"

namespace qharmonic::internal {

namespace {

// Dense integer polynomial used only inside this evaluator.  Everything
// the nested sums build lives in Z[q] until the final canonicalization,
// so working over mpz avoids per-coefficient rational normalization.
struct ZPoly {
  std::vector<Int> c;  // no trailing zeros

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  static ZPoly zero() { return {}; }
  static ZPoly one() { return {{Int(1)}}; }
  static ZPoly q_power(int k) {
    ZPoly p;
    p.c.assign(static_cast<size_t>(k) + 1, Int(0));
    p.c.back() = 1;
    return p;
  }
};

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly::zero();
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

void add_in_place(ZPoly& a, const ZPoly& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Int(0));
  for (size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
  a.trim();
}

ZPoly shifted(const ZPoly& a, int k) {
  if (a.is_zero() || k == 0) return a;
  ZPoly r;
  r.c.assign(a.c.size() + static_cast<size_t>(k), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + static_cast<size_t>(k)] = a.c[i];
  return r;
}

// Exact division by a monic integer polynomial; returns false (leaving
// dividend untouched) when the division has a remainder.
bool divide_exact_monic(ZPoly& dividend, const ZPoly& divisor) {
  if (dividend.is_zero()) return true;
  if (dividend.c.size() < divisor.c.size()) return false;
  std::vector<Int> work = dividend.c;
  const size_t dn = divisor.c.size();
  std::vector<Int> quot(work.size() - dn + 1, Int(0));
  for (size_t i = work.size(); i-- >= dn;) {
    if (work[i] != 0) {
      const Int f = work[i];
      quot[i - dn + 1] = f;
      for (size_t j = 0; j < dn; ++j) {
        work[i - dn + 1 + j] -= f * divisor.c[j];
      }
    }
    if (i == dn - 1) break;
  }
  for (size_t i = 0; i + 1 < dn; ++i) {
    if (work[i] != 0) return false;
  }
  dividend.c = std::move(quot);
  dividend.trim();
  return true;
}

ZPoly z_q_integer(int k) {
  ZPoly p;
  p.c.assign(static_cast<size_t>(k), Int(1));
  return p;
}

ZPoly z_power(const ZPoly& base, int e) {
  ZPoly acc = ZPoly::one();
  for (int i = 0; i < e; ++i) acc = mul(acc, base);
  return acc;
}

ZPoly from_qpoly(const QPoly& p) {
  ZPoly r;
  r.c.reserve(p.coeffs().size());
  for (const auto& coeff : p.coeffs()) {
    if (coeff.get_den() != 1) {
      throw std::logic_error("expected integer polynomial");
    }
    r.c.push_back(coeff.get_num());
  }
  return r;
}

QPoly to_qpoly(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.c.size());
  for (const auto& coeff : p.c) c.emplace_back(coeff);
  return QPoly(std::move(c));
}

// Gaussian binomial row [n choose k] for k = 0..n over Z[q].
std::vector<ZPoly> q_binomial_row(int n) {
  std::vector<ZPoly> row{ZPoly::one()};
  for (int r = 1; r <= n; ++r) {
    std::vector<ZPoly> next(static_cast<size_t>(r) + 1);
    next[0] = ZPoly::one();
    next[static_cast<size_t>(r)] = ZPoly::one();
    for (int j = 1; j < r; ++j) {
      next[static_cast<size_t>(j)] = row[static_cast<size_t>(j)];
      add_in_place(next[static_cast<size_t>(j)],
                   shifted(row[static_cast<size_t>(j) - 1], r - j));
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

QRatFun eval_sum_fast(SumKind kind, const Composition& s, int n) {
  const int m = s.size();
  const bool strict = is_strict(kind);
  const bool z_weights =
      (kind == SumKind::z_weak || kind == SumKind::z_strict);

  // sigma[j] = s_j + ... + s_m (1-based); sigma[m+1] = 0.
  std::vector<int> sigma(static_cast<size_t>(m) + 2, 0);
  for (int j = m; j >= 1; --j) {
    sigma[static_cast<size_t>(j)] =
        sigma[static_cast<size_t>(j) + 1] + s[j - 1];
  }

  std::vector<ZPoly> qint(static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) qint[static_cast<size_t>(k)] = z_q_integer(k);

  // num[k-1] carries the numerator of H_j(k) over the common denominator
  // prod_{i<=k} [i]^sigma_j; levels run from the innermost outwards.
  std::vector<ZPoly> num(static_cast<size_t>(n));
  for (int j = m; j >= 1; --j) {
    const int sj = s[j - 1];
    const int sig_below = sigma[static_cast<size_t>(j) + 1];
    // Prefix numerators of the level below over its common denominator;
    // at the innermost level the chain below is empty and the sum is 1.
    std::vector<ZPoly> prefix(static_cast<size_t>(n));
    if (j == m) {
      for (int k = 1; k <= n; ++k) {
        prefix[static_cast<size_t>(k) - 1] = ZPoly::one();
      }
    } else if (!strict) {
      ZPoly acc = ZPoly::zero();
      for (int k = 1; k <= n; ++k) {
        acc = mul(acc, z_power(qint[static_cast<size_t>(k)], sig_below));
        add_in_place(acc, num[static_cast<size_t>(k) - 1]);
        prefix[static_cast<size_t>(k) - 1] = acc;
      }
    } else {
      ZPoly acc = ZPoly::zero();
      for (int k = 2; k <= n; ++k) {
        acc = mul(acc, z_power(qint[static_cast<size_t>(k) - 1], sig_below));
        add_in_place(acc, num[static_cast<size_t>(k) - 2]);
        prefix[static_cast<size_t>(k) - 1] = acc;
      }
    }

    // Rescale to the level-j common denominator and attach this level's
    // q-power.  PB accumulates prod_{i<k} [i]^(s_j).
    std::vector<ZPoly> next(static_cast<size_t>(n));
    ZPoly pb = ZPoly::one();
    for (int k = 1; k <= n; ++k) {
      if (k > 1) {
        pb = mul(pb, z_power(qint[static_cast<size_t>(k) - 1], sj));
      }
      const int e = z_weights ? k : (sj - 1) * k;
      ZPoly val = mul(prefix[static_cast<size_t>(k) - 1], pb);
      if (j < m && strict) {
        // Strict prefixes live over prod_{i<=k-1}; one more [k]^sig_below
        // lifts them to the weak-denominator grid.
        val = mul(val, z_power(qint[static_cast<size_t>(k)], sig_below));
      }
      next[static_cast<size_t>(k) - 1] = shifted(val, e);
    }
    num = std::move(next);
  }

  // Outer accumulation over k = 1..n against the full denominator
  // prod_{i<=n} [i]^sigma_1, with the A-kind outer factor if any.
  std::vector<ZPoly> binom_row;
  if (is_a_kind(kind)) binom_row = q_binomial_row(n);
  ZPoly total = ZPoly::zero();
  for (int k = 1; k <= n; ++k) {
    total = mul(total, z_power(qint[static_cast<size_t>(k)],
                               sigma[1]));
    ZPoly term = num[static_cast<size_t>(k) - 1];
    if (is_a_kind(kind)) {
      term = mul(term, shifted(binom_row[static_cast<size_t>(k)],
                               k * (k + 1) / 2));
      const bool negate =
          kind == SumKind::a_weak ? (k % 2 == 0) : (k % 2 == 1);
      if (negate) {
        for (auto& coeff : term.c) coeff = -coeff;
      }
    }
    add_in_place(total, term);
  }

  if (total.is_zero()) return QRatFun();

  // Canonicalize against the known denominator factorization
  //   prod_{i<=n} [i]^sigma_1 = prod_{d=2..n} Phi_d^(sigma_1 * floor(n/d));
  // each cyclotomic is irreducible, so cancelling them maximally yields
  // the coprime canonical pair directly.
  ZPoly den = ZPoly::one();
  for (int d = 2; d <= n; ++d) {
    const ZPoly phi = from_qpoly(cyclotomic(d));
    int avail = sigma[1] * (n / d);
    while (avail > 0 && divide_exact_monic(total, phi)) --avail;
    for (int i = 0; i < avail; ++i) den = mul(den, phi);
  }
  return QRatFun::from_canonical_parts(to_qpoly(total), to_qpoly(den));
}

}  // namespace qharmonic::internal
