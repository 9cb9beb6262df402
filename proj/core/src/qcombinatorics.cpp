#include "qharmonic/qcombinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace qharmonic {

QPoly q_integer(int n) {
  if (n < 0) throw std::domain_error("q_integer: negative argument");
  std::vector<Rational> c(static_cast<size_t>(n), Rational(1));
  return QPoly(std::move(c));
}

namespace {

QPoly one_minus_q_power(int m) {
  // 1 - q^m
  std::vector<Rational> c(static_cast<size_t>(m) + 1, Rational(0));
  c[0] = 1;
  c[static_cast<size_t>(m)] = -1;
  return QPoly(std::move(c));
}

QPoly q_binomial_product(int n, int k) {
  // Running product of (1 - q^(n-k+j)) / (1 - q^j); every partial product
  // is itself a Gaussian binomial, so each division is exact.
  QPoly acc = QPoly::one();
  for (int j = 1; j <= k; ++j) {
    acc = acc * one_minus_q_power(n - k + j);
    acc = divide_exact(acc, one_minus_q_power(j));
  }
  return acc;
}

QPoly q_binomial_pascal(int n, int k, bool first_form) {
  // Row-by-row triangle; row r holds [r, j] for j = 0..min(r, k).
  std::vector<QPoly> row{QPoly::one()};
  for (int r = 1; r <= n; ++r) {
    std::vector<QPoly> next(static_cast<size_t>(std::min(r, k)) + 1);
    next[0] = QPoly::one();
    for (int j = 1; j <= std::min(r, k); ++j) {
      const QPoly above = j < static_cast<int>(row.size()) ? row[j] : QPoly();
      const QPoly left = row[static_cast<size_t>(j) - 1];
      if (first_form) {
        next[static_cast<size_t>(j)] = above + left.shifted(r - j);
      } else {
        next[static_cast<size_t>(j)] = above.shifted(j) + left;
      }
    }
    row = std::move(next);
  }
  return k < static_cast<int>(row.size()) ? row[static_cast<size_t>(k)]
                                          : QPoly();
}

}  // namespace

QPoly q_binomial(int n, int k, QBinomialMethod method) {
  if (k < 0 || n < 0 || k > n) return QPoly();
  if (k == 0 || k == n) return QPoly::one();
  switch (method) {
    case QBinomialMethod::product:
      return q_binomial_product(n, k);
    case QBinomialMethod::pascal_first:
      return q_binomial_pascal(n, k, true);
    case QBinomialMethod::pascal_second:
      return q_binomial_pascal(n, k, false);
  }
  throw std::logic_error("q_binomial: unknown method");
}

QPoly q_shifted_power(const Rational& x, const Rational& y, int n) {
  if (n < 0) throw std::domain_error("q_shifted_power: negative exponent");
  QPoly acc = QPoly::one();
  for (int k = 0; k < n; ++k) {
    // x + y*q^k
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c[0] = x;
    c[static_cast<size_t>(k)] += y;
    acc = acc * QPoly(std::move(c));
  }
  return acc;
}

QPoly cyclotomic(int d) {
  if (d < 1) throw std::domain_error("cyclotomic: argument must be >= 1");
  // (q^d - 1) divided by the cyclotomic polynomials of the proper divisors.
  QPoly acc = -one_minus_q_power(d);  // q^d - 1
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) acc = divide_exact(acc, cyclotomic(e));
  }
  return acc;
}

Rational q_integer_at(int n, const Rational& q0) {
  if (n < 0) throw std::domain_error("q_integer_at: negative argument");
  Rational acc(0);
  Rational p(1);
  for (int i = 0; i < n; ++i) {
    acc += p;
    p *= q0;
  }
  return acc;
}

Rational q_binomial_at(int n, int k, const Rational& q0) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  // prod (1 - q0^(n-k+j)) / (1 - q0^j); vanishing factors would mean q0 is
  // a root of unity, which the exact division below reports as an error.
  Rational num(1), den(1);
  Rational qa = rational_pow(q0, n - k);
  Rational qb(1);
  for (int j = 1; j <= k; ++j) {
    qa *= q0;
    qb *= q0;
    num *= Rational(1) - qa;
    den *= Rational(1) - qb;
  }
  if (den == 0) {
    throw std::domain_error("q_binomial_at: q0 is a root of unity");
  }
  return num / den;
}

Rational pochhammer_one_minus_q_at(const Rational& q0, int n) {
  if (n < 0) {
    throw std::domain_error("pochhammer_one_minus_q_at: negative length");
  }
  Rational acc(1);
  Rational p(1);
  for (int j = 1; j <= n; ++j) {
    p *= q0;
    acc *= Rational(1) - p;
  }
  return acc;
}

Int binomial_int(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace qharmonic
