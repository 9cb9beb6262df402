#pragma once

#include <vector>

#include "qharmonic/qpoly.hpp"

namespace qharmonic {

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.  Throws on negative n.
QPoly q_integer(int n);

/// Algorithm selector for q_binomial.  All three produce the same
/// polynomial; keeping them separate lets tests cross-check the product
/// formula against both triangular recurrences
///   [r,k] = [r-1,k] + q^(r-k) [r-1,k-1]
///   [r,k] = q^k [r-1,k] + [r-1,k-1].
enum class QBinomialMethod { product, pascal_first, pascal_second };

/// Gaussian binomial coefficient as a polynomial in q of degree k(n-k).
/// Zero unless 0 <= k <= n.
QPoly q_binomial(int n, int k,
                 QBinomialMethod method = QBinomialMethod::product);

/// (x + y)_q^n = prod_{k=0}^{n-1} (x + y q^k) for rational x, y.
/// Throws on negative n.
QPoly q_shifted_power(const Rational& x, const Rational& y, int n);

/// d-th cyclotomic polynomial (d >= 1).  These are the irreducible factors
/// of every [n]_q: [n]_q = prod over divisors d >= 2 of n.
QPoly cyclotomic(int d);

/// Value of [n]_q at q = q0.
Rational q_integer_at(int n, const Rational& q0);

/// Value of the Gaussian binomial at q = q0 (computed directly, without
/// building the polynomial).
Rational q_binomial_at(int n, int k, const Rational& q0);

/// prod_{j=1}^{n} (1 - q0^j), the q-shifted factorial (1-q)_q^n at q = q0.
Rational pochhammer_one_minus_q_at(const Rational& q0, int n);

/// C(n, k) as an exact integer (0 outside 0 <= k <= n).
Int binomial_int(int n, int k);

}  // namespace qharmonic
