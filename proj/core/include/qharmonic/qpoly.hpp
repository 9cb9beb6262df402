#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qharmonic/rational.hpp"

namespace qharmonic {

/// Dense univariate polynomial in q over the rationals.
///
/// Invariant: the coefficient vector never ends in a zero, so the zero
/// polynomial is the empty vector and degree() is the vector length minus
/// one.  For the zero polynomial degree() returns kZeroPolyDegree, a
/// distinguished "minus infinity" marker that compares below every true
/// degree.
class QPoly {
 public:
  static constexpr int kZeroPolyDegree = -1;

  QPoly() = default;
  explicit QPoly(const Rational& constant);
  explicit QPoly(std::vector<Rational> coeffs);  // trims trailing zeros
  QPoly(std::initializer_list<Rational> coeffs);

  /// q^k (k >= 0).
  static QPoly power_of_q(int k);
  static QPoly one() { return QPoly(Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kZeroPolyDegree
                           : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of q^i; zero outside the stored range.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading_coeff() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator*=(const QPoly& other) { return *this = *this * other; }
  friend QPoly operator*(const QPoly& a, const Rational& s);
  friend QPoly operator*(const Rational& s, const QPoly& a) { return a * s; }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by q^k, i.e. shifts coefficients up by k (k >= 0).
  QPoly shifted(int k) const;

  Rational eval(const Rational& point) const;

  /// Scales so the leading coefficient is 1.  Throws on the zero polynomial.
  QPoly monic() const;

  /// Renders e.g. "1 - 2*q + 1/3*q^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with deg(rem) < deg(divisor).
/// Throws std::domain_error on division by the zero polynomial.
struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};
QPolyDivision divide(const QPoly& dividend, const QPoly& divisor);

/// Exact quotient; throws std::domain_error if the division leaves a
/// remainder.
QPoly divide_exact(const QPoly& dividend, const QPoly& divisor);

/// Monic greatest common divisor.  gcd(0, b) is monic(b); gcd(0, 0) throws.
/// Computed by a primitive pseudo-remainder sequence over the integers to
/// keep intermediate coefficients small.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

}  // namespace qharmonic
