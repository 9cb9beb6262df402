#pragma once

#include <string>

#include "qharmonic/qpoly.hpp"

namespace qharmonic {

/// Rational function in q, always held in canonical form: numerator and
/// denominator coprime, denominator monic and nonzero, the zero value
/// stored as 0/1.  Because the form is unique, operator== on the stored
/// parts decides equality in the field of rational functions.
class QRatFun {
 public:
  /// Zero.
  QRatFun() : num_(), den_(QPoly::one()) {}
  explicit QRatFun(const Rational& constant)
      : num_(QPoly(constant)), den_(QPoly::one()) {}
  explicit QRatFun(const QPoly& poly) : num_(poly), den_(QPoly::one()) {}

  /// Builds num/den and canonicalizes.  Throws std::domain_error when den
  /// is the zero polynomial.
  QRatFun(const QPoly& num, const QPoly& den);

  /// q^k as a rational function; k may be negative.
  static QRatFun power_of_q(int k);
  static QRatFun one() { return QRatFun(Rational(1)); }

  /// Wraps parts that are already known to be canonical (used by evaluators
  /// that canonicalize through a factored representation).  The caller
  /// vouches for coprimality and a monic denominator.
  static QRatFun from_canonical_parts(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRatFun operator-() const;
  friend QRatFun operator+(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator-(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator*(const QRatFun& a, const QRatFun& b);
  /// Throws std::domain_error on division by zero.
  friend QRatFun operator/(const QRatFun& a, const QRatFun& b);
  QRatFun& operator+=(const QRatFun& o) { return *this = *this + o; }
  QRatFun& operator-=(const QRatFun& o) { return *this = *this - o; }
  QRatFun& operator*=(const QRatFun& o) { return *this = *this * o; }
  QRatFun& operator/=(const QRatFun& o) { return *this = *this / o; }

  friend bool operator==(const QRatFun& a, const QRatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at q = point.  Throws std::domain_error "pole at q=..."
  /// when the canonical denominator vanishes there.
  Rational eval_at(const Rational& point) const;

  /// "num" when the denominator is 1, else "(num)/(den)".
  std::string to_string() const;

 private:
  QPoly num_;
  QPoly den_;
};

}  // namespace qharmonic
