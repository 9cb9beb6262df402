#include "qharmonic/qratfun.hpp"

#include <stdexcept>
#include <utility>

namespace qharmonic {

QRatFun::QRatFun(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) {
    throw std::domain_error("rational function with zero denominator");
  }
  if (num.is_zero()) {
    num_ = QPoly();
    den_ = QPoly::one();
    return;
  }
  QPoly n = num;
  QPoly d = den;
  QPoly g = poly_gcd(n, d);
  if (g.degree() > 0) {
    n = divide_exact(n, g);
    d = divide_exact(d, g);
  }
  const Rational lead = d.leading_coeff();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    n = n * inv;
    d = d * inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

QRatFun QRatFun::power_of_q(int k) {
  QRatFun r;
  if (k >= 0) {
    r.num_ = QPoly::power_of_q(k);
    r.den_ = QPoly::one();
  } else {
    r.num_ = QPoly::one();
    r.den_ = QPoly::power_of_q(-k);
  }
  return r;
}

QRatFun QRatFun::from_canonical_parts(QPoly num, QPoly den) {
  QRatFun r;
  if (num.is_zero()) return r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

QRatFun QRatFun::operator-() const {
  QRatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

QRatFun operator+(const QRatFun& a, const QRatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Pre-reduce by the shared denominator factor so the final gcd works on
  // the smallest possible operands.
  QPoly g = poly_gcd(a.den_, b.den_);
  QPoly bred = g.degree() > 0 ? divide_exact(b.den_, g) : b.den_;
  QPoly ared = g.degree() > 0 ? divide_exact(a.den_, g) : a.den_;
  QPoly num = a.num_ * bred + b.num_ * ared;
  QPoly den = a.den_ * bred;
  return QRatFun(num, den);
}

QRatFun operator-(const QRatFun& a, const QRatFun& b) { return a + (-b); }

QRatFun operator*(const QRatFun& a, const QRatFun& b) {
  if (a.is_zero() || b.is_zero()) return QRatFun();
  // Cross-cancel first; the product of the reduced parts is then already
  // in lowest terms, so no further gcd is needed.
  QPoly g1 = poly_gcd(a.num_, b.den_);
  QPoly g2 = poly_gcd(b.num_, a.den_);
  QPoly n1 = g1.degree() > 0 ? divide_exact(a.num_, g1) : a.num_;
  QPoly d2 = g1.degree() > 0 ? divide_exact(b.den_, g1) : b.den_;
  QPoly n2 = g2.degree() > 0 ? divide_exact(b.num_, g2) : b.num_;
  QPoly d1 = g2.degree() > 0 ? divide_exact(a.den_, g2) : a.den_;
  QPoly num = n1 * n2;
  QPoly den = d1 * d2;
  const Rational lead = den.leading_coeff();
  QRatFun r;
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num = num * inv;
    den = den * inv;
  }
  r = QRatFun::from_canonical_parts(std::move(num), std::move(den));
  return r;
}

QRatFun operator/(const QRatFun& a, const QRatFun& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  // Invert b by swapping parts; rescaling keeps the denominator monic and
  // the parts stay coprime, so the swap is canonical without a gcd.
  const Rational scale = Rational(1) / b.num_.leading_coeff();
  QRatFun inv = QRatFun::from_canonical_parts(b.den_ * scale, b.num_ * scale);
  return a * inv;
}

Rational QRatFun::eval_at(const Rational& point) const {
  const Rational d = den_.eval(point);
  if (d == 0) {
    throw std::domain_error("pole at q=" + qharmonic::to_string(point));
  }
  return num_.eval(point) / d;
}

std::string QRatFun::to_string() const {
  if (den_ == QPoly::one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qharmonic
