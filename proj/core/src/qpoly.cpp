#include "qharmonic/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qharmonic {

namespace {
const Rational kZero(0);
}  // namespace

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPoly::QPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  trim();
}

QPoly QPoly::power_of_q(int k) {
  if (k < 0) throw std::domain_error("power_of_q: negative exponent");
  std::vector<Rational> c(static_cast<size_t>(k) + 1, kZero);
  c.back() = 1;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& QPoly::leading_coeff() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), kZero);
  }
  for (size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), kZero);
  }
  for (size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const Rational& s) {
  if (s == 0) return QPoly();
  QPoly r(a);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::domain_error("shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> c(coeffs_.size() + static_cast<size_t>(k), kZero);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + k);
  return QPoly(std::move(c));
}

Rational QPoly::eval(const Rational& point) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) throw std::domain_error("monic of the zero polynomial");
  if (leading_coeff() == 1) return *this;
  return *this * (Rational(1) / leading_coeff());
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (i == 0) {
      out << qharmonic::to_string(mag);
    } else {
      if (!unit) out << qharmonic::to_string(mag) << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

QPolyDivision divide(const QPoly& dividend, const QPoly& divisor) {
  if (divisor.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  QPolyDivision result;
  if (dividend.degree() < divisor.degree()) {
    result.remainder = dividend;
    return result;
  }
  std::vector<Rational> rem(dividend.coeffs());
  const auto& div = divisor.coeffs();
  const size_t dn = div.size();
  std::vector<Rational> quot(rem.size() - dn + 1, Rational(0));
  const Rational& lead = div.back();
  for (size_t i = rem.size(); i-- >= dn;) {
    if (rem[i] == 0) {
      if (i == dn - 1) break;
      continue;
    }
    Rational f = rem[i] / lead;
    quot[i - dn + 1] = f;
    for (size_t j = 0; j < dn; ++j) {
      rem[i - dn + 1 + j] -= f * div[j];
    }
    if (i == dn - 1) break;
  }
  result.quotient = QPoly(std::move(quot));
  result.remainder = QPoly(std::move(rem));
  return result;
}

QPoly divide_exact(const QPoly& dividend, const QPoly& divisor) {
  QPolyDivision d = divide(dividend, divisor);
  if (!d.remainder.is_zero()) {
    throw std::domain_error("divide_exact: division leaves a remainder");
  }
  return d.quotient;
}

namespace {

// Integer-coefficient workhorse for the gcd.  A rational polynomial is
// scaled to integer coefficients once on entry; everything afterwards is
// mpz arithmetic.
using ZVec = std::vector<Int>;

void ztrim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Int zcontent(const ZVec& v) {
  Int g(0);
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zmake_primitive(ZVec& v) {
  Int g = zcontent(v);
  if (g == 0 || g == 1) return;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZVec to_primitive_integer(const QPoly& p) {
  Int lcm_den(1);
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  ZVec v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    v.push_back(Int(c.get_num() * (lcm_den / c.get_den())));
  }
  zmake_primitive(v);
  return v;
}

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a reduced mod b.
ZVec pseudo_rem(ZVec a, const ZVec& b) {
  const size_t db = b.size() - 1;
  const Int& lead = b.back();
  while (a.size() >= b.size()) {
    const size_t shift = a.size() - b.size();
    Int top = a.back();
    for (auto& c : a) c *= lead;
    for (size_t j = 0; j <= db; ++j) {
      a[shift + j] -= top * b[j];
    }
    ztrim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw std::domain_error("gcd of two zero polynomials");
  }
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();

  ZVec u = to_primitive_integer(a);
  ZVec v = to_primitive_integer(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (true) {
    ZVec r = pseudo_rem(u, v);
    if (r.empty()) break;
    if (r.size() == 1) {
      return QPoly::one();
    }
    zmake_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c);
  return QPoly(std::move(out)).monic();
}

}  // namespace qharmonic
