#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qharmonic {

/// Arbitrary-precision integer and rational scalars.
///
/// Rational values are kept canonical at all times: denominator positive,
/// numerator and denominator coprime.  GMP maintains this for every
/// arithmetic result; the factory functions below enforce it for values
/// built from raw parts or text.
using Int = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form.  Throws std::domain_error if den == 0.
Rational make_rational(const Int& num, const Int& den);

inline Rational make_rational(long num, long den) {
  return make_rational(Int(num), Int(den));
}

/// Parses "p", "-p", or "p/r" (optional whitespace trimmed by caller).
/// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Renders canonical text: "p" when the denominator is 1, else "p/r".
std::string to_string(const Rational& value);

/// value^exp with integer exp (negative allowed).  Throws std::domain_error
/// on 0 raised to a negative power.
Rational rational_pow(const Rational& value, long exp);

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

inline std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

inline Rational rational_pow(const Rational& value, long exp) {
  if (exp == 0) return Rational(1);
  if (value == 0 && exp < 0) {
    throw std::domain_error("zero raised to a negative power");
  }
  Rational base = exp > 0 ? value : Rational(1) / value;
  unsigned long e = exp > 0 ? static_cast<unsigned long>(exp)
                            : static_cast<unsigned long>(-(exp + 1)) + 1;
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace qharmonic
