#pragma once

#include "rational.hpp"

#include <string>

namespace qmeixner {

/// Rounds to the nearest integer, ties away from zero.
inline Integer round_half_away(const Rational& r) {
  Integer num = numerator_of(abs(r)), den = denominator_of(r);
  Integer q = (2 * num + den) / (2 * den);
  return r.sign() < 0 ? Integer(-q) : q;
}

/// Correctly rounded fixed-point rendering with `decimals` digits after the point.
inline std::string to_fixed(const Rational& r, int decimals) {
  Integer scaled = round_half_away(r * pow10(decimals));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals)
      digits.insert(0, static_cast<std::size_t>(decimals + 1) - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), 1, '.');
  }
  return negative ? "-" + digits : digits;
}

/// Largest e with 10^e <= |r|; r must be nonzero.
inline long decimal_exponent(const Rational& r) {
  Rational a = abs(r);
  // Estimate from digit counts, then correct.
  long e = static_cast<long>(numerator_of(a).str().size()) -
           static_cast<long>(denominator_of(a).str().size());
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;
  return e;
}

/// Correctly rounded scientific rendering with `significant` digits, e.g. "3.549e-14".
inline std::string to_scientific(const Rational& r, int significant) {
  if (r.sign() == 0) {
    std::string zeros = significant > 1 ? "0." + std::string(significant - 1, '0') : "0";
    return zeros + "e+00";
  }
  long e = decimal_exponent(r);
  Integer mantissa = round_half_away(abs(r) * pow10(significant - 1 - e));
  if (mantissa.str().size() > static_cast<std::size_t>(significant)) {
    ++e;
    mantissa = round_half_away(abs(r) * pow10(significant - 1 - e));
  }
  std::string digits = mantissa.str();
  if (significant > 1) digits.insert(1, 1, '.');
  std::string exp = std::to_string(e < 0 ? -e : e);
  if (exp.size() < 2) exp.insert(0, 1, '0');
  return (r.sign() < 0 ? "-" : "") + digits + "e" + (e < 0 ? "-" : "+") + exp;
}

/// Fixed rendering when the magnitude is moderate, scientific otherwise; `significant` digits.
inline std::string to_decimal(const Rational& r, int significant = 12) {
  if (r.sign() == 0) return "0";
  long e = decimal_exponent(r);
  if (e < -4 || e >= significant) return to_scientific(r, significant);
  return to_fixed(r, static_cast<int>(significant - 1 - e));
}

}  // namespace qmeixner
