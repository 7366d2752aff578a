#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qmeixner {

/// Exact rational scalar. Always canonical: gcd(num, den) = 1, den > 0.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline int sign(const Rational& r) { return r.sign(); }

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? Rational(-r) : r; }

/// r^k for any integer k (k < 0 requires r != 0).
inline Rational pow(const Rational& base, long k) {
  if (k < 0) {
    if (base.sign() == 0) throw std::domain_error("zero to a negative power");
    return Rational(1) / pow(base, -k);
  }
  Rational result(1), b(base);
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return result;
}

inline Rational pow2(long k) { return pow(Rational(2), k); }
inline Rational pow10(long k) { return pow(Rational(10), k); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// "p/q" (or "p" when q = 1).
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "3/2", "-1.99", "1e-9", "2.5E3" exactly. Accepts U+2212 as a minus sign.
namespace detail {

/// Decimal digit string to Integer. GMP reads a leading 0 as an octal prefix, so strip it.
inline Integer decimal_integer(std::string digits) {
  bool negative = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  Integer v(digits);
  return negative ? Integer(-v) : v;
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
      continue;
    }
    if (text[i] != ' ' && text[i] != '\t') s.push_back(text[i]);
  }
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    auto is_int = [](std::string_view t) {
      if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
      if (t.empty()) return false;
      for (char ch : t)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return fail();
    const Integer d = detail::decimal_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(detail::decimal_integer(num), d);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '-' || s[pos] == '+') negative = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
    char ch = s[pos];
    if (ch == '.') {
      if (seen_point) return fail();
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else {
      return fail();
    }
  }
  if (!seen_digit) return fail();
  long exponent = 0;
  if (pos < s.size()) {
    std::string exp_text = s.substr(pos + 1);
    if (exp_text.empty()) return fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exp_text.size()) return fail();
  }
  Rational value{detail::decimal_integer(digits)};
  value *= pow10(exponent - frac_digits);
  return negative ? Rational(-value) : value;
}

}  // namespace qmeixner
