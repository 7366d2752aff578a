#pragma once

#include <qmeixner/decimal.hpp>
#include <qmeixner/zeros.hpp>

#include <string>

namespace qmeixner::cli {

/// How one table cell is printed: fixed decimals or scientific significant digits.
struct CellFormat {
  enum class Style { Fixed, Scientific };
  Style style = Style::Fixed;
  int digits = 6;

  static CellFormat fixed(int decimals) { return {Style::Fixed, decimals}; }
  static CellFormat scientific(int significant) { return {Style::Scientific, significant}; }

  std::string render(const Rational& r) const {
    return style == Style::Fixed ? to_fixed(r, digits) : to_scientific(r, digits);
  }
  /// One unit in the last printed place, for a value of magnitude near `r`.
  Rational ulp(const Rational& r) const {
    if (style == Style::Fixed) return pow10(-digits);
    return pow10(decimal_exponent(r) - (digits - 1));
  }
};

/// Narrows the bracket until both endpoints print identically, so the printed string is the
/// correctly rounded value of the root itself.
inline std::string render_root(const Polynomial& reduced, IsolatingInterval iv, const CellFormat& fmt,
                               int max_steps = 2000) {
  if (iv.exact) return fmt.render(*iv.exact);
  for (int step = 0; step < max_steps; ++step) {
    if (iv.exact) return fmt.render(*iv.exact);
    const std::string lo = fmt.render(iv.lo), hi = fmt.render(iv.hi);
    if (lo == hi && iv.lo.sign() * iv.hi.sign() > 0) return lo;
    qmeixner::detail::bisect_once(reduced, iv);
  }
  return fmt.render(iv.midpoint());
}

/// Refines a bracket until its width is at most `rel` times its smallest endpoint magnitude
/// (and at most `abs_width`), so tiny roots keep their significant digits.
inline IsolatingInterval refine_relative(const Polynomial& reduced, IsolatingInterval iv, const Rational& abs_width,
                                         const Rational& rel, int max_steps = 4000) {
  iv = refine(reduced, iv, abs_width);
  for (int step = 0; step < max_steps && !iv.exact; ++step) {
    if (iv.lo.sign() * iv.hi.sign() > 0 && iv.width() <= rel * min(abs(iv.lo), abs(iv.hi))) break;
    qmeixner::detail::bisect_once(reduced, iv);
  }
  return iv;
}

/// to_decimal without trailing zeros in the fraction: "-1.9", "0.5", "1".
inline std::string to_decimal_trimmed(const Rational& r, int significant = 17) {
  std::string s = to_decimal(r, significant);
  if (s.find('.') == std::string::npos || s.find('e') != std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

/// Significant digits needed for `width` resolution, at least `floor`.
inline int digits_for_width(const Rational& width, int floor = 6) {
  if (width.sign() <= 0) return floor;
  long e = -decimal_exponent(width);
  return std::max<int>(floor, static_cast<int>(e) + 2);
}

/// Shortest rendering (>= min_digits significant) that tells lo and hi apart, capped at 40 digits.
inline std::pair<std::string, std::string> render_distinct(const Rational& lo, const Rational& hi, int min_digits = 12) {
  int d = min_digits;
  std::string a = to_decimal(lo, d), b = to_decimal(hi, d);
  while (lo != hi && a == b && d < 40) {
    ++d;
    a = to_decimal(lo, d);
    b = to_decimal(hi, d);
  }
  return {a, b};
}

}  // namespace qmeixner::cli
