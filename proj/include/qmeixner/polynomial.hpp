#pragma once

#include "rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmeixner {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the coefficient of x^i.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Rational& value) { return Polynomial({value}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  /// x - root
  static Polynomial linear(const Rational& root) { return Polynomial({Rational(-root), Rational(1)}); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i; zero past the degree.
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Rational operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  int sign_at(const Rational& at) const { return (*this)(at).sign(); }

  /// Sign as x -> +inf (positive_side) or x -> -inf.
  int sign_at_infinity(bool positive_side) const {
    if (is_zero()) return 0;
    int s = leading().sign();
    return (!positive_side && degree() % 2 == 1) ? -s : s;
  }

  Polynomial derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
    return Polynomial(std::move(out));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial out(*this);
    Rational lead = leading();
    for (auto& c : out.coeffs_) c /= lead;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s.sign() == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().sign() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial{}, num};
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - den.degree() + 1), Rational(0));
  const auto dd = static_cast<std::size_t>(den.degree());
  const Rational& lead = den.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dd] / lead;
    quot[k] = q;
    if (q.sign() == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * den[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }
inline Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// p / gcd(p, p'), monic: the same distinct roots, each simple.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

/// Yun's algorithm: returns f_1, f_2, ... with p = lead * prod f_i^i, each f_i monic, squarefree,
/// pairwise coprime. Entry i-1 holds f_i (possibly constant 1).
inline std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
  std::vector<Polynomial> factors;
  if (p.is_constant()) return factors;
  Polynomial a = p.monic();
  Polynomial b = a.derivative();
  Polynomial g = gcd(a, b);
  Polynomial c = a / g;
  Polynomial d = b / g - c.derivative();
  while (!c.is_constant()) {
    Polynomial f = gcd(c, d);
    factors.push_back(f);
    c = c / f;
    d = d / f - c.derivative();
  }
  return factors;
}

}  // namespace qmeixner
