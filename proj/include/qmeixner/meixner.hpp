#pragma once

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

#include <string>
#include <vector>

namespace qmeixner {

/// Identifies one monic Meixner polynomial M_n(x; beta, c).
struct MeixnerParams {
  int n = 0;
  Rational beta;
  Rational c;

  MeixnerParams with_degree(int degree) const { return {degree, beta, c}; }
  MeixnerParams with_beta_shift(long shift) const { return {n, beta + shift, c}; }

  friend bool operator==(const MeixnerParams&, const MeixnerParams&) = default;
};

inline std::string to_string(const MeixnerParams& p) {
  return "n=" + std::to_string(p.n) + " beta=" + to_string(p.beta) + " c=" + to_string(p.c);
}

/// Throws InvalidParams unless n >= 0 and c is neither 0 nor 1.
inline void validate(const MeixnerParams& p) {
  if (p.n < 0) throw Error(ErrorCode::InvalidParams, "negative degree in " + to_string(p));
  if (p.c.sign() == 0 || p.c == 1) throw Error(ErrorCode::InvalidParams, "c must differ from 0 and 1 in " + to_string(p));
}

/// Rising factorial a (a+1) ... (a+k-1); 1 for k = 0.
inline Rational pochhammer(const Rational& a, int k) {
  Rational result(1);
  for (int j = 0; j < k; ++j) result *= a + j;
  return result;
}

/// True when the hypergeometric form has a vanishing (beta)_k denominator for some k <= n.
inline bool series_has_pole(const MeixnerParams& p) {
  return is_integer(p.beta) && p.beta <= 0 && p.beta > -p.n;
}

/// Terminating 2F1 form:
///   (c/(c-1))^n (beta)_n * sum_k (-n)_k (-x)_k (1 - 1/c)^k / ((beta)_k k!).
/// Used as an independent cross-check of the recurrence.
inline Rational meixner_eval_series(const MeixnerParams& p, const Rational& x) {
  validate(p);
  const Rational z = Rational(1) - Rational(1) / p.c;
  Rational sum(0);
  Rational num_rising(1);  // (-n)_k (-x)_k z^k
  Rational beta_rising(1);  // (beta)_k
  Rational factorial(1);
  for (int k = 0; k <= p.n; ++k) {
    if (k > 0) {
      num_rising *= Rational(k - 1 - p.n) * (-x + (k - 1)) * z;
      beta_rising *= p.beta + (k - 1);
      factorial *= k;
    }
    if (num_rising.sign() == 0) break;  // (-n)_k or (-x)_k vanished: the series terminates here
    if (beta_rising.sign() == 0)
      throw Error(ErrorCode::Pole, "(beta)_" + std::to_string(k) + " vanishes in " + to_string(p));
    sum += num_rising / (beta_rising * factorial);
  }
  return pow(p.c / (p.c - 1), p.n) * pochhammer(p.beta, p.n) * sum;
}

/// Coefficients of the monic three-term recurrence
///   M_k = (x + shift_k) M_{k-1} - weight_k M_{k-2}.
inline Rational recurrence_shift(const MeixnerParams& p, int k) {
  return (p.beta * p.c + p.c * k - p.c + k - 1) / (p.c - 1);
}
inline Rational recurrence_weight(const MeixnerParams& p, int k) {
  const Rational cm1 = p.c - 1;
  return p.c * (k - 1) * (p.beta + k - 2) / (cm1 * cm1);
}

/// Canonical evaluator: iterates the three-term recurrence from M_{-1} = 0, M_0 = 1.
inline Rational meixner_eval_recurrence(const MeixnerParams& p, const Rational& x) {
  validate(p);
  Rational prev(0), cur(1);
  for (int k = 1; k <= p.n; ++k) {
    Rational next = (x + recurrence_shift(p, k)) * cur - recurrence_weight(p, k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// M_0, ..., M_n at fixed (beta, c), expanded symbolically in x.
inline std::vector<Polynomial> meixner_family(const MeixnerParams& p) {
  validate(p);
  std::vector<Polynomial> family;
  family.reserve(static_cast<std::size_t>(p.n) + 1);
  family.push_back(Polynomial::constant(Rational(1)));
  Polynomial prev;
  for (int k = 1; k <= p.n; ++k) {
    const Polynomial& cur = family.back();
    Polynomial next = Polynomial({recurrence_shift(p, k), Rational(1)}) * cur - recurrence_weight(p, k) * prev;
    prev = cur;
    family.push_back(std::move(next));
  }
  return family;
}

/// Exact monic coefficient vector of M_n(x; beta, c).
inline Polynomial meixner_coeffs(const MeixnerParams& p) { return std::move(meixner_family(p).back()); }

}  // namespace qmeixner
