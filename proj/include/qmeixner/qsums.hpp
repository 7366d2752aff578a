#pragma once

#include "analysis.hpp"
#include "error.hpp"
#include "identities.hpp"
#include "meixner.hpp"
#include "rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qmeixner {

/// Order r of quasi-orthogonality read off the expansion of M_n(beta) in the orthogonal family at
/// beta + r: 0 for beta > 0, 1 for -1 < beta < 0, 2 for -2 < beta < -1. The expansion is checked
/// exactly and its last coefficient must be nonzero, so low degrees report min(r, n).
inline int quasi_orth_order_by_expansion(const Rational& beta, const Rational& c, int n) {
  if (!in_unit_interval(c)) throw Error(ErrorCode::InvalidParams, "needs 0 < c < 1");
  if (n < 0) throw Error(ErrorCode::InvalidParams, "negative degree");
  if (beta <= -2) throw Error(ErrorCode::Unsupported, "beta <= -2 is outside the supported regimes");
  if (is_integer(beta) && beta <= 0) throw Error(ErrorCode::InvalidParams, "beta must not be a non-positive integer");
  const MeixnerParams p{n, beta, c};
  if (beta.sign() > 0 || n == 0) return 0;
  const IdentityKind kind = beta > -1 ? IdentityKind::Order1 : IdentityKind::Order2;
  const Verdict v = check_identity(kind, p);
  if (v.status != Status::Pass)
    throw Error(ErrorCode::Unresolved, "expansion identity failed at " + to_string(p) + ": " + v.detail);
  // Last coefficients: -n c/(c-1) for order 1, n(n-1) (c/(c-1))^2 for order 2.
  if (kind == IdentityKind::Order1) return 1;
  return n >= 2 ? 2 : 1;
}

/// w(x; b, c) = c^x (b)_x / x!
inline Rational meixner_weight(const Rational& b, const Rational& c, long x) {
  Rational w(1);
  for (long k = 0; k < x; ++k) w *= c * (b + k) / (k + 1);
  return w;
}

enum class MomentClass { Vanishes, Nonzero, Inconclusive };

constexpr std::string_view to_string(MomentClass m) {
  switch (m) {
    case MomentClass::Vanishes: return "VANISHES";
    case MomentClass::Nonzero: return "NONZERO";
    case MomentClass::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

struct Moment {
  int m = 0;
  Rational sum;         // exact partial sum over x = 0..X
  Rational tail_bound;  // >= |sum over x > X|
  MomentClass cls = MomentClass::Inconclusive;
};

/// Truncated moments sum_{x=0}^{X} x^m M_n(x; beta, c) w(x; beta + r, c), m = 0..n-r.
struct QSumReport {
  MeixnerParams params;
  int order_r = 0;
  long truncation_X = 0;
  std::vector<Moment> moments;

  /// Moments below n-r vanish and the m = n-r moment is nonzero.
  bool consistent() const {
    for (const auto& mo : moments) {
      const bool last = mo.m == params.n - order_r;
      if (last ? mo.cls != MomentClass::Nonzero : mo.cls != MomentClass::Vanishes) return false;
    }
    return !moments.empty();
  }
  Rational largest_sum() const {
    Rational best(0);
    for (const auto& mo : moments) best = max(best, abs(mo.sum));
    return best;
  }
  Rational largest_tail() const {
    Rational best(0);
    for (const auto& mo : moments) best = max(best, mo.tail_bound);
    return best;
  }
};

namespace detail {

/// Geometric tail bound for x > X. For x >= 1, |M_n(x)| <= K x^n with K the sum of |coefficients|,
/// so each term is at most K u(x) with u(x) = x^d w(x), d = m + n, and for x >= X+1
///   u(x+1)/u(x) <= rho = ((X+2)/(X+1))^d * c * max(1, (b+X+1)/(X+2)).
inline Rational tail_bound(const Rational& coeff_sum, const Rational& b, const Rational& c, long X, int d,
                           const Rational& weight_next) {
  const Rational growth = pow(Rational(X + 2, X + 1), d);
  const Rational rho = growth * c * max(Rational(1), (b + X + 1) / Rational(X + 2));
  if (rho >= 1)
    throw Error(ErrorCode::TailNotBounded, "term ratio bound " + to_string(rho) + " >= 1 at X=" + std::to_string(X));
  return coeff_sum * pow(Rational(X + 1), d) * weight_next / (1 - rho);
}

inline MomentClass classify(const Rational& sum, const Rational& bound) {
  const Rational a = abs(sum);
  if (a <= bound) return MomentClass::Vanishes;
  if (a > 2 * bound) return MomentClass::Nonzero;
  return MomentClass::Inconclusive;
}

}  // namespace detail

namespace detail {

/// Running partial sums over x = 0, 1, 2, ... for one (params, r).
class MomentAccumulator {
 public:
  MomentAccumulator(const MeixnerParams& p, int r) : p_(p), r_(r), b_(p.beta + r) {
    validate(p);
    if (!in_unit_interval(p.c)) throw Error(ErrorCode::InvalidParams, "needs 0 < c < 1");
    if (r < 0) throw Error(ErrorCode::InvalidParams, "order must be non-negative");
    if (b_.sign() <= 0) throw Error(ErrorCode::InvalidParams, "weight shift beta + r must be positive");
    const int top = p.n - r;
    if (top >= 0) sums_.assign(static_cast<std::size_t>(top) + 1, Rational(0));
    const Polynomial coeffs = meixner_coeffs(p);
    for (const auto& a : coeffs.coeffs()) coeff_sum_ += abs(a);
    poly_ = coeffs;
  }

  /// Adds the x = next() term.
  void step() {
    const Rational term = poly_(Rational(x_)) * weight_;
    Rational power(1);
    for (auto& s : sums_) {
      s += power * term;
      power *= x_;
    }
    weight_ *= p_.c * (b_ + x_) / (x_ + 1);
    ++x_;
  }
  long last() const { return x_ - 1; }

  QSumReport report() const {
    const long X = last();
    QSumReport rep{p_, r_, X, {}};
    for (std::size_t m = 0; m < sums_.size(); ++m) {
      Moment mo{static_cast<int>(m), sums_[m], tail_bound(coeff_sum_, b_, p_.c, X, static_cast<int>(m) + p_.n, weight_),
                MomentClass::Inconclusive};
      mo.cls = classify(mo.sum, mo.tail_bound);
      rep.moments.push_back(std::move(mo));
    }
    return rep;
  }

  /// Every tail bound below rel_tol times the largest |sum|; false while the ratio bound is >= 1.
  bool tails_small(const Rational& rel_tol) const {
    try {
      const QSumReport rep = report();
      return rep.largest_tail() < rel_tol * rep.largest_sum();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TailNotBounded) return false;
      throw;
    }
  }

 private:
  MeixnerParams p_;
  int r_;
  Rational b_;
  Polynomial poly_;
  Rational coeff_sum_{0};
  std::vector<Rational> sums_;
  Rational weight_{1};  // w(x_)
  long x_ = 0;
};

}  // namespace detail

inline QSumReport quasi_orth_sums(const MeixnerParams& p, int r, long X) {
  if (X < 1) throw Error(ErrorCode::InvalidParams, "truncation X must be >= 1");
  detail::MomentAccumulator acc(p, r);
  for (long x = 0; x <= X; ++x) acc.step();
  return acc.report();
}

/// Smallest X >= min_X whose tail bounds all fall below rel_tol times the largest partial-sum
/// magnitude, found in one pass over x.
inline long choose_truncation(const MeixnerParams& p, int r, long min_X = 200,
                              const Rational& rel_tol = Rational(1, 1000000000000LL), long max_X = 1L << 16) {
  detail::MomentAccumulator acc(p, r);
  for (long x = 0; x <= min_X; ++x) acc.step();
  while (!acc.tails_small(rel_tol)) {
    if (acc.last() >= max_X) throw Error(ErrorCode::TailNotBounded, "no truncation up to X=" + std::to_string(max_X));
    acc.step();
  }
  return acc.last();
}

}  // namespace qmeixner
