#pragma once

#include "error.hpp"
#include "meixner.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

#include <optional>
#include <vector>

namespace qmeixner {

/// Closed interval holding exactly one distinct real root (counted `multiplicity` times).
/// When `exact` is set, lo == hi == *exact.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
  int multiplicity = 1;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return exact ? *exact : (lo + hi) / 2; }

  static IsolatingInterval point(const Rational& root, int multiplicity = 1) {
    return {root, root, root, multiplicity};
  }
};

/// All real roots of one polynomial, sorted and pairwise disjoint.
/// `reduced` is the monic squarefree part the intervals isolate; it drives later refinement
/// and is empty for hand-built sets that cannot be refined.
struct ZeroSet {
  std::vector<IsolatingInterval> intervals;
  int real_count = 0;
  int degree = 0;
  Polynomial reduced;

  std::size_t size() const { return intervals.size(); }
  const IsolatingInterval& operator[](std::size_t i) const { return intervals[i]; }
};

/// Extended endpoint: nullopt stands for -inf on the left and +inf on the right.
using Endpoint = std::optional<Rational>;

/// Signed remainder sequence p, p', -rem(p, p'), ... up to the last nonzero element.
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidParams, "Sturm chain of the zero polynomial");
  std::vector<Polynomial> chain{p};
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    next = -(a % chain.back());
  }
  return chain;
}

namespace detail {

inline int sign_of(const Polynomial& q, const Endpoint& at, bool right) {
  return at ? q.sign_at(*at) : q.sign_at_infinity(right);
}

inline int sign_variations(const std::vector<Polynomial>& chain, const Endpoint& at, bool right) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign_of(q, at, right);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline int count_with_chain(const std::vector<Polynomial>& chain, const Endpoint& lo, const Endpoint& hi) {
  if (lo && hi && !(*lo < *hi)) return 0;
  return sign_variations(chain, lo, false) - sign_variations(chain, hi, true);
}

/// Smallest power of two strictly exceeding every root modulus (Cauchy bound on the monic form).
inline Rational root_bound(const Polynomial& p) {
  Polynomial m = p.monic();
  Rational bound(1);
  for (long i = 0; i < m.degree(); ++i) bound = max(bound, abs(m[static_cast<std::size_t>(i)]));
  bound += 1;
  Rational pow_two(1);
  while (pow_two <= bound) pow_two *= 2;
  return pow_two;
}

/// One bisection step on a sign-change bracket of q; returns false when the midpoint is a root.
inline bool bisect_once(const Polynomial& q, IsolatingInterval& iv) {
  if (iv.exact) return false;
  const Rational mid = (iv.lo + iv.hi) / 2;
  const int s = q.sign_at(mid);
  if (s == 0) {
    iv.lo = iv.hi = mid;
    iv.exact = mid;
    return false;
  }
  if (s == q.sign_at(iv.lo))
    iv.lo = mid;
  else
    iv.hi = mid;
  return true;
}

/// Isolates the roots of a squarefree polynomial in the open interval (a, b), where neither
/// endpoint is a root. Midpoints stay dyadic when a and b are dyadic.
inline void isolate_open(const Polynomial& s, const std::vector<Polynomial>& chain, const Rational& a,
                         const Rational& b, std::vector<IsolatingInterval>& out) {
  const int count = count_with_chain(chain, a, b);
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b, std::nullopt, 1});
    return;
  }
  const Rational mid = (a + b) / 2;
  if (s.sign_at(mid) != 0) {
    isolate_open(s, chain, a, mid, out);
    isolate_open(s, chain, mid, b, out);
    return;
  }
  // mid is a root: pull back a punctured neighbourhood that holds no other root.
  Rational delta = (b - a) / 4;
  while (s.sign_at(mid - delta) == 0 || s.sign_at(mid + delta) == 0 ||
         count_with_chain(chain, mid - delta, mid + delta) != 1)
    delta /= 2;
  isolate_open(s, chain, a, mid - delta, out);
  out.push_back(IsolatingInterval::point(mid));
  isolate_open(s, chain, mid + delta, b, out);
}

}  // namespace detail

/// Number of distinct real roots of p in (lo, hi].
inline int count_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidParams, "root count of the zero polynomial");
  return detail::count_with_chain(sturm_chain(squarefree_part(p)), lo, hi);
}

/// Bisects a sign-change bracket (or leaves an exact root untouched) until its width is <= width.
inline IsolatingInterval refine(const Polynomial& p, IsolatingInterval iv, const Rational& width) {
  if (width.sign() <= 0) throw Error(ErrorCode::InvalidParams, "refinement width must be positive");
  if (iv.exact) return iv;
  if (p.sign_at(iv.lo) * p.sign_at(iv.hi) >= 0)
    throw Error(ErrorCode::NoSignChange,
                "no sign change on [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]");
  while (iv.width() > width)
    if (!detail::bisect_once(p, iv)) break;
  return iv;
}

/// Isolates every distinct real root with its multiplicity.
inline ZeroSet isolate_zeros(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidParams, "zeros of the zero polynomial");
  ZeroSet zs;
  zs.degree = static_cast<int>(p.degree());
  if (p.is_constant()) return zs;

  zs.reduced = squarefree_part(p);
  const Polynomial& s = zs.reduced;
  if (s.degree() == 1) {
    zs.intervals.push_back(IsolatingInterval::point(-s[0]));
  } else {
    const Rational bound = detail::root_bound(s);
    detail::isolate_open(s, sturm_chain(s), -bound, bound, zs.intervals);
  }

  // Bisection neighbours share endpoints; shrink until strictly separated.
  for (std::size_t i = 0; i + 1 < zs.intervals.size(); ++i) {
    auto& left = zs.intervals[i];
    auto& right = zs.intervals[i + 1];
    while (!(left.hi < right.lo)) {
      if (!left.exact && (right.exact || left.width() >= right.width()))
        detail::bisect_once(s, left);
      else
        detail::bisect_once(s, right);
    }
  }

  const auto factors = squarefree_factors(p);
  for (auto& iv : zs.intervals) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto& f = factors[k];
      if (f.is_constant()) continue;
      const bool holds = iv.exact ? f.sign_at(*iv.exact) == 0 : detail::count_with_chain(sturm_chain(f), iv.lo, iv.hi) > 0;
      if (holds) {
        iv.multiplicity = static_cast<int>(k) + 1;
        break;
      }
    }
    zs.real_count += iv.multiplicity;
  }
  return zs;
}

/// Refines every interval of the set to width <= width.
inline ZeroSet refine_all(ZeroSet zs, const Rational& width) {
  for (auto& iv : zs.intervals) iv = refine(zs.reduced, iv, width);
  return zs;
}

/// Real zeros of M_n(x; beta, c), each bracket refined to width <= width.
inline ZeroSet zeros_of(const MeixnerParams& p, const Rational& width) {
  return refine_all(isolate_zeros(meixner_coeffs(p)), width);
}

/// Closed-form classification of the degree-2 member by the sign of 4 beta c + (c+1)^2.
struct QuadraticZeros {
  enum class Kind { TwoReal, Double, ComplexPair };
  Kind kind;
  Rational discriminant;
  ZeroSet zeros;
  std::optional<Rational> double_root;
};

inline QuadraticZeros quadratic_zeros(const MeixnerParams& p) {
  validate(p);
  if (p.n != 2) throw Error(ErrorCode::InvalidParams, "quadratic classification needs n = 2, got " + to_string(p));
  const Rational disc = 4 * p.beta * p.c + (p.c + 1) * (p.c + 1);
  QuadraticZeros out{QuadraticZeros::Kind::ComplexPair, disc, {}, std::nullopt};
  if (disc.sign() < 0) {
    out.zeros.degree = 2;
    return out;
  }
  out.zeros = isolate_zeros(meixner_coeffs(p));
  if (disc.sign() == 0) {
    out.kind = QuadraticZeros::Kind::Double;
    out.double_root = (2 * p.beta * p.c + p.c + 1) / (2 * (1 - p.c));
  } else {
    out.kind = QuadraticZeros::Kind::TwoReal;
  }
  return out;
}

}  // namespace qmeixner
