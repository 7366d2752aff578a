#pragma once

#include "error.hpp"
#include "polynomial.hpp"
#include "verdict.hpp"
#include "zeros.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace qmeixner {

/// A real point located either exactly or as a sign-change bracket of a squarefree polynomial.
/// Comparisons refine the bracket in place, so a Point only ever gets narrower.
struct Point {
  IsolatingInterval iv;
  Polynomial reduced;  // empty for exact points
  std::string label;

  static Point exact(const Rational& value, std::string label = {}) {
    return {IsolatingInterval::point(value), {}, std::move(label)};
  }
  bool is_exact() const { return iv.exact.has_value(); }
  Witness witness() const { return Witness::interval(label, iv.lo, iv.hi); }
};

/// Points for every distinct root of the set, labelled prefix_1, prefix_2, ...
inline std::vector<Point> points_of(const ZeroSet& zs, const std::string& prefix = "x") {
  std::vector<Point> out;
  out.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const auto& iv = zs[i];
    out.push_back({iv, iv.exact ? Polynomial{} : zs.reduced, prefix + "_" + std::to_string(i + 1)});
  }
  return out;
}

namespace detail {

inline constexpr int kMaxBisections = 20000;

/// Sign of the bracketed root of `interval` relative to `node`, where node lies in [lo, hi].
inline int compare_bracket_to_exact(Point& interval, const Rational& node) {
  const int at_node = interval.reduced.sign_at(node);
  if (at_node == 0) {
    interval.iv = IsolatingInterval::point(node, interval.iv.multiplicity);
    return 0;
  }
  if (node == interval.iv.lo) return 1;
  if (node == interval.iv.hi) return -1;
  if (at_node == interval.reduced.sign_at(interval.iv.lo)) {
    interval.iv.lo = node;
    return 1;
  }
  interval.iv.hi = node;
  return -1;
}

/// True when a and b bracket one and the same root: some common factor vanishes in both brackets.
inline bool share_root(const Point& a, const Point& b) {
  const Polynomial g = gcd(a.reduced, b.reduced);
  if (g.is_constant()) return false;
  const Rational lo = max(a.iv.lo, b.iv.lo), hi = min(a.iv.hi, b.iv.hi);
  if (hi < lo) return false;
  if (g.sign_at(lo) == 0) return true;
  return count_with_chain(sturm_chain(g), lo, hi) > 0;
}

}  // namespace detail

/// -1, 0, +1 as a < b, a == b, a > b. Equality is decided exactly (identical exact values,
/// a node that is a root, or a shared factor with a root in both brackets).
inline int compare(Point& a, Point& b) {
  bool checked_common = false;
  for (int step = 0; step < detail::kMaxBisections; ++step) {
    if (a.iv.hi < b.iv.lo) return -1;
    if (b.iv.hi < a.iv.lo) return 1;
    if (a.is_exact() && b.is_exact()) return *a.iv.exact == *b.iv.exact ? 0 : (*a.iv.exact < *b.iv.exact ? -1 : 1);
    if (a.is_exact()) return -detail::compare_bracket_to_exact(b, *a.iv.exact);
    if (b.is_exact()) return detail::compare_bracket_to_exact(a, *b.iv.exact);
    if (!checked_common) {
      if (a.reduced.is_zero() || b.reduced.is_zero())
        throw Error(ErrorCode::Unresolved, "overlapping brackets without a polynomial to refine: " + a.label + ", " + b.label);
      if (detail::share_root(a, b)) return 0;
      checked_common = true;
    }
    Point& wider = a.iv.width() >= b.iv.width() ? a : b;
    detail::bisect_once(wider.reduced, wider.iv);
  }
  throw Error(ErrorCode::Unresolved, "could not separate " + a.label + " and " + b.label);
}

inline int compare(Point& a, const Rational& value) {
  Point v = Point::exact(value);
  return compare(a, v);
}

/// Outcome of checking a strictly increasing chain of points.
struct ChainCheck {
  enum class Outcome { Ordered, Violated, Collision };
  Outcome outcome = Outcome::Ordered;
  std::size_t index = 0;  // the failing pair is (index, index + 1)

  bool ordered() const { return outcome == Outcome::Ordered; }
};

inline ChainCheck check_chain(std::vector<Point>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const int cmp = compare(chain[i], chain[i + 1]);
    if (cmp == 0) return {ChainCheck::Outcome::Collision, i};
    if (cmp > 0) return {ChainCheck::Outcome::Violated, i};
  }
  return {};
}

/// Strictly positive roots only.
inline std::vector<Point> positive_points(std::vector<Point> points) {
  std::vector<Point> out;
  for (auto& p : points)
    if (compare(p, Rational(0)) > 0) out.push_back(std::move(p));
  return out;
}

/// Sorted merge; returns nullopt when two points coincide.
inline std::optional<std::vector<Point>> merge_sorted(std::vector<Point> a, std::vector<Point> b) {
  std::vector<Point> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int cmp = compare(a[i], b[j]);
    if (cmp == 0) return std::nullopt;
    out.push_back(cmp < 0 ? std::move(a[i++]) : std::move(b[j++]));
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

enum class InterlacePattern {
  Enclosing,  // |a| = |b| + 1: a_1 < b_1 < a_2 < ... < b_k < a_{k+1}
  AFirst,     // |a| = |b|:     a_1 < b_1 < ... < a_k < b_k
  BFirst,     // |a| = |b|:     b_1 < a_1 < ... < b_k < a_k
  Any,        // Enclosing when |a| = |b| + 1, otherwise AFirst or BFirst
};

struct InterlaceCheck {
  ChainCheck chain;
  std::vector<Point> sequence;  // the alternating sequence that was tested

  bool interlaced() const { return chain.ordered(); }
};

namespace detail {

inline std::vector<Point> alternate(const std::vector<Point>& first, const std::vector<Point>& second) {
  std::vector<Point> seq;
  for (std::size_t i = 0; i < first.size(); ++i) {
    seq.push_back(first[i]);
    if (i < second.size()) seq.push_back(second[i]);
  }
  return seq;
}

}  // namespace detail

/// Tests strict alternation of two point lists with the given pattern.
inline InterlaceCheck interlace(const std::vector<Point>& a, const std::vector<Point>& b,
                                InterlacePattern pattern = InterlacePattern::Any) {
  auto mismatch = [&] {
    return Error(ErrorCode::SizeMismatch, "interlacing needs sizes (k+1, k) or (k, k); got (" +
                                              std::to_string(a.size()) + ", " + std::to_string(b.size()) + ")");
  };
  if (pattern == InterlacePattern::Any) {
    if (a.size() == b.size() + 1) {
      pattern = InterlacePattern::Enclosing;
    } else if (a.size() == b.size()) {
      InterlaceCheck first = interlace(a, b, InterlacePattern::AFirst);
      if (first.interlaced() || first.chain.outcome == ChainCheck::Outcome::Collision) return first;
      return interlace(a, b, InterlacePattern::BFirst);
    } else {
      throw mismatch();
    }
  }
  InterlaceCheck out;
  switch (pattern) {
    case InterlacePattern::Enclosing:
      if (a.size() != b.size() + 1) throw mismatch();
      out.sequence = detail::alternate(a, b);
      break;
    case InterlacePattern::AFirst:
      if (a.size() != b.size()) throw mismatch();
      out.sequence = detail::alternate(a, b);
      break;
    case InterlacePattern::BFirst:
      if (a.size() != b.size()) throw mismatch();
      out.sequence = detail::alternate(b, a);
      break;
    case InterlacePattern::Any: break;
  }
  out.chain = check_chain(out.sequence);
  return out;
}

/// True iff b's i-th root lies strictly between a's i-th and (i+1)-th roots, for |a| = |b| + 1.
/// Equal sizes are accepted in either alternation. A common root throws Unresolved.
inline bool check_interlacing(const ZeroSet& a, const ZeroSet& b) {
  InterlaceCheck res = interlace(points_of(a, "a"), points_of(b, "b"));
  if (res.chain.outcome == ChainCheck::Outcome::Collision)
    throw Error(ErrorCode::Unresolved, "common zero " + res.sequence[res.chain.index].label + " = " +
                                           res.sequence[res.chain.index + 1].label);
  return res.interlaced();
}

/// Verdict for an interlacing claim; witnesses locate the failing pair on FAIL or DEGENERATE.
inline Verdict interlace_verdict(const InterlaceCheck& res, std::string theorem_id, const MeixnerParams& params) {
  if (res.interlaced()) return make_verdict(Status::Pass, std::move(theorem_id), params, "zeros interlace");
  const auto& left = res.sequence[res.chain.index];
  const auto& right = res.sequence[res.chain.index + 1];
  if (res.chain.outcome == ChainCheck::Outcome::Collision)
    return make_verdict(Status::Degenerate, std::move(theorem_id), params, "common zero " + left.label + " = " + right.label)
        .with(left.witness())
        .with(right.witness());
  return make_verdict(Status::Fail, std::move(theorem_id), params, "order broken: " + left.label + " >= " + right.label)
      .with(left.witness())
      .with(right.witness());
}

/// Adjoins the exact node to `small`, then tests interlacing of the merged set against `big`.
/// A node that coincides with a root of either set is a common zero: DEGENERATE.
inline Verdict check_interlacing_with_node(std::vector<Point> big, std::vector<Point> small, const Rational& node,
                                           std::string theorem_id = "interlace-with-node", const MeixnerParams& params = {},
                                           InterlacePattern pattern = InterlacePattern::Any) {
  const std::size_t merged_size = small.size() + 1;
  if (!(big.size() == merged_size + 1 || big.size() == merged_size))
    throw Error(ErrorCode::SizeMismatch, "node interlacing needs |big| = |small| + 2 or |small| + 1; got (" +
                                             std::to_string(big.size()) + ", " + std::to_string(small.size()) + ")");
  Point node_point = Point::exact(node, "node");
  for (auto& p : big)
    if (compare(p, node_point) == 0)
      return make_verdict(Status::Degenerate, std::move(theorem_id), params, "node is a zero of " + p.label)
          .with(Witness::value("node", node));
  auto merged = merge_sorted(std::move(small), {node_point});
  if (!merged)
    return make_verdict(Status::Degenerate, std::move(theorem_id), params, "node is a zero of the smaller polynomial")
        .with(Witness::value("node", node));
  Verdict v = interlace_verdict(interlace(big, *merged, pattern), std::move(theorem_id), params);
  v.with(Witness::value("node", node));
  return v;
}

inline Verdict check_interlacing_with_node(const ZeroSet& big, const ZeroSet& small, const Rational& node) {
  return check_interlacing_with_node(points_of(big, "big"), points_of(small, "small"), node);
}

}  // namespace qmeixner
