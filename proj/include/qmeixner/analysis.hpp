#pragma once

#include "identities.hpp"
#include "interlacing.hpp"
#include "meixner.hpp"
#include "verdict.hpp"
#include "zeros.hpp"

#include <string>
#include <vector>

namespace qmeixner {

/// Parameter regimes, all with 0 < c < 1.
enum class Regime { Orthogonal, QuasiOrder1, QuasiOrder2, Other };

inline bool in_unit_interval(const Rational& c) { return c.sign() > 0 && c < 1; }

inline Regime regime_of(const Rational& beta, const Rational& c) {
  if (!in_unit_interval(c)) return Regime::Other;
  if (beta.sign() > 0) return Regime::Orthogonal;
  if (beta > -1 && beta < 0) return Regime::QuasiOrder1;
  if (beta > -2 && beta < -1) return Regime::QuasiOrder2;
  return Regime::Other;
}

/// beta/(c-1): above it every zero of the order-2 member is real, simple and positive.
inline Rational positivity_threshold(const MeixnerParams& p) { return p.beta / (p.c - 1); }

namespace detail {

inline std::vector<Point> zero_points(const MeixnerParams& p, const std::string& prefix) {
  return points_of(isolate_zeros(meixner_coeffs(p)), prefix);
}

inline Verdict not_applicable(std::string id, const MeixnerParams& p, std::string why) {
  return make_verdict(Status::NotApplicable, std::move(id), p, std::move(why));
}

inline Verdict chain_verdict(std::vector<Point> chain, std::string id, const MeixnerParams& p) {
  ChainCheck res = check_chain(chain);
  if (res.ordered()) {
    Verdict v = make_verdict(Status::Pass, std::move(id), p, "ordering holds");
    for (const auto& pt : chain) v.with(pt.witness());
    return v;
  }
  const auto& l = chain[res.index];
  const auto& r = chain[res.index + 1];
  const Status s = res.outcome == ChainCheck::Outcome::Collision ? Status::Degenerate : Status::Fail;
  return make_verdict(s, std::move(id), p, "expected " + l.label + " < " + r.label).with(l.witness()).with(r.witness());
}

/// Every root real, simple and (optionally) positive; otherwise a FAIL verdict.
inline std::optional<Verdict> require_real_simple(const ZeroSet& zs, const MeixnerParams& p, const std::string& id,
                                                  bool positive) {
  if (zs.real_count != p.n || zs.size() != static_cast<std::size_t>(p.n))
    return make_verdict(Status::Fail, id, p,
                        "expected " + std::to_string(p.n) + " simple real zeros, found " + std::to_string(zs.size()))
        .with(Witness::value("real_count", Rational(zs.real_count)));
  if (positive && zs.size() > 0) {
    Point first = points_of(zs, "x")[0];
    if (compare(first, Rational(0)) <= 0)
      return make_verdict(Status::Fail, id, p, "smallest zero is not positive").with(first.witness());
  }
  return std::nullopt;
}

}  // namespace detail

/// z_{1,n} < 0 < 1 < z_{2,n} for -1 < beta < 0, 0 < c < 1, n >= 2.
inline Verdict verify_bounds_qo1(const MeixnerParams& p) {
  const std::string id = "qo1-bounds";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder1 || p.n < 2)
    return detail::not_applicable(id, p, "needs -1 < beta < 0, 0 < c < 1, n >= 2");
  auto z = detail::zero_points(p, "z");
  if (z.size() < 2) return make_verdict(Status::Fail, id, p, "fewer than two real zeros");
  return detail::chain_verdict({z[0], Point::exact(Rational(0), "0"), Point::exact(Rational(1), "1"), z[1]}, id, p);
}

/// 0 < x_1 < -beta-1 < x_2 < 1 < -beta < 2 < x_3 for -2 < beta < -1, 0 < c < 1, n > beta/(c-1).
inline Verdict verify_bounds_qo2(const MeixnerParams& p) {
  const std::string id = "qo2-bounds";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder2 || p.n < 3)
    return detail::not_applicable(id, p, "needs -2 < beta < -1, 0 < c < 1, n >= 3");
  const Rational threshold = positivity_threshold(p);
  if (!(Rational(p.n) > threshold))
    return detail::not_applicable(id, p, "n <= beta/(c-1)").with(Witness::value("beta/(c-1)", threshold));
  auto x = detail::zero_points(p, "x");
  if (x.size() < 3) return make_verdict(Status::Fail, id, p, "fewer than three real zeros");
  Verdict v = detail::chain_verdict({Point::exact(Rational(0), "0"), x[0], Point::exact(-p.beta - 1, "-beta-1"), x[1],
                                     Point::exact(Rational(1), "1"), Point::exact(-p.beta, "-beta"),
                                     Point::exact(Rational(2), "2"), x[2]},
                                    id, p);
  return v.with(Witness::value("beta/(c-1)", threshold));
}

/// Order-2 members above the threshold: n simple positive zeros interlacing with M_{n-1}(beta+2).
inline Verdict verify_qo2_shift2_interlacing(const MeixnerParams& p) {
  const std::string id = "qo2-shift2-interlace";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder2 || p.n < 3)
    return detail::not_applicable(id, p, "needs -2 < beta < -1, 0 < c < 1, n >= 3");
  if (!(Rational(p.n) > positivity_threshold(p)))
    return detail::not_applicable(id, p, "n <= beta/(c-1)").with(Witness::value("beta/(c-1)", positivity_threshold(p)));
  ZeroSet xs = isolate_zeros(meixner_coeffs(p));
  if (auto bad = detail::require_real_simple(xs, p, id, true)) return *bad;
  auto y = detail::zero_points({p.n - 1, p.beta + 2, p.c}, "y");
  return interlace_verdict(interlace(points_of(xs, "x"), y, InterlacePattern::Enclosing), id, p);
}

/// Order 1: zeros of x M_{n-1}(beta) interlace with those of M_n(beta), n >= 3.
inline Verdict verify_qo1_node_zero(const MeixnerParams& p) {
  const std::string id = "qo1-node-zero";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder1 || p.n < 3)
    return detail::not_applicable(id, p, "needs -1 < beta < 0, 0 < c < 1, n >= 3");
  return check_interlacing_with_node(detail::zero_points(p, "z"), detail::zero_points(p.with_degree(p.n - 1), "w"),
                                     Rational(0), id, p);
}

/// Stieltjes node (beta c + (c+1)(n-1))/(1-c): positive zeros of (x - node) M_{n-2}(beta)
/// interlace with the positive zeros of M_n(beta), n >= 4, unless M_n(node) = 0.
inline Rational stieltjes_node(const MeixnerParams& p) {
  return (p.beta * p.c + (p.c + 1) * (p.n - 1)) / (1 - p.c);
}

inline Verdict verify_qo1_stieltjes_node(const MeixnerParams& p) {
  const std::string id = "qo1-stieltjes-node";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder1 || p.n < 4)
    return detail::not_applicable(id, p, "needs -1 < beta < 0, 0 < c < 1, n >= 4");
  const Rational node = stieltjes_node(p);
  const Rational at_node = meixner_eval_recurrence(p, node);
  if (at_node.sign() == 0)
    return make_verdict(Status::Degenerate, id, p, "M_n(node) = 0: common zero with M_{n-2}")
        .with(Witness::value("node", node))
        .with(Witness::value("M_n(node)", at_node));
  auto big = positive_points(detail::zero_points(p, "z"));
  auto small = positive_points(detail::zero_points(p.with_degree(p.n - 2), "w"));
  if (node.sign() <= 0) return make_verdict(Status::Fail, id, p, "node is not positive").with(Witness::value("node", node));
  return check_interlacing_with_node(std::move(big), std::move(small), node, id, p);
}

/// Node (beta c + n - 1)/(1-c): zeros of (x - node) M_{n-2}(beta+1) interlace with the n-1
/// positive zeros of M_n(beta), n >= 3, unless M_n(node) = 0.
inline Rational shifted_node(const MeixnerParams& p) { return (p.beta * p.c + p.n - 1) / (1 - p.c); }

inline Verdict verify_qo1_shifted_node(const MeixnerParams& p) {
  const std::string id = "qo1-shifted-node";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder1 || p.n < 3)
    return detail::not_applicable(id, p, "needs -1 < beta < 0, 0 < c < 1, n >= 3");
  const Rational node = shifted_node(p);
  const Rational at_node = meixner_eval_recurrence(p, node);
  if (at_node.sign() == 0)
    return make_verdict(Status::Degenerate, id, p, "M_n(node) = 0: common zero with M_{n-2}(beta+1)")
        .with(Witness::value("node", node))
        .with(Witness::value("M_n(node)", at_node));
  auto big = positive_points(detail::zero_points(p, "z"));
  auto small = detail::zero_points({p.n - 2, p.beta + 1, p.c}, "y");
  return check_interlacing_with_node(std::move(big), std::move(small), node, id, p);
}

/// Node C_n: the n+1 zeros of (x - C_n) M_n(beta) interlace with those of M_{n+1}(beta+1),
/// unless M_n(C_n) = 0.
inline Verdict verify_qo1_raised_node(const MeixnerParams& p) {
  const std::string id = "qo1-raised-node";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder1 || p.n < 2)
    return detail::not_applicable(id, p, "needs -1 < beta < 0, 0 < c < 1, n >= 2");
  const Rational node = raised_node(p);
  const Rational at_node = meixner_eval_recurrence(p, node);
  if (at_node.sign() == 0)
    return make_verdict(Status::Degenerate, id, p, "M_n(C_n) = 0: common zero with M_{n+1}(beta+1)")
        .with(Witness::value("C_n", node))
        .with(Witness::value("M_n(C_n)", at_node));
  auto big = detail::zero_points({p.n + 1, p.beta + 1, p.c}, "y");
  auto small = detail::zero_points(p, "z");
  Verdict v = check_interlacing_with_node(std::move(big), std::move(small), node, id, p);
  return v.with(Witness::value("C_n", node));
}

/// Order-2 member against its orthogonal counterpart M_n(beta+2), with node
/// A_n = beta/(c-1) - beta - n - 1.
///   (a) n >= beta/(c-1) - (beta+1): A_n <= 0 and x_1 < y_1 < x_2 < ... < x_n < y_n.
///   (b) beta/(c-1) < n < beta/(c-1) - (beta+1): unless M_n(A_n) = 0 (DEGENERATE),
///       interlacing holds iff A_n < y_1.
inline Verdict verify_thm_order2_vs_orthogonal(const MeixnerParams& p) {
  const std::string id = "qo2-vs-orthogonal";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder2 || p.n < 3)
    return detail::not_applicable(id, p, "needs -2 < beta < -1, 0 < c < 1, n >= 3");
  const Rational threshold = positivity_threshold(p);
  const Rational upper = threshold - (p.beta + 1);
  const Rational node = shift_two_node(p);
  const Rational n(p.n);
  auto x = detail::zero_points(p, "x");
  auto y = detail::zero_points(p.with_beta_shift(2), "y");

  if (n >= upper) {
    if (node.sign() > 0)
      return make_verdict(Status::Fail, id, p, "case (a) but A_n > 0").with(Witness::value("A_n", node));
    if (x.size() != y.size())
      return make_verdict(Status::Fail, id, p, "case (a) but M_n(beta) has non-real zeros")
          .with(Witness::value("real_zeros", Rational(static_cast<long>(x.size()))));
    Verdict v = interlace_verdict(interlace(x, y, InterlacePattern::AFirst), id, p);
    v.detail = "case (a): " + v.detail;
    return v.with(Witness::value("A_n", node)).with(Witness::value("beta/(c-1)-(beta+1)", upper));
  }
  if (n > threshold && n < upper) {
    const Rational at_node = meixner_eval_recurrence(p, node);
    if (at_node.sign() == 0)
      return make_verdict(Status::Degenerate, id, p, "case (b): M_n(A_n) = 0, common zero with M_n(beta+2)")
          .with(Witness::value("A_n", node))
          .with(Witness::value("M_n(A_n)", at_node));
    if (x.size() != y.size())
      return make_verdict(Status::Fail, id, p, "case (b) but M_n(beta) has non-real zeros");
    const bool interlaced = interlace(x, y, InterlacePattern::AFirst).interlaced();
    Point node_point = Point::exact(node, "A_n");
    const bool below_first = compare(node_point, y[0]) < 0;
    const Status s = interlaced == below_first ? Status::Pass : Status::Fail;
    return make_verdict(s, id, p,
                        std::string("case (b): interlace=") + (interlaced ? "yes" : "no") +
                            ", A_n<y_1=" + (below_first ? "yes" : "no"))
        .with(Witness::value("A_n", node))
        .with(y[0].witness());
  }
  return detail::not_applicable(id, p, "n outside both cases").with(Witness::value("beta/(c-1)", threshold));
}

/// Order 2, n-1 > beta/(c-1): zeros of (x+beta) M_{n-1} and (x+beta+1) M_n realise
///   x_{1,n} < x_{1,n-1} < -beta-1 < x_{2,n-1} < x_{2,n} < -beta < x_{3,n} < x_{3,n-1} < ... < x_{n,n}.
inline Verdict verify_consecutive_qo2(const MeixnerParams& p) {
  const std::string id = "qo2-consecutive";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::QuasiOrder2 || p.n < 4)
    return detail::not_applicable(id, p, "needs -2 < beta < -1, 0 < c < 1, n >= 4");
  const Rational threshold = positivity_threshold(p);
  if (!(Rational(p.n - 1) > threshold))
    return detail::not_applicable(id, p, "n-1 <= beta/(c-1)").with(Witness::value("beta/(c-1)", threshold));
  const Polynomial mn = meixner_coeffs(p);
  const Polynomial mn1 = meixner_coeffs(p.with_degree(p.n - 1));
  const Polynomial common = gcd(mn, mn1);
  if (!common.is_constant())
    return make_verdict(Status::Degenerate, id, p, "M_n and M_{n-1} share a factor")
        .with(Witness::value("gcd_degree", Rational(common.degree())));

  auto a = points_of(isolate_zeros(mn), "x_n");
  auto b = points_of(isolate_zeros(mn1), "x_n-1");
  if (a.size() != static_cast<std::size_t>(p.n) || b.size() != static_cast<std::size_t>(p.n - 1))
    return make_verdict(Status::Fail, id, p, "expected all zeros real");
  std::vector<Point> chain{a[0], b[0], Point::exact(-p.beta - 1, "-beta-1"), b[1], a[1], Point::exact(-p.beta, "-beta")};
  for (int i = 2; i < p.n - 1; ++i) {
    chain.push_back(a[static_cast<std::size_t>(i)]);
    chain.push_back(b[static_cast<std::size_t>(i)]);
  }
  chain.push_back(a.back());
  return detail::chain_verdict(std::move(chain), id, p);
}

/// Orthogonal regime, beta > 0: y_{1,1} = beta c/(1-c) (<= beta when c <= 1/2), and
/// y_{1,n} < 1 < y_{2,n} when n > beta c/(1-c). Equality n = beta c/(1-c) is left open.
inline Verdict verify_lemma_first_zeros(const MeixnerParams& p) {
  const std::string id = "orth-first-zeros";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::Orthogonal || p.n < 1)
    return detail::not_applicable(id, p, "needs beta > 0, 0 < c < 1, n >= 1");
  const Rational expected = p.beta * p.c / (1 - p.c);
  if (p.n == 1) {
    ZeroSet zs = isolate_zeros(meixner_coeffs(p));
    if (zs.size() != 1 || !zs[0].exact || *zs[0].exact != expected)
      return make_verdict(Status::Fail, id, p, "linear zero differs from beta c/(1-c)").with(Witness::value("expected", expected));
    if (p.c <= Rational(1, 2) && expected > p.beta)
      return make_verdict(Status::Fail, id, p, "zero exceeds beta for c <= 1/2").with(Witness::value("y_1", expected));
    return make_verdict(Status::Pass, id, p, "y_1 = beta c/(1-c)").with(Witness::value("y_1", expected));
  }
  if (!(Rational(p.n) > expected))
    return detail::not_applicable(id, p, "n <= beta c/(1-c)").with(Witness::value("beta c/(1-c)", expected));
  auto y = detail::zero_points(p, "y");
  if (y.size() < 2) return make_verdict(Status::Fail, id, p, "fewer than two real zeros");
  return detail::chain_verdict({y[0], Point::exact(Rational(1), "1"), y[1]}, id, p);
}

/// Orthogonal regime: zeros of M_n and M_{n-1} interlace.
inline Verdict verify_orthogonal_interlacing(const MeixnerParams& p) {
  const std::string id = "orth-interlace";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::Orthogonal || p.n < 2)
    return detail::not_applicable(id, p, "needs beta > 0, 0 < c < 1, n >= 2");
  return interlace_verdict(
      interlace(detail::zero_points(p, "y"), detail::zero_points(p.with_degree(p.n - 1), "w"), InterlacePattern::Enclosing),
      id, p);
}

/// Orthogonal regime: n positive zeros, consecutive ones more than 1 apart. Brackets start at
/// width `width` and are narrowed until every gap is decided.
inline Verdict verify_zero_separation(const MeixnerParams& p, const Rational& width = Rational(1, 1000000)) {
  const std::string id = "orth-separation";
  validate(p);
  if (regime_of(p.beta, p.c) != Regime::Orthogonal || p.n < 1)
    return detail::not_applicable(id, p, "needs beta > 0, 0 < c < 1, n >= 1");
  ZeroSet zs = zeros_of(p, width);
  if (auto bad = detail::require_real_simple(zs, p, id, true)) return *bad;
  for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
    auto left = zs.intervals[i];
    auto right = zs.intervals[i + 1];
    Rational w = width;
    for (int step = 0;; ++step) {
      if (right.lo - left.hi > 1) break;
      if (right.hi - left.lo <= 1 || step > 200)
        return make_verdict(Status::Fail, id, p, "gap between consecutive zeros is not > 1")
            .with(Witness::interval("y_" + std::to_string(i + 1), left.lo, left.hi))
            .with(Witness::interval("y_" + std::to_string(i + 2), right.lo, right.hi));
      w /= 2;
      left = refine(zs.reduced, left, w);
      right = refine(zs.reduced, right, w);
    }
  }
  Verdict v = make_verdict(Status::Pass, id, p, "all gaps exceed 1");
  if (zs.size() > 0) v.with(Witness::interval("y_1", zs[0].lo, zs[0].hi));
  return v;
}

/// Side data of the monotonicity probes.
struct MonotonicityReport {
  bool holds = false;
  std::vector<std::pair<int, IsolatingInterval>> tracked;  // (n or beta index, zero bracket)
  std::string detail;
};

/// Order 1: the negative zero z_{1,n} increases with n and stays above beta c/(1-c).
inline MonotonicityReport scan_negative_zero_monotonicity(const Rational& beta, const Rational& c, int n_max,
                                                          const Rational& width = Rational(1, 1000000000)) {
  if (regime_of(beta, c) != Regime::QuasiOrder1)
    throw Error(ErrorCode::InvalidParams, "negative-zero scan needs -1 < beta < 0, 0 < c < 1");
  MonotonicityReport report{true, {}, {}};
  const Rational lower = beta * c / (1 - c);
  std::vector<Point> firsts;
  for (int n = 1; n <= n_max; ++n) {
    ZeroSet zs = zeros_of({n, beta, c}, width);
    if (zs.size() == 0) throw Error(ErrorCode::Unresolved, "no real zero at n=" + std::to_string(n));
    report.tracked.emplace_back(n, zs[0]);
    firsts.push_back(points_of(zs, "z1")[0]);
    firsts.back().label = "z_{1," + std::to_string(n) + "}";
  }
  Point bound = Point::exact(lower, "beta c/(1-c)");
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    const int cmp = compare(firsts[i], bound);
    if ((i == 0 && cmp != 0) || (i > 0 && cmp <= 0)) {
      report.holds = false;
      report.detail = firsts[i].label + " violates the lower bound";
      return report;
    }
    if (i > 0 && compare(firsts[i - 1], firsts[i]) >= 0) {
      report.holds = false;
      report.detail = firsts[i].label + " does not exceed its predecessor";
      return report;
    }
  }
  report.detail = "negative zero increases for n = 1.." + std::to_string(n_max);
  return report;
}

/// Compares the index-th zero of M_n at two beta values; `holds` is true when it decreases as
/// beta increases (beta_lo < beta_hi), i.e. a counterexample to monotonicity in beta.
inline MonotonicityReport compare_zero_across_beta(const Rational& beta_lo, const Rational& beta_hi, const Rational& c, int n,
                                                   int index, const Rational& width = Rational(1, 1000000000)) {
  if (!(beta_lo < beta_hi)) throw Error(ErrorCode::InvalidParams, "expected beta_lo < beta_hi");
  ZeroSet lo = zeros_of({n, beta_lo, c}, width);
  ZeroSet hi = zeros_of({n, beta_hi, c}, width);
  const auto k = static_cast<std::size_t>(index - 1);
  if (index < 1 || k >= lo.size() || k >= hi.size())
    throw Error(ErrorCode::InvalidParams, "zero index " + std::to_string(index) + " out of range");
  Point a = points_of(lo, "lo")[k];
  Point b = points_of(hi, "hi")[k];
  MonotonicityReport report;
  report.holds = compare(a, b) > 0;
  report.tracked = {{0, lo[k]}, {1, hi[k]}};
  report.detail = "x_{" + std::to_string(index) + "," + std::to_string(n) + "} " +
                  (report.holds ? "decreases" : "does not decrease") + " as beta increases";
  return report;
}

/// Order-1 branch runs the negative-zero scan; order-2 branch compares x_{2,n_max} at beta and
/// beta + 1/10.
inline MonotonicityReport scan_monotonicity(const Rational& beta, const Rational& c, int n_max) {
  switch (regime_of(beta, c)) {
    case Regime::QuasiOrder1: return scan_negative_zero_monotonicity(beta, c, n_max);
    case Regime::QuasiOrder2: return compare_zero_across_beta(beta, beta + Rational(1, 10), c, n_max, 2);
    default: throw Error(ErrorCode::InvalidParams, "monotonicity scan needs -2 < beta < 0 off the integers");
  }
}

}  // namespace qmeixner
