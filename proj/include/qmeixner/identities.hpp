#pragma once

#include "meixner.hpp"
#include "polynomial.hpp"
#include "verdict.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace qmeixner {

/// The five exact mixed-recurrence identities linking M_n at shifted degree and beta.
///
///   Order1:  M_n(b) = M_n(b+1) - n c/(c-1) M_{n-1}(b+1)
///   Order2:  M_n(b) = M_n(b+2) + 2n c/(1-c) M_{n-1}(b+2) + n(n-1) (c/(c-1))^2 M_{n-2}(b+2)
///   RaisedNode (node C_n = -b + (n+1)c/(1-c)):
///            (b+n)/(1-c) M_n(b) = (x - C_n) M_n(b+1) - M_{n+1}(b+1)
///   ShiftTwoNode (node A_n = b/(c-1) - b - n - 1):
///            (b/n + 1) M_n(b) = (b/n + 1 - c) M_n(b+2) + c (x - A_n) M_{n-1}(b+2)
///   Consecutive:
///            (x + b(c-2)/(c-1) + n) M_n(b) = -(b+n-1)(b-cn+n)/(c-1)^2 M_{n-1}(b) + (x+b)(x+b+1) M_{n-1}(b+2)
enum class IdentityKind { Order1, Order2, RaisedNode, ShiftTwoNode, Consecutive };

inline constexpr std::array<IdentityKind, 5> kAllIdentities = {
    IdentityKind::Order1, IdentityKind::Order2, IdentityKind::RaisedNode, IdentityKind::ShiftTwoNode,
    IdentityKind::Consecutive};

constexpr std::string_view to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::Order1: return "order1";
    case IdentityKind::Order2: return "order2";
    case IdentityKind::RaisedNode: return "raised-node";
    case IdentityKind::ShiftTwoNode: return "shift2-node";
    case IdentityKind::Consecutive: return "consecutive";
  }
  return "unknown";
}

inline std::optional<IdentityKind> parse_identity_kind(std::string_view s) {
  for (auto k : kAllIdentities)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

/// C_n = -beta + (n+1) c / (1-c)
inline Rational raised_node(const MeixnerParams& p) { return -p.beta + Rational(p.n + 1) * p.c / (1 - p.c); }

/// A_n = beta/(c-1) - beta - n - 1
inline Rational shift_two_node(const MeixnerParams& p) { return p.beta / (p.c - 1) - p.beta - p.n - 1; }

namespace detail {

/// M_degree(x; beta + shift, c), zero for negative degree.
inline Polynomial member(const MeixnerParams& p, int degree, long shift) {
  if (degree < 0) return {};
  return meixner_coeffs({degree, p.beta + shift, p.c});
}

struct IdentitySides {
  Polynomial lhs;
  Polynomial rhs;
};

inline IdentitySides expand_identity(IdentityKind kind, const MeixnerParams& p) {
  const int n = p.n;
  const Rational& b = p.beta;
  const Rational& c = p.c;
  const Rational cm1 = c - 1;
  const Polynomial x = Polynomial::x();
  switch (kind) {
    case IdentityKind::Order1:
      return {member(p, n, 0), member(p, n, 1) - (Rational(n) * c / cm1) * member(p, n - 1, 1)};
    case IdentityKind::Order2: {
      const Rational ratio = c / cm1;
      return {member(p, n, 0), member(p, n, 2) + (Rational(2 * n) * c / (1 - c)) * member(p, n - 1, 2) +
                                   (Rational(n) * (n - 1) * ratio * ratio) * member(p, n - 2, 2)};
    }
    case IdentityKind::RaisedNode:
      return {((b + n) / (1 - c)) * member(p, n, 0),
              (x - Polynomial::constant(raised_node(p))) * member(p, n, 1) - member(p, n + 1, 1)};
    case IdentityKind::ShiftTwoNode: {
      const Rational scale = b / n + 1;
      return {scale * member(p, n, 0), (scale - c) * member(p, n, 2) +
                                           c * (x - Polynomial::constant(shift_two_node(p))) * member(p, n - 1, 2)};
    }
    case IdentityKind::Consecutive: {
      const Polynomial left_factor({b * (c - 2) / cm1 + n, Rational(1)});
      const Polynomial rising2 = Polynomial({b, Rational(1)}) * Polynomial({b + 1, Rational(1)});
      return {left_factor * member(p, n, 0),
              (-(b + n - 1) * (b - c * n + n) / (cm1 * cm1)) * member(p, n - 1, 0) + rising2 * member(p, n - 1, 2)};
    }
  }
  throw Error(ErrorCode::Unsupported, "unknown identity kind");
}

inline int minimum_degree(IdentityKind kind) { return kind == IdentityKind::RaisedNode ? 0 : 1; }

}  // namespace detail

/// Expands both sides exactly and compares every coefficient. Zero tolerance.
inline Verdict check_identity(IdentityKind kind, const MeixnerParams& p) {
  validate(p);
  const std::string id = "identity-" + std::string(to_string(kind));
  if (p.n < detail::minimum_degree(kind))
    return make_verdict(Status::Degenerate, id, p,
                        "identity undefined below degree " + std::to_string(detail::minimum_degree(kind)));
  auto [lhs, rhs] = detail::expand_identity(kind, p);
  const std::size_t len = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (lhs[i] != rhs[i]) {
      return make_verdict(Status::Fail, id, p, "coefficient of x^" + std::to_string(i) + " differs")
          .with(Witness::value("index", Rational(static_cast<long>(i))))
          .with(Witness::value("lhs", lhs[i]))
          .with(Witness::value("rhs", rhs[i]));
    }
  }
  Verdict v = make_verdict(Status::Pass, id, p, "all " + std::to_string(len) + " coefficients agree");
  if (kind == IdentityKind::RaisedNode) v.with(Witness::value("C_n", raised_node(p)));
  if (kind == IdentityKind::ShiftTwoNode) v.with(Witness::value("A_n", shift_two_node(p)));
  return v;
}

}  // namespace qmeixner
