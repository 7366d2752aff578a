#pragma once

#include "meixner.hpp"
#include "rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmeixner {

enum class Status { Pass, Fail, NotApplicable, Degenerate };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "NOT_APPLICABLE";
    case Status::Degenerate: return "DEGENERATE";
  }
  return "UNKNOWN";
}

/// A named exact value (lo == hi) or an isolating interval for an irrational point.
struct Witness {
  std::string name;
  Rational lo;
  Rational hi;

  static Witness value(std::string name, const Rational& v) { return {std::move(name), v, v}; }
  static Witness interval(std::string name, const Rational& lo, const Rational& hi) {
    return {std::move(name), lo, hi};
  }
  bool is_exact() const { return lo == hi; }
};

/// Outcome of one theorem or identity check at one parameter point.
struct Verdict {
  Status status = Status::NotApplicable;
  std::string theorem_id;
  MeixnerParams params;
  std::vector<Witness> witnesses;
  std::string detail;

  Verdict& with(Witness w) {
    witnesses.push_back(std::move(w));
    return *this;
  }
  const Witness* find(std::string_view name) const {
    for (const auto& w : witnesses)
      if (w.name == name) return &w;
    return nullptr;
  }
};

inline Verdict make_verdict(Status status, std::string theorem_id, const MeixnerParams& p, std::string detail = {}) {
  return Verdict{status, std::move(theorem_id), p, {}, std::move(detail)};
}

}  // namespace qmeixner
