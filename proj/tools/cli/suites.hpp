#pragma once

#include "grid.hpp"
#include "report.hpp"

#include <qmeixner/analysis.hpp>
#include <qmeixner/identities.hpp>
#include <qmeixner/qsums.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace qmeixner::cli {

using VerdictList = std::vector<Verdict>;
using PointCheck = std::function<Verdict(const MeixnerParams&)>;

inline constexpr std::array<std::string_view, 11> kSuiteNames = {
    "identities", "bounds",      "qo1",  "qo2",          "interlacing", "order2-vs-orth",
    "consecutive-qo2", "orthogonal", "qsums", "monotonicity", "all"};

inline bool is_suite(std::string_view name) {
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

/// Runs a check and turns library errors into FAIL records, so nothing is silently dropped.
inline Verdict guarded(const std::string& id, const MeixnerParams& p, const std::function<Verdict()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return make_verdict(Status::Fail, id, p, std::string("error: ") + e.what());
  }
}

/// qsums at one point: order from the expansion, truncation chosen adaptively.
/// INCONCLUSIVE moments give NOT_APPLICABLE.
inline Verdict verify_qsums(const MeixnerParams& p) {
  const std::string id = "qsums";
  if (!in_unit_interval(p.c) || p.beta <= -2 || (is_integer(p.beta) && p.beta <= 0))
    return make_verdict(Status::NotApplicable, id, p, "needs 0 < c < 1, beta > -2 off the non-positive integers");
  const int r = quasi_orth_order_by_expansion(p.beta, p.c, p.n);
  if ((p.beta + r).sign() <= 0)
    return make_verdict(Status::NotApplicable, id, p, "degree below the order; weight at beta + r is not positive");
  const long X = choose_truncation(p, r);
  const QSumReport rep = quasi_orth_sums(p, r, X);
  Verdict v = make_verdict(Status::Pass, id, p);
  v.with(Witness::value("r", Rational(r))).with(Witness::value("X", Rational(X)));
  bool inconclusive = false, consistent = true;
  for (const auto& mo : rep.moments) {
    const bool last = mo.m == p.n - r;
    if (mo.cls == MomentClass::Inconclusive) inconclusive = true;
    else if (last ? mo.cls != MomentClass::Nonzero : mo.cls != MomentClass::Vanishes) consistent = false;
    if (last || mo.cls != MomentClass::Vanishes) {
      v.with(Witness::value("S_" + std::to_string(mo.m), mo.sum));
      v.with(Witness::value("bound_" + std::to_string(mo.m), mo.tail_bound));
    }
  }
  if (!consistent) {
    v.status = Status::Fail;
    v.detail = "moment pattern does not match order " + std::to_string(r);
  } else if (inconclusive) {
    v.status = Status::NotApplicable;
    v.detail = "a moment is within a factor 2 of its tail bound";
  } else {
    v.detail = "moments m < " + std::to_string(p.n - r) + " vanish, m = " + std::to_string(p.n - r) + " does not";
  }
  return v;
}

inline std::vector<PointCheck> identity_checks() {
  std::vector<PointCheck> out;
  for (auto k : kAllIdentities) out.push_back([k](const MeixnerParams& p) { return check_identity(k, p); });
  return out;
}

inline std::vector<PointCheck> qo1_checks() {
  return {verify_bounds_qo1, verify_qo1_node_zero, verify_qo1_stieltjes_node, verify_qo1_shifted_node,
          verify_qo1_raised_node};
}

inline std::vector<PointCheck> qo2_checks() { return {verify_bounds_qo2, verify_qo2_shift2_interlacing}; }

inline std::vector<PointCheck> orthogonal_checks() {
  return {verify_lemma_first_zeros, verify_orthogonal_interlacing,
          [](const MeixnerParams& p) { return verify_zero_separation(p); }};
}

inline std::vector<PointCheck> point_checks(std::string_view suite) {
  auto cat = [](std::vector<PointCheck> a, const std::vector<PointCheck>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (suite == "identities") return identity_checks();
  if (suite == "bounds") return {verify_bounds_qo1, verify_bounds_qo2};
  if (suite == "qo1") return qo1_checks();
  if (suite == "qo2") return qo2_checks();
  if (suite == "interlacing")
    return {verify_qo2_shift2_interlacing, verify_qo1_node_zero,   verify_qo1_stieltjes_node,
            verify_qo1_shifted_node,       verify_qo1_raised_node, verify_thm_order2_vs_orthogonal,
            verify_consecutive_qo2};
  if (suite == "order2-vs-orth") return {verify_thm_order2_vs_orthogonal};
  if (suite == "consecutive-qo2") return {verify_consecutive_qo2};
  if (suite == "orthogonal") return orthogonal_checks();
  if (suite == "qsums") return {verify_qsums};
  if (suite == "all") {
    auto v = cat(identity_checks(), qo1_checks());
    v = cat(v, qo2_checks());
    v = cat(v, {verify_thm_order2_vs_orthogonal, verify_consecutive_qo2});
    return cat(cat(v, orthogonal_checks()), {verify_qsums});
  }
  return {};
}

/// One unit of work: produces a fixed block of records.
struct Task {
  std::string suite;
  std::function<VerdictList()> run;
};

/// Order-1 grid pairs get the negative-zero scan up to n_max; the order-2 counterexample at
/// c = 1/5, n = 5 is always appended.
inline std::vector<Task> monotonicity_tasks(const GridSpec& g) {
  std::vector<Task> tasks;
  for (const auto& b : g.beta_values)
    for (const auto& c : g.c_values) {
      if (regime_of(b, c) != Regime::QuasiOrder1 || g.n_max < 2) continue;
      tasks.push_back({"monotonicity", [b, c, n = g.n_max, w = g.width] {
                         const MeixnerParams p{n, b, c};
                         return VerdictList{guarded("monotonicity-negative-zero", p, [&] {
                           const auto rep = scan_negative_zero_monotonicity(b, c, n, w);
                           Verdict v = make_verdict(rep.holds ? Status::Pass : Status::Fail,
                                                    "monotonicity-negative-zero", p, rep.detail);
                           v.with(Witness::value("beta c/(1-c)", b * c / (1 - c)));
                           for (const auto& [k, iv] : rep.tracked)
                             v.with(Witness::interval("z_{1," + std::to_string(k) + "}", iv.lo, iv.hi));
                           return v;
                         })};
                       }});
    }
  tasks.push_back({"monotonicity", [w = g.width] {
                     const MeixnerParams p{5, Rational(-19, 10), Rational(1, 5)};
                     return VerdictList{guarded("monotonicity-beta-counterexample", p, [&] {
                       const auto rep = compare_zero_across_beta(Rational(-19, 10), Rational(-9, 5), Rational(1, 5), 5, 2, w);
                       Verdict v = make_verdict(rep.holds ? Status::Pass : Status::Fail,
                                                "monotonicity-beta-counterexample", p, rep.detail + " (-1.9 -> -1.8)");
                       v.with(Witness::interval("x_{2,5}(beta=-1.9)", rep.tracked[0].second.lo, rep.tracked[0].second.hi));
                       v.with(Witness::interval("x_{2,5}(beta=-1.8)", rep.tracked[1].second.lo, rep.tracked[1].second.hi));
                       return v;
                     })};
                   }});
  return tasks;
}

/// Tasks in grid order: beta outer, c, then n.
inline std::vector<Task> suite_tasks(std::string_view suite, const GridSpec& g) {
  std::vector<Task> tasks;
  if (suite == "monotonicity") return monotonicity_tasks(g);
  const auto checks = point_checks(suite);
  for (const auto& b : g.beta_values)
    for (const auto& c : g.c_values)
      for (int n = g.n_min; n <= g.n_max; ++n) {
        const MeixnerParams p{n, b, c};
        tasks.push_back({std::string(suite), [checks, p, name = std::string(suite)] {
                           VerdictList out;
                           for (const auto& check : checks) out.push_back(guarded(name, p, [&] { return check(p); }));
                           return out;
                         }});
      }
  if (suite == "all")
    for (auto& t : monotonicity_tasks(g)) tasks.push_back(std::move(t));
  return tasks;
}

/// Runs tasks on `jobs` threads; records come back in task order whatever the completion order.
inline std::vector<ReportRecord> run_tasks(const std::vector<Task>& tasks, int jobs) {
  struct Slot {
    VerdictList verdicts;
    double ms = 0;
  };
  std::vector<Slot> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      slots[i].verdicts = tasks[i].run();
      slots[i].ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<ReportRecord> records;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const double per = slots[i].verdicts.empty() ? 0.0 : slots[i].ms / static_cast<double>(slots[i].verdicts.size());
    for (auto& v : slots[i].verdicts) records.push_back({tasks[i].suite, std::move(v), per});
  }
  return records;
}

inline std::vector<ReportRecord> run_suite(std::string_view suite, const GridSpec& g, int jobs = 1) {
  if (!is_suite(suite)) throw Error(ErrorCode::InvalidParams, "unknown suite '" + std::string(suite) + "'");
  g.validate();
  return run_tasks(suite_tasks(suite, g), jobs);
}

}  // namespace qmeixner::cli
