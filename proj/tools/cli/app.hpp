#pragma once

#include "grid.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "tables.hpp"

#include <qmeixner/meixner.hpp>
#include <qmeixner/qsums.hpp>
#include <qmeixner/zeros.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qmeixner::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct Options {
  std::string beta = "";
  std::string c = "";
  std::string n = "";
  std::string x = "0";
  std::string width = "";
  std::string format = "pretty";
  std::string grid_file;
  bool default_grid = false;
  int jobs = 1;
  bool timing = false;
  std::string target;  // table id or suite name
  std::string r;
  std::string X;
};

namespace detail {

inline Format format_of(const Options& o) {
  auto f = parse_format(o.format);
  if (!f) throw Error(ErrorCode::InvalidParams, "unknown format '" + o.format + "'");
  return *f;
}

inline MeixnerParams params_of(const Options& o) {
  if (o.beta.empty() || o.c.empty() || o.n.empty()) throw Error(ErrorCode::InvalidParams, "--n, --beta and --c are required");
  auto [lo, hi] = parse_range(o.n);
  if (lo != hi) throw Error(ErrorCode::InvalidParams, "--n must be a single degree here");
  MeixnerParams p{lo, parse_value(o.beta), parse_value(o.c)};
  validate(p);
  return p;
}

inline Rational width_of(const Options& o, const Rational& fallback) {
  if (o.width.empty()) return fallback;
  Rational w = parse_value(o.width);
  if (w.sign() <= 0) throw Error(ErrorCode::InvalidParams, "--width must be positive");
  return w;
}

/// Defaults, then $QMEIXNER_GRID, then --grid-file, then individual flags.
inline GridSpec grid_of(const Options& o) {
  GridSpec g = default_grid();
  if (!o.default_grid) {
    if (const char* env = std::getenv("QMEIXNER_GRID"); env && *env) g = load_grid_file(env);
    if (!o.grid_file.empty()) g = load_grid_file(o.grid_file);
  }
  if (!o.beta.empty()) g.beta_values = parse_list(o.beta);
  if (!o.c.empty()) g.c_values = parse_list(o.c);
  if (!o.n.empty()) std::tie(g.n_min, g.n_max) = parse_range(o.n);
  g.width = width_of(o, g.width);
  g.validate();
  return g;
}

inline std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

/// Left-aligned columns separated by two spaces.
inline void print_columns(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (widths.size() <= i) widths.push_back(0);
      widths[i] = std::max(widths[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "  " : "") + (i + 1 < r.size() ? pad(r[i], widths[i]) : r[i]);
    out << line << '\n';
  }
}

inline void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
    out << '\n';
  }
}

}  // namespace detail

inline int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const MeixnerParams p = detail::params_of(o);
  const Rational x = parse_value(o.x);
  const Rational value = meixner_eval_recurrence(p, x);
  const bool series_ok = !series_has_pole(p);
  if (series_ok && meixner_eval_series(p, x) != value) {
    err << "error: series and recurrence disagree at " << to_string(p) << " x=" << to_string(x) << '\n';
    return kFailure;
  }
  const std::string dec = to_decimal_trimmed(value, 17);
  switch (detail::format_of(o)) {
    case Format::Pretty:
      out << to_string(value) << '\n' << dec << '\n';
      break;
    case Format::Csv:
      detail::print_csv(out, {{"n", "beta", "c", "x", "value"}, {std::to_string(p.n), to_decimal_trimmed(p.beta),
                                                                   to_decimal_trimmed(p.c), to_decimal_trimmed(x), dec}});
      break;
    case Format::Json: {
      nlohmann::ordered_json rec{{"n", p.n},           {"beta", to_string(p.beta)}, {"c", to_string(p.c)},
                                 {"x", to_string(x)},  {"value", to_string(value)}, {"value_decimal", dec},
                                 {"series_checked", series_ok}};
      nlohmann::ordered_json doc{{"records", {rec}}, {"summary", {{"cross_checked", series_ok}}}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

inline int cmd_zeros(const Options& o, std::ostream& out, std::ostream&) {
  const MeixnerParams p = detail::params_of(o);
  const Rational width = detail::width_of(o, Rational(1, 1000000000));
  ZeroSet zs = isolate_zeros(meixner_coeffs(p));
  const int digits = digits_for_width(width);
  std::vector<std::vector<std::string>> rows{{"index", "lo", "hi", "midpoint", "multiplicity", "exact"}};
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const IsolatingInterval iv = refine_relative(zs.reduced, zs[i], width, width);
    auto [lo, hi] = render_distinct(iv.lo, iv.hi, digits);
    const std::string mid = to_decimal(iv.midpoint(), digits);
    const std::string exact = iv.exact ? to_string(*iv.exact) : "";
    rows.push_back({std::to_string(i + 1), lo, hi, mid, std::to_string(iv.multiplicity), exact});
    recs.push_back({{"index", i + 1},
                    {"lo", to_string(iv.lo)},
                    {"hi", to_string(iv.hi)},
                    {"lo_decimal", lo},
                    {"hi_decimal", hi},
                    {"midpoint_decimal", mid},
                    {"multiplicity", iv.multiplicity},
                    {"exact", iv.exact ? nlohmann::ordered_json(exact) : nlohmann::ordered_json(nullptr)}});
  }
  switch (detail::format_of(o)) {
    case Format::Pretty:
      out << "M_" << p.n << "(x; " << to_string(p.beta) << ", " << to_string(p.c) << ")  real_count=" << zs.real_count
          << "  distinct=" << zs.size() << '\n';
      if (zs.size() > 0) detail::print_columns(out, rows);
      break;
    case Format::Csv:
      out << "# real_count=" << zs.real_count << '\n';
      detail::print_csv(out, rows);
      break;
    case Format::Json: {
      nlohmann::ordered_json doc{{"records", recs},
                                 {"summary",
                                  {{"n", p.n},
                                   {"beta", to_string(p.beta)},
                                   {"c", to_string(p.c)},
                                   {"degree", zs.degree},
                                   {"real_count", zs.real_count},
                                   {"distinct", zs.size()}}}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

inline int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  const auto spec = table_spec(o.target);
  if (!spec) {
    err << "error: unknown table '" << o.target << "' (expected table1 or table2)\n";
    return kUsage;
  }
  const Format fmt = detail::format_of(o);
  const auto rows = compute_table(*spec);
  std::vector<std::vector<std::string>> grid{spec->headers};
  for (const auto& r : rows) {
    std::vector<std::string> line;
    if (spec->show_threshold) {
      line.push_back(render_short(-r.params.beta));
      line.push_back(render_short(r.params.c));
      line.push_back(*r.threshold);
    } else {
      line.push_back(render_short(r.params.beta));
    }
    line.insert(line.end(), r.cells.begin(), r.cells.end());
    grid.push_back(std::move(line));
  }
  switch (fmt) {
    case Format::Pretty:
      out << spec->id << ": " << spec->caption << '\n';
      detail::print_columns(out, grid);
      break;
    case Format::Csv: detail::print_csv(out, grid); break;
    case Format::Json: {
      nlohmann::ordered_json recs = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json rec{{"n", r.params.n}, {"beta", to_string(r.params.beta)}, {"c", to_string(r.params.c)}};
        if (r.threshold) rec["beta_over_c_minus_1"] = *r.threshold;
        nlohmann::ordered_json zeros = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < r.cells.size(); ++i)
          zeros.push_back({{"index", i + 1},
                           {"printed", r.cells[i]},
                           {"lo", to_string(r.brackets[i].lo)},
                           {"hi", to_string(r.brackets[i].hi)}});
        rec["zeros"] = std::move(zeros);
        recs.push_back(std::move(rec));
      }
      nlohmann::ordered_json doc{{"records", recs}, {"summary", {{"table", spec->id}, {"rows", rows.size()}}}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_suite(o.target)) {
    err << "error: unknown suite '" << o.target << "'; expected one of:";
    for (auto s : kSuiteNames) err << ' ' << s;
    err << '\n';
    return kUsage;
  }
  const Format fmt = detail::format_of(o);
  const GridSpec g = detail::grid_of(o);
  const auto records = run_suite(o.target, g, o.jobs);
  ReportWriter(fmt, digits_for_width(g.width), o.timing).write(out, records);
  return summarize(records)[Status::Fail] > 0 ? kFailure : kOk;
}

inline int cmd_qorder(const Options& o, std::ostream& out, std::ostream&) {
  const MeixnerParams p = detail::params_of(o);
  const int r = quasi_orth_order_by_expansion(p.beta, p.c, p.n);
  switch (detail::format_of(o)) {
    case Format::Pretty: out << r << '\n'; break;
    case Format::Csv: detail::print_csv(out, {{"n", "beta", "c", "order"},
                                              {std::to_string(p.n), to_decimal_trimmed(p.beta), to_decimal_trimmed(p.c), std::to_string(r)}});
      break;
    case Format::Json: {
      nlohmann::ordered_json rec{{"n", p.n}, {"beta", to_string(p.beta)}, {"c", to_string(p.c)}, {"order", r}};
      nlohmann::ordered_json doc{{"records", {rec}}, {"summary", {{"order", r}}}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

inline int cmd_qsums(const Options& o, std::ostream& out, std::ostream&) {
  const MeixnerParams p = detail::params_of(o);
  const int r = o.r.empty() ? quasi_orth_order_by_expansion(p.beta, p.c, p.n) : parse_range(o.r).first;
  const long X = o.X.empty() ? choose_truncation(p, r) : std::stol(o.X);
  const QSumReport rep = quasi_orth_sums(p, r, X);
  std::vector<std::vector<std::string>> rows{{"m", "sum", "tail_bound", "class"}};
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const auto& mo : rep.moments) {
    const std::string s = to_decimal(mo.sum, 6), b = to_decimal(mo.tail_bound, 6);
    rows.push_back({std::to_string(mo.m), s, b, std::string(to_string(mo.cls))});
    recs.push_back({{"m", mo.m}, {"sum_decimal", s}, {"tail_bound_decimal", b}, {"class", to_string(mo.cls)}});
  }
  switch (detail::format_of(o)) {
    case Format::Pretty:
      out << to_string(p) << "  r=" << r << "  X=" << X << "  consistent=" << (rep.consistent() ? "yes" : "no") << '\n';
      detail::print_columns(out, rows);
      break;
    case Format::Csv: detail::print_csv(out, rows); break;
    case Format::Json: {
      nlohmann::ordered_json doc{
          {"records", recs},
          {"summary", {{"n", p.n}, {"beta", to_string(p.beta)}, {"c", to_string(p.c)}, {"r", r}, {"X", X},
                       {"consistent", rep.consistent()}}}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidParams:
    case ErrorCode::SizeMismatch:
    case ErrorCode::Unsupported: return kUsage;
    default: return kFailure;
  }
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Meixner polynomial toolkit"};
  app.require_subcommand(1);
  Options o;

  auto params = [&](CLI::App* sub, bool grid) {
    sub->add_option("--beta", o.beta, grid ? "beta value(s), comma separated" : "beta (rational or decimal)");
    sub->add_option("--c", o.c, grid ? "c value(s), comma separated" : "c (rational or decimal)");
    sub->add_option("--n", o.n, grid ? "degree or range a..b" : "degree");
    sub->add_option("--format", o.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  };

  auto* eval = app.add_subcommand("eval", "evaluate M_n(x; beta, c) exactly");
  params(eval, false);
  eval->add_option("--x", o.x, "evaluation point");

  auto* zeros = app.add_subcommand("zeros", "isolate and refine the real zeros");
  params(zeros, false);
  zeros->add_option("--width", o.width, "relative and absolute refinement target");

  auto* table = app.add_subcommand("table", "reproduce a tabulated zero set");
  table->add_option("id", o.target, "table1 or table2")->required();
  table->add_option("--format", o.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite over a grid");
  verify->add_option("suite", o.target, "suite name")->required();
  params(verify, true);
  verify->add_option("--width", o.width, "refinement width");
  verify->add_option("--grid-file", o.grid_file, "JSON grid file");
  verify->add_flag("--default-grid", o.default_grid, "use the built-in grid, ignoring QMEIXNER_GRID");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", o.timing, "report elapsed time per record");

  auto* qorder = app.add_subcommand("qorder", "order of quasi-orthogonality");
  params(qorder, false);

  auto* qsums = app.add_subcommand("qsums", "truncated quasi-orthogonality moments");
  params(qsums, false);
  qsums->add_option("--r", o.r, "order (default: from the expansion)");
  qsums->add_option("--X", o.X, "truncation point (default: adaptive)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out, err);
    if (*zeros) return cmd_zeros(o, out, err);
    if (*table) return cmd_table(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*qorder) return cmd_qorder(o, out, err);
    if (*qsums) return cmd_qsums(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qmeixner::cli
