#pragma once

#include "render.hpp"

#include <qmeixner/meixner.hpp>
#include <qmeixner/zeros.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmeixner::cli {

/// One printed row: parameters plus the leading zeros rendered cell by cell.
struct TableRow {
  MeixnerParams params;
  std::optional<std::string> threshold;  // beta/(c-1), Table 1 only
  std::vector<std::string> cells;
  std::vector<IsolatingInterval> brackets;  // the refined brackets behind `cells`
};

struct TableSpec {
  std::string id;
  std::string caption;
  std::vector<std::string> headers;
  struct RowTemplate {
    int n;
    Rational beta;
    Rational c;
    std::vector<CellFormat> formats;  // one per reported zero, in ascending order
  };
  std::vector<RowTemplate> rows;
  bool show_threshold = false;
};

/// First three zeros of M_10 for beta in {-1.99, -1.5, -1.01} and c in {0.1, 0.5, 0.8}.
inline TableSpec table1_spec() {
  using F = CellFormat;
  TableSpec t{"table1", "smallest three zeros of M_10 at nine (beta, c) pairs",
              {"-beta", "c", "beta/(c-1)", "x_1", "x_2", "x_3"}, {}, true};
  auto row = [&](int bn, int bd, int cn, int cd, F a, F b, F c) {
    t.rows.push_back({10, -Rational(bn, bd), Rational(cn, cd), {a, b, c}});
  };
  row(199, 100, 1, 10, F::scientific(4), F::fixed(12), F::fixed(10));
  row(199, 100, 1, 2, F::scientific(4), F::fixed(6), F::fixed(5));
  row(199, 100, 4, 5, F::fixed(6), F::fixed(6), F::fixed(5));
  row(3, 2, 1, 10, F::scientific(4), F::fixed(11), F::fixed(8));
  row(3, 2, 1, 2, F::fixed(7), F::fixed(4), F::fixed(4));
  row(3, 2, 4, 5, F::fixed(7), F::fixed(6), F::fixed(5));
  row(101, 100, 1, 10, F::scientific(4), F::fixed(12), F::fixed(7));
  row(101, 100, 1, 2, F::scientific(4), F::fixed(6), F::fixed(4));
  row(101, 100, 4, 5, F::fixed(9), F::fixed(6), F::fixed(4));
  return t;
}

/// All five zeros of M_5 at c = 0.2 for beta = -1.9 and -1.8.
inline TableSpec table2_spec() {
  using F = CellFormat;
  TableSpec t{"table2", "all zeros of M_5 at c = 1/5, two beta values",
              {"beta", "x_1", "x_2", "x_3", "x_4", "x_5"}, {}, false};
  t.rows.push_back({5, Rational(-19, 10), Rational(1, 5),
                    {F::fixed(9), F::fixed(6), F::fixed(6), F::fixed(6), F::fixed(7)}});
  t.rows.push_back({5, Rational(-9, 5), Rational(1, 5),
                    {F::fixed(10), F::fixed(6), F::fixed(4), F::fixed(5), F::fixed(5)}});
  return t;
}

inline std::optional<TableSpec> table_spec(std::string_view id) {
  if (id == "table1") return table1_spec();
  if (id == "table2") return table2_spec();
  return std::nullopt;
}

/// "2.21", "3", "7.5": two decimals with trailing zeros dropped.
inline std::string render_short(const Rational& r) {
  std::string s = to_fixed(r, 2);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

inline std::vector<TableRow> compute_table(const TableSpec& spec) {
  std::vector<TableRow> out;
  for (const auto& tmpl : spec.rows) {
    const MeixnerParams p{tmpl.n, tmpl.beta, tmpl.c};
    ZeroSet zs = isolate_zeros(meixner_coeffs(p));
    if (zs.size() < tmpl.formats.size())
      throw Error(ErrorCode::Unresolved, "fewer real zeros than table cells at " + to_string(p));
    TableRow row{p, std::nullopt, {}, {}};
    if (spec.show_threshold) row.threshold = render_short(p.beta / (p.c - 1));
    for (std::size_t i = 0; i < tmpl.formats.size(); ++i) {
      // Resolve well past the printed digit so the bracket itself is reportable.
      IsolatingInterval iv = refine_relative(zs.reduced, zs[i], Rational(1, 1000000000), pow10(-20));
      row.cells.push_back(render_root(zs.reduced, iv, tmpl.formats[i]));
      row.brackets.push_back(iv);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace qmeixner::cli
