#include "cli/app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace qmeixner;
using namespace qmeixner::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qmeixner");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Grid, Defaults) {
  const GridSpec g = default_grid();
  EXPECT_EQ(g.beta_values.size(), 14u);
  EXPECT_EQ(g.c_values.size(), 5u);
  EXPECT_NO_THROW(g.validate());
  for (const auto& b : g.beta_values) EXPECT_FALSE(is_integer(b));
}

TEST(Grid, Ranges) {
  EXPECT_EQ(parse_range("3..10"), (std::pair{3, 10}));
  EXPECT_EQ(parse_range("7"), (std::pair{7, 7}));
  EXPECT_THROW(parse_range("3..x"), Error);
  EXPECT_THROW(parse_range(""), Error);
  EXPECT_EQ(parse_list("-3/2,0.5").size(), 2u);
  EXPECT_THROW(parse_list("1/2,abc"), Error);
}

TEST(Grid, Json) {
  const GridSpec g = parse_grid_json(R"({"beta": ["-3/2", 2], "c": ["0.5"], "n": "2..4", "width": "1e-6"})");
  EXPECT_EQ(g.beta_values, (std::vector<Rational>{Rational(-3, 2), Rational(2)}));
  EXPECT_EQ(g.c_values, (std::vector<Rational>{Rational(1, 2)}));
  EXPECT_EQ(g.n_min, 2);
  EXPECT_EQ(g.n_max, 4);
  EXPECT_EQ(g.width, Rational(1, 1000000));
  EXPECT_EQ(parse_grid_json(R"({"n": [1, 3]})").n_max, 3);
  EXPECT_THROW(parse_grid_json("[1]"), Error);
  EXPECT_THROW(parse_grid_json(R"({"beta": []})"), Error);
  EXPECT_THROW(parse_grid_json(R"({"n": [5, 2]})"), Error);
  EXPECT_THROW(parse_grid_json("{"), Error);
}

TEST(Tables, ShapeAndFormats) {
  const auto t1 = table1_spec();
  EXPECT_EQ(t1.rows.size(), 9u);
  for (const auto& r : t1.rows) EXPECT_EQ(r.formats.size(), 3u);
  const auto t2 = table2_spec();
  EXPECT_EQ(t2.rows.size(), 2u);
  for (const auto& r : t2.rows) EXPECT_EQ(r.formats.size(), 5u);
  EXPECT_FALSE(table_spec("table9"));
  EXPECT_EQ(render_short(Rational(-3, 2) / Rational(-1, 2)), "3");
  EXPECT_EQ(render_short(Rational(-199, 100) / Rational(-1, 5)), "9.95");
}

TEST(Tables, Table2ComputedCells) {
  const auto rows = compute_table(table2_spec());
  EXPECT_EQ(rows[0].cells, (std::vector<std::string>{"0.000009041", "0.999651", "2.006685", "3.445917", "6.1727379"}));
  EXPECT_EQ(rows[1].cells, (std::vector<std::string>{"0.0000169239", "0.999321", "2.0144", "3.48815", "6.24811"}));
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      // The printed value lies within half a unit of the bracket.
      const Rational printed = parse_rational(r.cells[i]);
      const Rational half = pow10(-static_cast<long>(r.cells[i].size() - r.cells[i].find('.') - 1)) / 2;
      EXPECT_LE(abs(printed - r.brackets[i].midpoint()), half + r.brackets[i].width());
    }
}

TEST(Render, RootRoundsItsBracketConsistently) {
  const Polynomial p({Rational(-2), Rational(0), Rational(1)});
  IsolatingInterval iv{Rational(1), Rational(2), std::nullopt, 1};
  EXPECT_EQ(render_root(p, iv, CellFormat::fixed(10)), "1.4142135624");
  EXPECT_EQ(render_root(p, iv, CellFormat::scientific(3)), "1.41e+00");
  const auto [lo, hi] = render_distinct(Rational(1, 3), Rational(1, 3) + pow10(-15));
  EXPECT_NE(lo, hi);
}

TEST(Cli, Eval) {
  auto r = run_cli({"eval", "--n", "0", "--beta", "1/2", "--c", "1/3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "1");
  r = run_cli({"eval", "--n", "1", "--beta=-3/2", "--c", "1/2", "--x", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3/2\n1.5\n");
  r = run_cli({"eval", "--n", "2", "--beta=-1.99", "--c", "0.1", "--x", "1/3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("records"));
  EXPECT_TRUE(j.contains("summary"));
  EXPECT_EQ(j["records"][0]["beta"], "-199/100");
}

TEST(Cli, EvalAtSeriesPoleStillEvaluates) {
  const auto r = run_cli({"eval", "--n", "3", "--beta=-1", "--c", "1/2", "--x", "2"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, Zeros) {
  auto r = run_cli({"zeros", "--n", "10", "--beta=-1.99", "--c", "0.1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["real_count"], 10);
  const std::string mid = j["records"][0]["midpoint_decimal"];
  EXPECT_EQ(mid.substr(0, 5), "3.548");
  EXPECT_NE(mid.find("e-14"), std::string::npos);

  r = run_cli({"zeros", "--n", "2", "--beta=-9/8", "--c", "1/2", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["records"].size(), 1u);
  EXPECT_EQ(j["records"][0]["multiplicity"], 2);
  EXPECT_EQ(j["records"][0]["exact"], "3/8");

  r = run_cli({"zeros", "--n", "2", "--beta=-7/4", "--c", "3/4", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "# real_count=0\nindex,lo,hi,midpoint,multiplicity,exact\n");
}

TEST(Cli, Table) {
  auto r = run_cli({"table", "table1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1.5,0.8,7.5,0.0405146,0.811339,2.93765"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1.99,0.1,2.21,3.549e-14,0.999999999987,2.0000000038"), std::string::npos);
  r = run_cli({"table", "table2"});
  EXPECT_NE(r.out.find("0.0000169239"), std::string::npos);
  EXPECT_EQ(run_cli({"table", "table9"}).code, 2);
}

TEST(Cli, VerifyThresholdExample) {
  const auto r = run_cli({"verify", "qo2", "--beta=-3/2", "--c", "1/2", "--n", "3..10", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& rec : j["records"]) {
    const int n = rec["n"];
    EXPECT_EQ(rec["status"], n == 3 ? "NOT_APPLICABLE" : "PASS") << rec.dump();
  }
  EXPECT_EQ(j["summary"]["FAIL"], 0);
  EXPECT_EQ(j["summary"]["NOT_APPLICABLE"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"eval", "--n", "1", "--beta", "1", "--c", "1"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "--n", "1", "--beta", "1", "--c", "0"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "--n", "1", "--beta", "x", "--c", "1/2"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "--beta", "1", "--c", "1/2"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "bogus"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "identities", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"qorder", "--n", "3", "--beta=-5/2", "--c", "1/2"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, QorderAndQsums) {
  auto r = run_cli({"qorder", "--n", "5", "--beta=-1.5", "--c", "0.5"});
  EXPECT_EQ(r.out, "2\n");
  r = run_cli({"qsums", "--n", "3", "--beta=-1/2", "--c", "1/2", "--X", "200", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["r"], 1);
  EXPECT_EQ(j["summary"]["consistent"], true);
  EXPECT_EQ(j["records"][2]["class"], "NONZERO");
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  const std::vector<std::string> base{"verify", "all", "--beta=-1.5,-0.5,2", "--c", "0.2,0.8", "--n", "2..6", "--format", "json"};
  const auto a = run_cli(base);
  const auto b = run_cli(base);
  auto par = base;
  par.push_back("--jobs");
  par.push_back("4");
  const auto c = run_cli(par);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
  auto timed = base;
  timed.push_back("--timing");
  EXPECT_NE(run_cli(timed).out.find("elapsed_ms"), std::string::npos);
}

TEST(Cli, CsvReport) {
  const auto r = run_cli({"verify", "identities", "--beta", "1/2", "--c", "1/2", "--n", "2", "--format", "csv"});
  std::istringstream in(r.out);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "suite,theorem_id,n,beta,c,status,detail,witnesses");
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(line.rfind("identities,identity-", 0), 0u) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 5);
}

TEST(Cli, GridFileAndEnvironment) {
  const std::string path = ::testing::TempDir() + "qmeixner_grid.json";
  {
    std::ofstream f(path);
    f << R"({"beta": ["-0.5"], "c": ["0.5"], "n": "3..4"})";
  }
  auto r = run_cli({"verify", "bounds", "--grid-file", path, "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["total"], 4);

  ::setenv("QMEIXNER_GRID", path.c_str(), 1);
  r = run_cli({"verify", "bounds", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["summary"]["total"], 4);
  r = run_cli({"verify", "bounds", "--n", "3", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["summary"]["total"], 2);
  r = run_cli({"verify", "bounds", "--default-grid", "--n", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["summary"]["total"], 140);
  ::unsetenv("QMEIXNER_GRID");
  std::remove(path.c_str());

  EXPECT_EQ(run_cli({"verify", "bounds", "--grid-file", "/nonexistent/grid.json"}).code, 2);
}

TEST(Cli, MonotonicitySuite) {
  const auto r = run_cli({"verify", "monotonicity", "--beta=-0.5", "--c", "0.5", "--n", "1..6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["records"].size(), 2u);
  EXPECT_EQ(j["records"][0]["theorem_id"], "monotonicity-negative-zero");
  EXPECT_EQ(j["records"][1]["theorem_id"], "monotonicity-beta-counterexample");
  EXPECT_EQ(j["summary"]["PASS"], 2);
}
