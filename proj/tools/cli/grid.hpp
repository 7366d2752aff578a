#pragma once

#include <qmeixner/error.hpp>
#include <qmeixner/rational.hpp>

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

namespace qmeixner::cli {

/// Parameter grid swept by the verify suites.
struct GridSpec {
  std::vector<Rational> beta_values;
  std::vector<Rational> c_values;
  int n_min = 1;
  int n_max = 10;
  Rational width = Rational(1, 1000000000);

  void validate() const {
    if (beta_values.empty() || c_values.empty()) throw Error(ErrorCode::InvalidParams, "grid lists must be non-empty");
    if (n_min < 0 || n_max < n_min) throw Error(ErrorCode::InvalidParams, "bad degree range");
    if (width.sign() <= 0) throw Error(ErrorCode::InvalidParams, "width must be positive");
  }
};

/// Off-integer beta in every regime (order 2, order 1, orthogonal) and five c values.
inline GridSpec default_grid() {
  GridSpec g;
  for (int k : {-19, -17, -15, -13, -11, -9, -7, -5, -3, -1, 1, 5, 15, 25}) g.beta_values.emplace_back(k, 10);
  for (auto [p, q] : {std::pair{1, 10}, {1, 5}, {1, 2}, {4, 5}, {9, 10}}) g.c_values.emplace_back(p, q);
  return g;
}

/// "5" or "3..10".
inline std::pair<int, int> parse_range(const std::string& text) {
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      std::size_t used_a = 0, used_b = 0;
      const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      int lo = std::stoi(a, &used_a), hi = std::stoi(b, &used_b);
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
      return {lo, hi};
    }
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return {v, v};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidParams, "bad degree range '" + text + "'");
  }
}

/// parse_rational with the CLI's error type.
inline Rational parse_value(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidParams, "not a rational number: '" + text + "'");
  }
}

/// Comma-separated rationals: "-3/2,-1.01,0.5".
inline std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_value(item));
  if (out.empty()) throw Error(ErrorCode::InvalidParams, "empty list '" + text + "'");
  return out;
}

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_value(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::InvalidParams, "grid values must be strings or integers, got " + j.dump());
}

}  // namespace detail

/// {"beta": ["-3/2", "-1.01"], "c": ["1/2"], "n": [3, 10] or "3..10", "width": "1e-9"}
/// Missing keys keep the defaults.
inline GridSpec parse_grid_json(const std::string& text) {
  GridSpec g = default_grid();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidParams, std::string("grid file: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidParams, "grid file must hold a JSON object");
  if (j.contains("beta")) {
    g.beta_values.clear();
    for (const auto& v : j.at("beta")) g.beta_values.push_back(detail::rational_from_json(v));
  }
  if (j.contains("c")) {
    g.c_values.clear();
    for (const auto& v : j.at("c")) g.c_values.push_back(detail::rational_from_json(v));
  }
  if (j.contains("n")) {
    const auto& n = j.at("n");
    if (n.is_string()) {
      std::tie(g.n_min, g.n_max) = parse_range(n.get<std::string>());
    } else if (n.is_array() && n.size() == 2) {
      g.n_min = n[0].get<int>();
      g.n_max = n[1].get<int>();
    } else if (n.is_number_integer()) {
      g.n_min = g.n_max = n.get<int>();
    } else {
      throw Error(ErrorCode::InvalidParams, "grid 'n' must be an integer, [min, max] or \"min..max\"");
    }
  }
  if (j.contains("width")) g.width = detail::rational_from_json(j.at("width"));
  g.validate();
  return g;
}

inline GridSpec load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidParams, "cannot open grid file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grid_json(ss.str());
}

}  // namespace qmeixner::cli
