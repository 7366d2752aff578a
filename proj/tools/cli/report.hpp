#pragma once

#include "render.hpp"

#include <qmeixner/verdict.hpp>

#include "json.hpp"

#include <array>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qmeixner::cli {

enum class Format { Pretty, Csv, Json };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "pretty") return Format::Pretty;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

struct ReportRecord {
  std::string suite;
  Verdict verdict;
  std::optional<double> elapsed_ms;
};

struct Summary {
  std::array<long, 4> counts{};  // indexed by Status

  void add(Status s) { ++counts[static_cast<std::size_t>(s)]; }
  long operator[](Status s) const { return counts[static_cast<std::size_t>(s)]; }
  long total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
};

inline Summary summarize(const std::vector<ReportRecord>& records) {
  Summary s;
  for (const auto& r : records) s.add(r.verdict.status);
  return s;
}

inline constexpr std::array<Status, 4> kStatusOrder = {Status::Pass, Status::Fail, Status::NotApplicable,
                                                       Status::Degenerate};

/// Decimal endpoints of a witness, with enough digits to keep distinct endpoints distinct.
struct RenderedWitness {
  std::string name;
  std::string lo;
  std::string hi;
  bool exact;
};

inline RenderedWitness render_witness(const Witness& w, int min_digits) {
  auto [lo, hi] = render_distinct(w.lo, w.hi, min_digits);
  return {w.name, lo, hi, w.is_exact()};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string witness_text(const RenderedWitness& w) {
  return w.exact ? w.name + "=" + w.lo : w.name + " in [" + w.lo + ", " + w.hi + "]";
}

inline std::string fixed_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace detail

class ReportWriter {
 public:
  ReportWriter(Format format, int min_digits, bool timing) : format_(format), digits_(min_digits), timing_(timing) {}

  void write(std::ostream& out, const std::vector<ReportRecord>& records) const {
    switch (format_) {
      case Format::Pretty: write_pretty(out, records); break;
      case Format::Csv: write_csv(out, records); break;
      case Format::Json: write_json(out, records); break;
    }
  }

 private:
  void write_pretty(std::ostream& out, const std::vector<ReportRecord>& records) const {
    for (const auto& r : records) {
      const auto& v = r.verdict;
      out << to_string(v.status) << "  " << v.theorem_id << "  " << to_string(v.params);
      if (!v.detail.empty()) out << "  " << v.detail;
      if (timing_ && r.elapsed_ms) out << "  (" << detail::fixed_ms(*r.elapsed_ms) << " ms)";
      out << '\n';
      if (v.status == Status::Fail || v.status == Status::Degenerate)
        for (const auto& w : v.witnesses) out << "    " << detail::witness_text(render_witness(w, digits_)) << '\n';
    }
    const Summary s = summarize(records);
    out << "summary:";
    for (auto st : kStatusOrder) out << ' ' << to_string(st) << '=' << s[st];
    out << " total=" << s.total() << '\n';
  }

  void write_csv(std::ostream& out, const std::vector<ReportRecord>& records) const {
    out << "suite,theorem_id,n,beta,c,status,detail,witnesses";
    if (timing_) out << ",elapsed_ms";
    out << '\n';
    for (const auto& r : records) {
      const auto& v = r.verdict;
      std::string ws;
      for (const auto& w : v.witnesses) {
        if (!ws.empty()) ws += "; ";
        ws += detail::witness_text(render_witness(w, digits_));
      }
      out << detail::csv_field(r.suite) << ',' << detail::csv_field(v.theorem_id) << ',' << v.params.n << ','
          << to_decimal_trimmed(v.params.beta) << ',' << to_decimal_trimmed(v.params.c) << ','
          << to_string(v.status) << ',' << detail::csv_field(v.detail) << ',' << detail::csv_field(ws);
      if (timing_) out << ',' << (r.elapsed_ms ? detail::fixed_ms(*r.elapsed_ms) : "");
      out << '\n';
    }
  }

  void write_json(std::ostream& out, const std::vector<ReportRecord>& records) const {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["records"] = ordered_json::array();
    for (const auto& r : records) {
      const auto& v = r.verdict;
      ordered_json rec;
      rec["suite"] = r.suite;
      rec["theorem_id"] = v.theorem_id;
      rec["n"] = v.params.n;
      rec["beta"] = to_string(v.params.beta);
      rec["beta_decimal"] = to_decimal_trimmed(v.params.beta);
      rec["c"] = to_string(v.params.c);
      rec["c_decimal"] = to_decimal_trimmed(v.params.c);
      rec["status"] = std::string(to_string(v.status));
      rec["detail"] = v.detail;
      rec["witnesses"] = ordered_json::array();
      for (const auto& w : v.witnesses) {
        const auto rw = render_witness(w, digits_);
        ordered_json jw;
        jw["name"] = w.name;
        jw["lo"] = to_string(w.lo);
        jw["hi"] = to_string(w.hi);
        jw["lo_decimal"] = rw.lo;
        jw["hi_decimal"] = rw.hi;
        rec["witnesses"].push_back(std::move(jw));
      }
      if (timing_ && r.elapsed_ms) rec["elapsed_ms"] = *r.elapsed_ms;
      doc["records"].push_back(std::move(rec));
    }
    const Summary s = summarize(records);
    ordered_json sum;
    for (auto st : kStatusOrder) sum[std::string(to_string(st))] = s[st];
    sum["total"] = s.total();
    doc["summary"] = std::move(sum);
    out << doc.dump(2) << '\n';
  }

  Format format_;
  int digits_;
  bool timing_;
};

}  // namespace qmeixner::cli
