#pragma once

// CSV and JSON artifacts. Numbers are written with 17 significant digits so a
// strtod of the text gives back the same double.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdiff/error.hpp"
#include "fracdiff/laws/model.hpp"
#include "fracdiff/mc/samplers.hpp"
#include "fracdiff/mc/stats.hpp"
#include "fracdiff/verify/report.hpp"
#include "fracdiff/verify/tolerances.hpp"

namespace fracdiff::io {

inline constexpr int kSchemaVersion = 1;

inline std::string num(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

// quotes a field when it holds a comma, quote or newline
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw DomainError("csv: no column " + name);
  }
  std::vector<double> numeric(const std::string& name) const {
    const auto c = column(name);
    std::vector<double> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.push_back(std::strtod(r.at(c).c_str(), nullptr));
    return v;
  }
};

inline std::string to_csv(const CsvTable& t) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fs[i]);
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

// leading lines starting with '#' are skipped
inline CsvTable parse_csv(const std::string& all) {
  std::size_t start = 0;
  while (start < all.size() && all[start] == '#') {
    const auto e = all.find('\n', start);
    start = e == std::string::npos ? all.size() : e + 1;
  }
  const std::string text = all.substr(start);
  CsvTable t;
  std::vector<std::string> cur;
  std::string f;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        f += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        f += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      cur.push_back(std::move(f));
      f.clear();
    } else if (c == '\n') {
      cur.push_back(std::move(f));
      f.clear();
      (t.header.empty() ? t.header : t.rows.emplace_back()) = std::move(cur);
      cur.clear();
      any = false;
    } else {
      f += c;
      any = true;
    }
  }
  if (any || !cur.empty()) {
    cur.push_back(std::move(f));
    (t.header.empty() ? t.header : t.rows.emplace_back()) = std::move(cur);
  }
  return t;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("cannot open " + path + " for writing");
  os << text;
  if (!os) throw DomainError("write failed: " + path);
}

inline std::string read_text(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// ------------------------------------------------------------ density curves

inline CsvTable density_table(const laws::DensityCurve& c) {
  CsvTable t{{"x", "value", "method", "t", "model", "alpha", "hurst", "nu", "korder"}, {}};
  const auto& m = c.model;
  for (std::size_t i = 0; i < c.xs.size(); ++i)
    t.rows.push_back({num(c.xs[i]), num(c.vals[i]), laws::to_string(c.method), num(c.t), laws::to_string(m.kind),
                      num(m.alpha), num(m.hurst), num(m.nu), std::to_string(m.korder)});
  return t;
}

inline nlohmann::ordered_json model_json(const laws::ModelSpec& m) {
  return {{"kind", laws::to_string(m.kind)}, {"alpha", m.alpha}, {"hurst", m.hurst}, {"nu", m.nu}, {"korder", m.korder}};
}

inline nlohmann::ordered_json density_json(const laws::DensityCurve& c) {
  return {{"schema_version", kSchemaVersion}, {"model", model_json(c.model)}, {"method", laws::to_string(c.method)},
          {"t", c.t},                         {"x", c.xs},                    {"value", c.vals}};
}

// ------------------------------------------------------------ sample batches

struct BatchSummary {
  std::size_t n = 0;
  double mean = 0.0, variance = 0.0, median = 0.0, q01 = 0.0, q99 = 0.0;
};

inline BatchSummary summarize(const mc::SampleBatch& b) {
  return {b.values.size(),
          mc::sample_mean(b.values),
          mc::sample_variance(b.values),
          mc::quantile(b.values, 0.5),
          mc::quantile(b.values, 0.01),
          mc::quantile(b.values, 0.99)};
}

inline CsvTable summary_table(const mc::SampleBatch& b) {
  const auto s = summarize(b);
  return {{"tag", "t", "master_seed", "stream_id", "n", "mean", "variance", "median", "q01", "q99"},
          {{b.tag, num(b.t), std::to_string(b.seed.master_seed), std::to_string(b.seed.stream_id), std::to_string(s.n),
            num(s.mean), num(s.variance), num(s.median), num(s.q01), num(s.q99)}}};
}

inline CsvTable samples_table(const mc::SampleBatch& b) {
  CsvTable t{{"value"}, {}};
  t.rows.reserve(b.values.size());
  for (double v : b.values) t.rows.push_back({num(v)});
  return t;
}

inline nlohmann::ordered_json summary_json(const mc::SampleBatch& b, bool with_samples) {
  const auto s = summarize(b);
  nlohmann::ordered_json j{{"schema_version", kSchemaVersion},
                           {"tag", b.tag},
                           {"t", b.t},
                           {"master_seed", b.seed.master_seed},
                           {"stream_id", b.seed.stream_id},
                           {"n", s.n},
                           {"mean", s.mean},
                           {"variance", s.variance},
                           {"median", s.median},
                           {"q01", s.q01},
                           {"q99", s.q99}};
  if (with_samples) j["samples"] = b.values;
  return j;
}

// ------------------------------------------------------------ reports

inline CsvTable report_table(const verify::VerificationReport& r) {
  CsvTable t{{"suite", "case_id", "metric", "tolerance", "passed", "lhs_provenance", "rhs_provenance", "criterion"}, {}};
  for (const auto& row : r.rows)
    t.rows.push_back({row.suite, row.case_id, num(row.metric), num(row.tolerance), row.passed ? "true" : "false",
                      row.lhs_provenance, row.rhs_provenance, std::to_string(row.criterion)});
  return t;
}

inline nlohmann::ordered_json tolerances_json() {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& t : verify::kTolerances) j[std::string(t.key)] = {{"value", t.value}, {"meaning", t.meaning}};
  return j;
}

inline nlohmann::ordered_json report_json(const verify::VerificationReport& r, std::uint64_t seed) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    // NaN is not representable in JSON; a NaN metric becomes null
    nlohmann::ordered_json metric = std::isnan(row.metric) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(row.metric);
    rows.push_back({{"suite", row.suite},
                    {"case_id", row.case_id},
                    {"metric", metric},
                    {"tolerance", row.tolerance},
                    {"passed", row.passed},
                    {"lhs_provenance", row.lhs_provenance},
                    {"rhs_provenance", row.rhs_provenance},
                    {"criterion", row.criterion}});
  }
  return {{"schema_version", kSchemaVersion}, {"seed", seed},        {"passed", r.all_passed()},
          {"failures", r.failures()},         {"tolerances", tolerances_json()}, {"rows", rows}};
}

// CSV report with the tolerance table echoed as leading comment lines
inline std::string report_csv(const verify::VerificationReport& r, std::uint64_t seed) {
  std::string out = "# schema_version=" + std::to_string(kSchemaVersion) + " seed=" + std::to_string(seed) + "\n";
  for (const auto& t : verify::kTolerances) out += "# tolerance " + std::string(t.key) + "=" + num(t.value) + "\n";
  return out + to_csv(report_table(r));
}

}  // namespace fracdiff::io
