#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fracdiff::verify {

struct VerificationRow {
  std::string suite;
  std::string case_id;
  double metric = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string lhs_provenance;
  std::string rhs_provenance;
  int criterion = 0;  // acceptance criterion this row belongs to, 0 if none
};

// passed is derived, never set by hand
inline VerificationRow make_row(std::string suite, std::string case_id, double metric, double tolerance,
                                std::string lhs, std::string rhs, int criterion = 0) {
  const bool ok = !std::isnan(metric) && metric <= tolerance;
  return {std::move(suite), std::move(case_id), metric, tolerance, ok, std::move(lhs), std::move(rhs), criterion};
}

struct VerificationReport {
  std::vector<VerificationRow> rows;

  void add(VerificationRow r) { rows.push_back(std::move(r)); }
  void append(const std::vector<VerificationRow>& rs) { rows.insert(rows.end(), rs.begin(), rs.end()); }
  void sort() {
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return a.suite != b.suite ? a.suite < b.suite : a.case_id < b.case_id;
    });
  }
  bool all_passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.passed; }));
  }
};

}  // namespace fracdiff::verify
