#pragma once

#include <cmath>
#include <limits>

#include "fracdiff/specfun/series.hpp"

namespace fracdiff::specfun::detail {

struct PeakScan {
  double log_peak = -std::numeric_limits<double>::infinity();  // natural log of the largest |term|
  int k_peak = 0;
  int k_end = 0;  // first index past which terms are negligible
  bool same_sign = true;
};

// log_term(k, sign) returns log|t_k| (or -inf for a vanishing term) and writes its sign.
template <class LogTerm>
PeakScan scan_peak(LogTerm&& log_term, const SeriesControl& ctl) {
  PeakScan s;
  const double cut = std::log(ctl.abs_tol) - 4.0;
  int first_sign = 0;
  int small = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    int sg = 1;
    const double l = log_term(k, sg);
    s.k_end = k;
    if (l == -std::numeric_limits<double>::infinity()) {
      continue;
    }
    if (first_sign == 0) first_sign = sg;
    else if (sg != first_sign) s.same_sign = false;
    if (l > s.log_peak) {
      s.log_peak = l;
      s.k_peak = k;
    }
    if (l < cut && l < s.log_peak - 4.0) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  return s;
}

}  // namespace fracdiff::specfun::detail
