#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "fracdiff/error.hpp"

namespace fracdiff::specfun {

struct SeriesControl {
  double abs_tol = 1e-14;
  double rel_tol = 1e-15;
  int max_terms = 6000;
  // |z| above which extended precision is used regardless of the peak prediction
  double extended_precision_threshold = std::numeric_limits<double>::infinity();
  // a cancelling series is summed in double only while
  // rounding_factor * eps * peak <= abs_tol
  double rounding_factor = 16.0;
  // hard cap on the extended precision
  long max_bits = 4096;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("SeriesControl: tolerances must be positive");
    if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
  }
  bool double_is_enough(double peak) const {
    return rounding_factor * std::numeric_limits<double>::epsilon() * peak <= abs_tol;
  }
  // working precision for a series with the given peak term
  long bits_for(double log2_peak) const {
    const double need = 64.0 + std::max(0.0, log2_peak - std::log2(abs_tol)) + 32.0;
    return static_cast<long>(std::ceil(need));
  }
};

struct SeriesValue {
  double value = 0.0;
  double abs_error = 0.0;
  int terms = 0;
  bool extended = false;  // summed in MPFR
};

template <class T>
class KahanSum {
 public:
  void add(T x) {
    const T y = x - c_;
    const T t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
    abs_ += std::abs(x);
  }
  T sum() const { return s_; }
  double abs_sum() const { return abs_; }

 private:
  T s_{};
  T c_{};
  double abs_ = 0.0;
};

// Three consecutive small terms end a series.
class StoppingRule {
 public:
  explicit StoppingRule(const SeriesControl& c) : abs_tol_(c.abs_tol), rel_tol_(c.rel_tol) {}
  // stops after three small terms in a row once the geometric tail bound,
  // from the largest of the last three term ratios, is itself small
  bool update(double term_mag, double partial_mag) {
    if (term_mag > 0.0) {
      if (prev_ > 0.0) {
        ratios_[pos_++ % 3] = term_mag / prev_;
        seen_ = std::min(seen_ + 1, 3);
      }
      prev_ = term_mag;
    }
    const double tol = std::max(abs_tol_, rel_tol_ * partial_mag);
    double bound = term_mag;
    if (term_mag > 0.0) {
      double r = 0.0;
      for (int i = 0; i < seen_; ++i) r = std::max(r, ratios_[i]);
      bound = (seen_ == 3 && r < 1.0) ? term_mag / (1.0 - r) : HUGE_VAL;
    }
    if (bound <= tol) {
      ++small_;
      tail_ = std::max(tail_, bound);
    } else {
      small_ = 0;
      tail_ = 0.0;
    }
    return small_ >= 3;
  }
  // truncation estimate
  double tail() const { return tail_; }

 private:
  double abs_tol_, rel_tol_;
  int small_ = 0;
  double tail_ = 0.0;
  double prev_ = 0.0;
  double ratios_[3] = {0.0, 0.0, 0.0};
  int pos_ = 0, seen_ = 0;
};

}  // namespace fracdiff::specfun
