#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "fracdiff/error.hpp"
#include "fracdiff/mc/samplers.hpp"
#include "fracdiff/transform/gauss_legendre.hpp"

namespace fracdiff::mc {

namespace detail {

// pairwise summation keeps aggregates independent of how the batch was filled
template <class T, class F>
T pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi, F& f) {
  if (hi - lo <= 64) {
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s += f(v[i]);
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum<T>(v, lo, mid, f) + pairwise_sum<T>(v, mid, hi, f);
}

inline void check_batch(const std::vector<double>& v) {
  if (v.empty()) throw DomainError("statistics: empty batch");
}

}  // namespace detail

inline double sample_mean(const std::vector<double>& v) {
  detail::check_batch(v);
  auto id = [](double x) { return x; };
  return detail::pairwise_sum<double>(v, 0, v.size(), id) / static_cast<double>(v.size());
}

// raw moment E X^p
inline double sample_moment(const std::vector<double>& v, int p) {
  detail::check_batch(v);
  auto pw = [p](double x) { return std::pow(x, p); };
  return detail::pairwise_sum<double>(v, 0, v.size(), pw) / static_cast<double>(v.size());
}

inline double sample_variance(const std::vector<double>& v) {
  const double m = sample_mean(v);
  auto sq = [m](double x) { return (x - m) * (x - m); };
  return detail::pairwise_sum<double>(v, 0, v.size(), sq) / static_cast<double>(v.size() - (v.size() > 1));
}

// mean of e^{i beta X}
inline std::complex<double> empirical_cf(const std::vector<double>& v, double beta) {
  detail::check_batch(v);
  if (beta == 0.0) return {1.0, 0.0};
  auto e = [beta](double x) { return std::complex<double>(std::cos(beta * x), std::sin(beta * x)); };
  return detail::pairwise_sum<std::complex<double>>(v, 0, v.size(), e) / static_cast<double>(v.size());
}
inline std::complex<double> empirical_cf(const SampleBatch& b, double beta) { return empirical_cf(b.values, beta); }

// sup |F_n - F|
inline double ks_distance(std::vector<double> v, const std::function<double(double)>& cdf) {
  detail::check_batch(v);
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}
inline double ks_distance(const SampleBatch& b, const std::function<double(double)>& cdf) {
  return ks_distance(b.values, cdf);
}

inline double quantile(std::vector<double> v, double q) {
  detail::check_batch(v);
  std::sort(v.begin(), v.end());
  const double pos = q * (v.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  const double f = pos - i;
  return i + 1 < v.size() ? (1.0 - f) * v[i] + f * v[i + 1] : v.back();
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// CDF of a symmetric density, integrated once on [0, L] with Gauss-Legendre
// panels and interpolated by cubic Hermite (the density is the derivative).
class TabulatedCdf {
 public:
  // step: panel width; L grows until the remaining mass is below tail_tol
  TabulatedCdf(std::function<double(double)> density, double step = 0.02, double tail_tol = 1e-9,
               double max_extent = 1e4)
      : f_(std::move(density)), h_(step) {
    if (!(step > 0.0)) throw DomainError("TabulatedCdf: step must be positive");
    static const transform::GaussLegendreRule rule = transform::gauss_legendre(10);
    xs_.push_back(0.0);
    cs_.push_back(0.5);
    ds_.push_back(f_(0.0));
    double x = 0.0;
    while (true) {
      const double y = x + h_;
      cs_.push_back(cs_.back() + transform::gauss_legendre_panel(rule, f_, x, y));
      xs_.push_back(y);
      ds_.push_back(f_(y));
      x = y;
      if (1.0 - cs_.back() < tail_tol && ds_.back() * h_ < tail_tol) break;
      if (x > max_extent) throw ConvergenceError("TabulatedCdf: density tail too heavy", cs_.back(), 1.0 - cs_.back());
    }
  }

  double extent() const { return xs_.back(); }
  // 1 - F(extent): mass neglected beyond the table
  double tail_mass() const { return 1.0 - cs_.back(); }

  double operator()(double x) const {
    const double ax = std::abs(x);
    double c;
    if (ax >= xs_.back()) {
      c = 1.0;
    } else {
      const auto i = static_cast<std::size_t>(ax / h_);
      const double s = (ax - xs_[i]) / h_;
      const double s2 = s * s, s3 = s2 * s;
      c = (2 * s3 - 3 * s2 + 1) * cs_[i] + (s3 - 2 * s2 + s) * h_ * ds_[i] + (-2 * s3 + 3 * s2) * cs_[i + 1] +
          (s3 - s2) * h_ * ds_[i + 1];
    }
    return x >= 0.0 ? c : 1.0 - c;
  }

 private:
  std::function<double(double)> f_;
  double h_;
  std::vector<double> xs_, cs_, ds_;
};

}  // namespace fracdiff::mc
