#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "fracdiff/detail/bigfloat.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/specfun/detail_scan.hpp"
#include "fracdiff/specfun/gamma.hpp"
#include "fracdiff/specfun/series.hpp"
#include "fracdiff/transform/quadrature.hpp"

namespace fracdiff::specfun {

struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;

  void validate() const {
    if (!(alpha > 0.0)) throw DomainError("MLParams: alpha must be positive");
    if (!(beta > 0.0)) throw DomainError("MLParams: beta must be positive");
  }
};

// Beyond this |z| a negative argument with beta = 1, 0 < alpha < 1 always goes
// through the integral representation. Inside it the series is used unless
// its peak term is too large for double precision.
inline constexpr double kMittagLefflerSeriesRadius = 12.0;

namespace detail {

inline double ml_log_term(const MLParams& p, double z, int k, int& sign) {
  if (k > 0 && z == 0.0) return -std::numeric_limits<double>::infinity();
  int sg = 1;
  const double lg = log_abs_gamma(p.alpha * k + p.beta, &sg);
  sign = sg * ((z < 0.0 && (k & 1)) ? -1 : 1);
  return (k == 0 ? 0.0 : k * std::log(std::abs(z))) - lg;
}

inline SeriesValue ml_double(const MLParams& p, double z, const SeriesControl& ctl) {
  KahanSum<double> acc;
  StoppingRule stop(ctl);
  double zk = 1.0;
  double last = 0.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    if (k > 0) zk *= z;
    const double x = p.alpha * k + p.beta;
    double term;
    if (x < 170.0 && std::isfinite(zk) && std::abs(zk) > 1e-290) {
      term = zk * rgamma(x);
    } else {
      int sg = 1;
      const double l = ml_log_term(p, z, k, sg);
      term = sg * std::exp(l);
    }
    acc.add(term);
    last = std::abs(term);
    if (stop.update(last, std::abs(acc.sum())))
      return {acc.sum(), stop.tail() + 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum(), k + 1, false};
  }
  throw ConvergenceError("mittag_leffler: max_terms reached", acc.sum(), last);
}

inline SeriesValue ml_extended(const MLParams& p, double z, const SeriesControl& ctl, double log2_peak) {
  using fracdiff::detail::BigFloat;
  const long bits = ctl.bits_for(log2_peak);
  if (bits > ctl.max_bits) throw ConvergenceError("mittag_leffler: required precision exceeds max_bits");
  BigFloat sum(bits), zk(1.0, bits), zz(z, bits), x(bits), g(bits), term(bits), al(p.alpha, bits);
  StoppingRule stop(ctl);
  double last = 0.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    if (k > 0) zk *= zz;
    x.set(al);
    x *= static_cast<double>(k);
    x += p.beta;
    fracdiff::detail::big_gamma(g, x);
    term.set(zk);
    term /= g;
    sum += term;
    last = std::abs(term.to_double());
    if (stop.update(last, std::abs(sum.to_double()))) {
      const double round = std::ldexp(std::exp2(log2_peak), -static_cast<int>(bits) + 8) * (k + 1);
      return {sum.to_double(), stop.tail() + round, k + 1, true};
    }
  }
  throw ConvergenceError("mittag_leffler: max_terms reached (extended)", sum.to_double(), last);
}

}  // namespace detail

// E_alpha(-y) for 0 < alpha < 1, y > 0 through
//   (sin(alpha pi)/pi) int_0^inf r^{alpha-1} e^{-r y^{1/alpha}} / (r^{2 alpha} + 2 r^alpha cos(alpha pi) + 1) dr
inline SeriesValue mittag_leffler_integral(double alpha, double y) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("mittag_leffler_integral: alpha must lie in (0,1)");
  if (!(y > 0.0)) throw DomainError("mittag_leffler_integral: y must be positive");
  const double c = std::pow(y, 1.0 / alpha);
  const double ca = cospi(alpha), sa = sinpi(alpha);
  // r = s / c
  auto f = [alpha, c, ca](double s, double lo, double) -> double {
    const double r = lo / c;
    const double ra = std::pow(r, alpha);
    return std::pow(lo, alpha - 1.0) * std::exp(-s) / (ra * ra + 2.0 * ra * ca + 1.0);
  };
  transform::QuadConfig cfg;
  cfg.abs_tol = 1e-300;
  cfg.rel_tol = 1e-14;
  cfg.max_levels = 10;
  if (c > 1e-8 && c < 60.0) cfg.split_points = {c};
  const auto r = transform::integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg);
  const double scale = sa / std::numbers::pi * std::pow(c, -alpha);
  return {scale * r.value, scale * r.error + 1e-16 * std::abs(scale * r.value), r.evaluations, false};
}

// Leading terms of E_alpha(-y) ~ sum_{k>=1} (-1)^{k+1} y^{-k} / Gamma(1 - alpha k)
inline double mittag_leffler_asymptotic(double alpha, double y, int terms) {
  double s = 0.0;
  for (int k = 1; k <= terms; ++k) s += ((k & 1) ? 1.0 : -1.0) * std::pow(y, -k) * rgamma(1.0 - alpha * k);
  return s;
}

inline SeriesValue mittag_leffler_series(const MLParams& p, double z, const SeriesControl& ctl = {}) {
  p.validate();
  ctl.validate();
  if (!std::isfinite(z)) throw DomainError("mittag_leffler: non-finite argument");
  if (p.alpha == 1.0 && p.beta == 1.0) return {std::exp(z), 0.0, 0, false};
  if (z == 0.0) return {rgamma(p.beta), 0.0, 1, false};
  const bool lamperti_ok = z < 0.0 && p.beta == 1.0 && p.alpha < 1.0;
  if (lamperti_ok && -z > kMittagLefflerSeriesRadius) return mittag_leffler_integral(p.alpha, -z);
  const auto scan = detail::scan_peak([&](int k, int& sg) { return detail::ml_log_term(p, z, k, sg); }, ctl);
  const double peak = std::exp(scan.log_peak);
  const bool force = std::abs(z) > ctl.extended_precision_threshold;
  if (!force && (scan.same_sign || ctl.double_is_enough(peak))) return detail::ml_double(p, z, ctl);
  if (lamperti_ok) return mittag_leffler_integral(p.alpha, -z);
  return detail::ml_extended(p, z, ctl, scan.log_peak / std::numbers::ln2);
}

inline double mittag_leffler(const MLParams& p, double z, const SeriesControl& ctl = {}) {
  return mittag_leffler_series(p, z, ctl).value;
}

}  // namespace fracdiff::specfun
