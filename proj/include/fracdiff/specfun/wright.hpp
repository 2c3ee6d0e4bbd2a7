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

struct WrightParams {
  double gamma = 0.0;
  double beta = 1.0;

  void validate() const {
    if (!(gamma > -1.0)) throw DomainError("WrightParams: gamma must exceed -1");
    if (!(beta > 0.0)) throw DomainError("WrightParams: beta must be positive");
  }
};

namespace detail {

// log|z^k / (k! Gamma(gamma k + beta))|
inline double wright_log_term(const WrightParams& p, double z, int k, int& sign) {
  const double x = p.gamma * k + p.beta;
  if (is_nonpositive_integer(x)) return -std::numeric_limits<double>::infinity();
  if (z == 0.0 && k > 0) return -std::numeric_limits<double>::infinity();
  int sg = 1;
  const double lg = log_abs_gamma(x, &sg);
  sign = sg * ((z < 0.0 && (k & 1)) ? -1 : 1);
  return (k == 0 ? 0.0 : k * std::log(std::abs(z))) - log_abs_gamma(k + 1.0) - lg;
}

inline SeriesValue wright_double(const WrightParams& p, double z, const SeriesControl& ctl) {
  KahanSum<double> acc;
  StoppingRule stop(ctl);
  double pk = 1.0;  // z^k / k!
  bool log_mode = false;
  double last = 0.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    if (k > 0) pk *= z / k;
    if (!log_mode && std::abs(pk) < 1e-290 && pk != 0.0) log_mode = true;
    const double x = p.gamma * k + p.beta;
    double term;
    if (!log_mode && std::abs(x) < 170.0) {
      term = pk * rgamma(x);
    } else {
      int sg = 1;
      const double l = wright_log_term(p, z, k, sg);
      term = (l == -std::numeric_limits<double>::infinity()) ? 0.0 : sg * std::exp(l);
    }
    acc.add(term);
    last = std::abs(term);
    if (stop.update(last, std::abs(acc.sum())))
      return {acc.sum(), stop.tail() + 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum(), k + 1, false};
  }
  throw ConvergenceError("wright: max_terms reached", acc.sum(), last);
}

inline SeriesValue wright_extended(const WrightParams& p, double z, const SeriesControl& ctl, double log2_peak) {
  using fracdiff::detail::BigFloat;
  const long bits = ctl.bits_for(log2_peak);
  if (bits > ctl.max_bits) throw ConvergenceError("wright: required precision exceeds max_bits");
  BigFloat sum(bits), pk(1.0, bits), zz(z, bits), x(bits), g(bits), term(bits), gam(p.gamma, bits);
  StoppingRule stop(ctl);
  double last = 0.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    if (k > 0) {
      pk *= zz;
      pk /= static_cast<double>(k);
    }
    x.set(gam);
    x *= static_cast<double>(k);
    x += p.beta;
    if (fracdiff::detail::big_is_nonpositive_integer(x)) {
      last = 0.0;
    } else {
      fracdiff::detail::big_gamma(g, x);
      term.set(pk);
      term /= g;
      sum += term;
      last = std::abs(term.to_double());
    }
    if (stop.update(last, std::abs(sum.to_double()))) {
      const double round = std::ldexp(std::exp2(log2_peak), -static_cast<int>(bits) + 8) * (k + 1);
      return {sum.to_double(), stop.tail() + round, k + 1, true};
    }
  }
  throw ConvergenceError("wright: max_terms reached (extended)", sum.to_double(), last);
}

}  // namespace detail

// Wright function W_{gamma,beta}(z) = sum z^k / (k! Gamma(gamma k + beta))
inline SeriesValue wright_series(const WrightParams& p, double z, const SeriesControl& ctl = {}) {
  p.validate();
  ctl.validate();
  if (!std::isfinite(z)) throw DomainError("wright: non-finite argument");
  const auto scan = detail::scan_peak(
      [&](int k, int& sg) { return detail::wright_log_term(p, z, k, sg); }, ctl);
  // terms past the double range break the stopping rule; a same-sign sum that large overflows anyway
  if (scan.log_peak > 700.0) throw ConvergenceError("wright: peak term beyond double range, |z| too large for the series");
  const double peak = std::exp(scan.log_peak);
  const bool force = std::abs(z) > ctl.extended_precision_threshold;
  SeriesValue r = (!force && (scan.same_sign || ctl.double_is_enough(peak)))
                      ? detail::wright_double(p, z, ctl)
                      : detail::wright_extended(p, z, ctl, scan.log_peak / std::numbers::ln2);
  if (!std::isfinite(r.value) || !std::isfinite(r.abs_error)) throw ConvergenceError("wright: non-finite result");
  return r;
}

inline double wright(const WrightParams& p, double z, const SeriesControl& ctl = {}) {
  return wright_series(p, z, ctl).value;
}

// M-Wright function M_lambda(z) = W_{-lambda, 1-lambda}(-z), z >= 0.
// Small z: power series. Larger z: integral representation on (0, pi),
//   M(z) = z^{l/(1-l)} / ((1-l) pi) * int K(phi) exp(-z^{1/(1-l)} K(phi)) dphi,
//   K(phi) = (sin(l phi)/sin phi)^{1/(1-l)} sin((1-l) phi) / sin(l phi).
inline constexpr double kMWrightSeriesLimit = 3.0;

inline double mwright(double lambda, double z) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("mwright: lambda must lie in [0, 1)");
  if (!(z >= 0.0)) throw DomainError("mwright: argument must be non-negative");
  if (lambda == 0.0) return std::exp(-z);
  if (z <= kMWrightSeriesLimit) {
    return detail::wright_double({-lambda, 1.0 - lambda}, -z, SeriesControl{}).value;
  }
  const double q = 1.0 / (1.0 - lambda);
  const double c = std::pow(z, q);
  auto kernel = [lambda, q, c](double phi, double lo, double hi) -> double {
    const double sphi = hi < lo ? std::sin(hi) : std::sin(lo);
    const double sl = std::sin(lambda * phi);
    if (!(sphi > 0.0) || !(sl > 0.0)) return 0.0;
    const double k = std::pow(sl / sphi, q) * std::sin((1.0 - lambda) * phi) / sl;
    if (!std::isfinite(k)) return 0.0;
    return k * std::exp(-c * k);
  };
  transform::QuadConfig cfg;
  cfg.abs_tol = 1e-300;
  cfg.rel_tol = 1e-13;
  cfg.max_levels = 10;
  const auto r = transform::integrate(kernel, 0.0, std::numbers::pi, cfg);
  return std::pow(z, lambda * q) / ((1.0 - lambda) * std::numbers::pi) * r.value;
}

}  // namespace fracdiff::specfun
