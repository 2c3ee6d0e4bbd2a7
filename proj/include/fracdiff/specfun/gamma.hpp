#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "fracdiff/error.hpp"

namespace fracdiff::specfun {

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x), exact zeros at the integers
inline double sinpi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

inline double cospi(double x) { return sinpi(x + 0.5); }

namespace detail {

inline double stirling_tail(double x) {
  const double r = 1.0 / x, r2 = r * r;
  return r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 * (1.0 / 1680 - r2 / 1188))));
}

}  // namespace detail

// std::tgamma, with poles reported instead of returning +-inf
inline double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) throw PoleError("gamma_fn: pole at non-positive integer");
  return std::tgamma(x);
}

// log|Gamma(x)|; reentrant (lgamma_r), no shared signgam
inline double log_abs_gamma(double x, int* sign = nullptr) {
  int s = 1;
  const double v = ::lgamma_r(x, &s);
  if (sign) *sign = s;
  return v;
}

// 1/Gamma(x); exactly zero at the poles and continuous through them
inline double rgamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) return x < 171.0 ? 1.0 / std::tgamma(x) : std::exp(-log_abs_gamma(x));
  // reflection keeps 1/Gamma finite where Gamma(x) underflows
  const double s = sinpi(x);
  if (1.0 - x < 171.0) return s * std::tgamma(1.0 - x) / std::numbers::pi;
  const double lg = log_abs_gamma(1.0 - x) + std::log(std::abs(s)) - std::log(std::numbers::pi);
  return std::copysign(std::exp(lg), s);
}

// log Gamma(a) - log Gamma(b) for a, b >= 20 without the cancellation of two large logs
inline double log_gamma_ratio_large(double a, double b) {
  const double d = a - b;
  return (a - 0.5) * std::log1p(d / b) + d * (std::log(b) - 1.0) + detail::stirling_tail(a) -
         detail::stirling_tail(b);
}

// Gamma(a)/Gamma(b). A pole in b gives 0, a pole in a throws.
inline double gamma_ratio(double a, double b) {
  if (is_nonpositive_integer(a)) throw PoleError("gamma_ratio: numerator at a pole");
  if (is_nonpositive_integer(b)) return 0.0;
  if (a >= 20.0 && b >= 20.0) return std::exp(log_gamma_ratio_large(a, b));
  if (std::abs(a) < 150.0 && std::abs(b) < 150.0) return gamma_fn(a) * rgamma(b);
  int sa = 1, sb = 1;
  const double la = log_abs_gamma(a, &sa), lb = log_abs_gamma(b, &sb);
  return sa * sb * std::exp(la - lb);
}

}  // namespace fracdiff::specfun
