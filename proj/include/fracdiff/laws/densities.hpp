#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "fracdiff/error.hpp"
#include "fracdiff/laws/model.hpp"
#include "fracdiff/specfun/airy.hpp"
#include "fracdiff/specfun/gamma.hpp"
#include "fracdiff/specfun/wright.hpp"
#include "fracdiff/transform/quadrature.hpp"

namespace fracdiff::laws {

namespace detail {

inline void check_hurst(double h, const char* who) {
  if (!(h > 0.0 && h < 1.0)) throw DomainError(std::string(who) + ": hurst must lie in (0,1)");
}
inline void check_time(double t, const char* who) {
  if (!(t > 0.0)) throw DomainError(std::string(who) + ": t must be positive");
}

inline transform::QuadConfig mixture_quad() {
  transform::QuadConfig c;
  c.abs_tol = 1e-14;
  c.rel_tol = 1e-11;
  c.max_levels = 10;
  return c;
}

}  // namespace detail

// Bi-fractional McBride law: M_{alpha/2}(2^{alpha/2}|x| / t^{H alpha}) / (2^{1-alpha/2} t^{H alpha})
inline double wright_density(double alpha, double hurst, double x, double t) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("wright_density: alpha must lie in (0,1]");
  detail::check_hurst(hurst, "wright_density");
  detail::check_time(t, "wright_density");
  const double s = std::pow(t, hurst * alpha);
  const double z = std::pow(2.0, 0.5 * alpha) * std::abs(x) / s;
  return specfun::mwright(0.5 * alpha, z) / (std::pow(2.0, 1.0 - 0.5 * alpha) * s);
}

inline double wright_density(const ModelSpec& m, double x, double t) {
  if (m.kind != ModelKind::McBrideBifractional) throw DomainError("wright_density: McBride model required");
  return wright_density(m.alpha, m.hurst, x, t);
}

// Generalized grey Brownian motion marginal
inline double ggbm_density(double delta, double gammaexp, double x, double t) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("ggbm_density: delta must lie in (0,1]");
  if (!(gammaexp > 0.0 && gammaexp <= 2.0)) throw DomainError("ggbm_density: gamma must lie in (0,2]");
  detail::check_time(t, "ggbm_density");
  const double s = std::pow(t, 0.5 * gammaexp);
  return specfun::mwright(0.5 * delta, std::abs(x) / s) / (2.0 * s);
}

inline double gaussian_density(double x, double variance) {
  return std::exp(-0.5 * x * x / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

// Lamperti law on (0, inf)
inline double lamperti_density(const LampertiParams& p, double r) {
  p.validate();
  if (!(r > 0.0)) throw DomainError("lamperti_density: r must be positive");
  const double ra = std::pow(r, p.alpha);
  return specfun::sinpi(p.alpha) / std::numbers::pi * ra / r /
         (ra * ra + 1.0 + 2.0 * ra * specfun::cospi(p.alpha));
}

// closed form: (1/(pi a)) [atan((r^a + cos pi a)/sin pi a) - pi/2] + 1
inline double lamperti_cdf(const LampertiParams& p, double r) {
  p.validate();
  if (!(r > 0.0)) return 0.0;
  if (std::isinf(r)) return 1.0;
  const double a = p.alpha;
  const double u = std::pow(r, a);
  const double v = std::atan((u + specfun::cospi(a)) / specfun::sinpi(a));
  return 1.0 + (v - 0.5 * std::numbers::pi) / (std::numbers::pi * a);
}

// kernel of |B_H(t)|^{1/2H} after the change w = z^{2H}: half-normal in
// s = (z / sqrt t)^{2H} with variance 4
inline double subordination_kernel(double hurst, double z, double t) {
  detail::check_hurst(hurst, "subordination_kernel");
  detail::check_time(t, "subordination_kernel");
  if (!(z > 0.0)) return 0.0;
  const double w = std::pow(z / std::sqrt(t), 4.0 * hurst);
  return hurst * std::numbers::sqrt2 / (std::sqrt(std::numbers::pi) * std::pow(t, hurst)) *
         std::pow(z, 2.0 * hurst - 1.0) * std::exp(-0.125 * w);
}

// u_alpha as a mixture of u_{2 alpha} over the random time above
inline transform::QuadResult subordination_density_detailed(double alpha, double hurst, double x, double t) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw DomainError("subordination_density: alpha must lie in (0,1/2]");
  detail::check_hurst(hurst, "subordination_density");
  detail::check_time(t, "subordination_density");
  const double ax = std::abs(x);
  const double th = std::pow(t, hurst);
  const double c = std::pow(2.0, alpha);
  // u_{2 alpha}(x, z) with z^{2H} = s t^H, so z^{2 H alpha} = (s t^H)^alpha
  auto f = [&](double s) -> double {
    if (!(s > 0.0)) return 0.0;
    const double q = std::pow(s * th, alpha);
    const double val = specfun::mwright(alpha, c * ax / q) / (2.0 / c * q);
    return std::exp(-0.125 * s * s) * val;
  };
  auto cfg = detail::mixture_quad();
  cfg.split_points = {1.0};
  auto r = transform::integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg);
  const double k = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  r.value *= k;
  r.error *= k;
  return r;
}

inline double subordination_density(double alpha, double hurst, double x, double t) {
  return transform::require_converged(subordination_density_detailed(alpha, hurst, x, t), "subordination_density")
      .value;
}

// density of W_t, exp(-z^4 / (16 t)) on z > 0
inline double wt_kernel(double z, double t) {
  detail::check_time(t, "wt_kernel");
  if (!(z >= 0.0)) return 0.0;
  return std::numbers::sqrt2 * specfun::gamma_fn(0.75) * std::exp(-std::pow(z, 4) / (16.0 * t)) /
         (std::numbers::pi * std::pow(t, 0.25));
}

// density of the second subordinator, exp(-z^4 / t) on z > 0
inline double frak_wt_kernel(double z, double t) {
  detail::check_time(t, "frak_wt_kernel");
  if (!(z >= 0.0)) return 0.0;
  return 2.0 * std::numbers::sqrt2 * specfun::gamma_fn(0.75) * std::exp(-std::pow(z, 4) / t) /
         (std::numbers::pi * std::pow(t, 0.25));
}

// law of B(W_t): Gaussian mixture with variance W_t
inline transform::QuadResult bwt_density_detailed(double x, double t) {
  detail::check_time(t, "bwt_density");
  auto f = [&](double z) -> double {
    if (!(z > 0.0)) return 0.0;
    return wt_kernel(z, t) * gaussian_density(x, z);
  };
  auto cfg = detail::mixture_quad();
  cfg.split_points = {std::pow(t, 0.25)};
  return transform::integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg);
}

inline double bwt_density(double x, double t) {
  return transform::require_converged(bwt_density_detailed(x, t), "bwt_density").value;
}

// fundamental solution of t^{1-2H} v_t = -H v_xxx
inline double airy_solution(double x, double t, double hurst) {
  detail::check_hurst(hurst, "airy_solution");
  detail::check_time(t, "airy_solution");
  const double s = std::pow(t, 2.0 * hurst);
  return specfun::airy_ai(x / std::cbrt(1.5 * s)) / std::cbrt(3.0 * s);
}

}  // namespace fracdiff::laws
