#pragma once

// Characteristic functions of the McBride and Caputo models.

#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <numbers>

#include "fracdiff/error.hpp"
#include "fracdiff/laws/model.hpp"
#include "fracdiff/specfun/gamma.hpp"
#include "fracdiff/specfun/kilbas_saigo.hpp"
#include "fracdiff/specfun/mittag_leffler.hpp"
#include "fracdiff/transform/fourier.hpp"
#include "fracdiff/transform/quadrature.hpp"

namespace fracdiff::laws {

// E_alpha(-beta^2 t^{2H alpha} / 2^alpha)
inline double cf_mcbride(double alpha, double hurst, double beta, double t) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("cf_mcbride: alpha must lie in (0,1]");
  if (!(hurst > 0.0 && hurst < 1.0)) throw DomainError("cf_mcbride: hurst must lie in (0,1)");
  if (!(t >= 0.0)) throw DomainError("cf_mcbride: t must be non-negative");
  const double y = beta * beta * std::pow(t, 2.0 * hurst * alpha) / std::pow(2.0, alpha);
  return specfun::mittag_leffler({alpha, 1.0}, -y);
}

// Inversion settings with the leading terms of E_alpha(-y) ~ sum (-1)^{k+1} y^{-k} / Gamma(1 - alpha k)
inline transform::InversionConfig mcbride_inversion_config(double alpha, double hurst, double t, double abs_tol = 1e-9) {
  transform::InversionConfig cfg;
  cfg.abs_tol = abs_tol;
  if (alpha == 1.0) {
    cfg.tail_coefficient = 0.0;
    return cfg;
  }
  const double c = std::pow(t, 2.0 * hurst * alpha) / std::pow(2.0, alpha);
  cfg.tail_exponent = 2.0;
  cfg.tail_coefficient = specfun::rgamma(1.0 - alpha) / c;
  for (int k = 2; k <= 4; ++k) {
    const double sg = (k % 2 == 0) ? -1.0 : 1.0;
    cfg.extra_tail.push_back({sg * specfun::rgamma(1.0 - alpha * k) / std::pow(c, k), 2.0 * k});
  }
  return cfg;
}

namespace detail {

inline void check_caputo(double nu, double hurst, const char* who) {
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError(std::string(who) + ": nu must lie in (0,1]");
  if (!(hurst > 0.0 && hurst < 1.0)) throw DomainError(std::string(who) + ": hurst must lie in (0,1)");
}

inline bool is_stationary(double nu, double hurst) { return std::abs(nu + 2.0 * hurst - 1.0) <= 1e-12; }

// index set of the Kilbas-Saigo function for (nu, H)
inline specfun::KilbasSaigoParams caputo_ks_params(double nu, double hurst) {
  const double g = (2.0 * hurst - 1.0) / nu;
  return {nu, 1.0 + g, g};
}

}  // namespace detail

struct CfValue {
  double value = 0.0;
  double abs_error = 0.0;
  bool stationary = false;  // closed form of the Riemann-Liouville stationary case
};

// Caputo-time CF at a fixed t, for |beta| <= beta_max.
// The Kilbas-Saigo coefficient table is built once; the object is read-only
// afterwards and can be shared between threads.
class CaputoCf {
 public:
  CaputoCf(double nu, double hurst, double t, double beta_max, double space_order = 2.0)
      : nu_(nu), hurst_(hurst), t_(t), order_(space_order), beta_max_(std::abs(beta_max)) {
    detail::check_caputo(nu, hurst, "CaputoCf");
    if (!(t > 0.0)) throw DomainError("CaputoCf: t must be positive");
    if (!(order_ > 0.0 && order_ <= 2.0)) throw DomainError("CaputoCf: space order must lie in (0,2]");
    stationary_ = detail::is_stationary(nu, hurst);
    if (!stationary_ && nu + 2.0 * hurst - 1.0 < 0.0)
      throw DomainError("CaputoCf: requires nu + 2H - 1 > 0");
    scale_ = hurst * std::pow(t, nu + 2.0 * hurst - 1.0);
    if (!stationary_)
      series_ = std::make_shared<specfun::KilbasSaigoSeries>(detail::caputo_ks_params(nu, hurst),
                                                             scale_ * std::pow(beta_max_, order_));
  }

  bool stationary() const { return stationary_; }
  double beta_max() const { return beta_max_; }

  CfValue detailed(double beta) const {
    const double ab = std::abs(beta);
    if (ab > beta_max_ * (1.0 + 1e-12)) throw DomainError("CaputoCf: |beta| beyond the tabulated range");
    if (stationary_) {
      // E_{nu,0,-1}(-q) = 1/(1 + Gamma(1-nu) q)
      const double q = hurst_ * std::pow(ab, order_) * specfun::gamma_fn(1.0 - nu_);
      if (q >= 1.0) throw DomainError("CaputoCf: stationary series diverges for this beta");
      return {1.0 / (1.0 + q), 0.0, true};
    }
    const auto v = series_->evaluate(-scale_ * std::pow(ab, order_));
    return {v.value, v.abs_error, false};
  }
  double operator()(double beta) const { return detailed(beta).value; }

 private:
  double nu_, hurst_, t_, order_, beta_max_;
  double scale_ = 0.0;
  bool stationary_ = false;
  std::shared_ptr<const specfun::KilbasSaigoSeries> series_;
};

inline CfValue cf_caputo_detailed(double nu, double hurst, double beta, double t) {
  return CaputoCf(nu, hurst, t, std::abs(beta)).detailed(beta);
}

inline double cf_caputo(double nu, double hurst, double beta, double t) {
  return cf_caputo_detailed(nu, hurst, beta, t).value;
}

inline double cf_caputo_riesz(double nu, double hurst, double order, double beta, double t) {
  return CaputoCf(nu, hurst, t, std::abs(beta), order).detailed(beta).value;
}

// Higher-order Caputo model: Kilbas-Saigo at c_k 2H (-i beta)^k t^{nu+2H-1}
inline std::complex<double> cf_higher_order(const ModelSpec& m, double beta, double t, double* abs_error = nullptr) {
  if (m.kind != ModelKind::HigherOrderCaputo) throw DomainError("cf_higher_order: HigherOrderCaputo model required");
  m.validate();
  if (!(t > 0.0)) throw DomainError("cf_higher_order: t must be positive");
  if (!(m.nu + 2.0 * m.hurst - 1.0 > 0.0)) throw DomainError("cf_higher_order: requires nu + 2H - 1 > 0");
  const int k = m.korder;
  // (-i)^k without rounding
  static const std::complex<double> kPow[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  const std::complex<double> z = m.ck() * 2.0 * m.hurst * kPow[k % 4] * std::pow(beta, k) *
                                 std::pow(t, m.nu + 2.0 * m.hurst - 1.0);
  const specfun::KilbasSaigoSeries s(detail::caputo_ks_params(m.nu, m.hurst), std::abs(z));
  if (z.imag() == 0.0) {
    const auto v = s.evaluate(z.real());
    if (abs_error) *abs_error = v.abs_error;
    return {v.value, 0.0};
  }
  return s.evaluate(z, abs_error);
}

// Mixture form of E_{3/4,1/3,-2/3}(-beta^2 t^{1/4} / 4):
//   Gamma(3/4)/(pi sqrt 2) int_0^inf e^{-w} w^{-3/4} exp(-beta^2 (t w)^{1/4}) dw
inline double cf_bwt_mixture(double beta, double t) {
  if (!(t > 0.0)) throw DomainError("cf_bwt_mixture: t must be positive");
  const double b2 = beta * beta, t4 = std::pow(t, 0.25);
  auto f = [&](double w) -> double {
    if (!(w > 0.0)) return 0.0;
    return std::exp(-w - b2 * t4 * std::pow(w, 0.25)) * std::pow(w, -0.75);
  };
  transform::QuadConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-13;
  cfg.max_levels = 10;
  cfg.split_points = {1.0};
  const auto r = transform::require_converged(
      transform::integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg), "cf_bwt_mixture");
  return specfun::gamma_fn(0.75) / (std::numbers::pi * std::numbers::sqrt2) * r.value;
}

// H = 1/4, nu = 3/4, k = 2n: Gamma(3/4) sqrt 2 / (pi t^{1/4}) int e^{-beta^k y} e^{-y^4/(16t)} dy
inline double cf_higher_order_mixture(int k, double beta, double t) {
  if (k < 2 || k % 2) throw DomainError("cf_higher_order_mixture: k must be even");
  if (!(t > 0.0)) throw DomainError("cf_higher_order_mixture: t must be positive");
  const double bk = std::pow(std::abs(beta), k);
  auto f = [&](double y) -> double { return std::exp(-bk * y - std::pow(y, 4) / (16.0 * t)); };
  transform::QuadConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-13;
  cfg.max_levels = 10;
  cfg.split_points = {std::pow(t, 0.25)};
  const auto r = transform::require_converged(
      transform::integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg), "cf_higher_order_mixture");
  return specfun::gamma_fn(0.75) * std::numbers::sqrt2 / (std::numbers::pi * std::pow(t, 0.25)) * r.value;
}

}  // namespace fracdiff::laws
