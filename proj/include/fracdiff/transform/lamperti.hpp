#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "fracdiff/error.hpp"
#include "fracdiff/specfun/gamma.hpp"
#include "fracdiff/specfun/mittag_leffler.hpp"
#include "fracdiff/transform/quadrature.hpp"

namespace fracdiff::transform {

// E_{gamma eta}(-theta t^{gamma eta}) as a Lamperti-weighted mixture of E_eta
inline QuadResult ml_lamperti_mixture_detailed(double gammaidx, double etaidx, double theta, double t) {
  if (!(gammaidx > 0.0 && gammaidx <= 1.0)) throw DomainError("ml_lamperti_mixture: gamma must lie in (0,1]");
  if (!(etaidx > 0.0 && etaidx <= 1.0)) throw DomainError("ml_lamperti_mixture: eta must lie in (0,1]");
  if (!(theta >= 0.0)) throw DomainError("ml_lamperti_mixture: theta must be non-negative");
  if (!(t >= 0.0)) throw DomainError("ml_lamperti_mixture: t must be non-negative");
  const specfun::MLParams inner{etaidx, 1.0};
  const double k = std::pow(theta, 1.0 / gammaidx) * std::pow(t, etaidx);
  if (theta == 0.0 || t == 0.0) return {1.0, 0.0, 0, true};
  // point mass at r = 1
  if (gammaidx == 1.0) return {specfun::mittag_leffler(inner, -k), 0.0, 1, true};
  const double cg = specfun::cospi(gammaidx), sg = specfun::sinpi(gammaidx);
  auto f = [&](double, double r, double) -> double {
    const double rg = std::pow(r, gammaidx);
    return std::pow(r, gammaidx - 1.0) / (rg * rg + 2.0 * rg * cg + 1.0) * specfun::mittag_leffler(inner, -r * k);
  };
  QuadConfig cfg;
  cfg.abs_tol = 1e-300;
  cfg.rel_tol = 1e-12;
  cfg.max_levels = 9;
  cfg.split_points = {1.0};
  QuadResult r = integrate(f, 0.0, std::numeric_limits<double>::infinity(), cfg);
  r.value *= sg / std::numbers::pi;
  r.error *= sg / std::numbers::pi;
  return r;
}

inline double ml_lamperti_mixture(double gammaidx, double etaidx, double theta, double t) {
  return require_converged(ml_lamperti_mixture_detailed(gammaidx, etaidx, theta, t), "ml_lamperti_mixture").value;
}

}  // namespace fracdiff::transform
