#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "fracdiff/error.hpp"
#include "fracdiff/laws/cf.hpp"
#include "fracdiff/laws/densities.hpp"
#include "fracdiff/laws/model.hpp"
#include "fracdiff/transform/fourier.hpp"

namespace fracdiff::laws {

// Largest |z| of the Kilbas-Saigo table used for inversion. Beyond ~25 the
// coefficient table needs several hundred bits and thousands of terms.
inline constexpr double kCaputoInversionZMax = 25.0;

inline transform::InversionConfig caputo_inversion_config(double order, double abs_tol = 1e-9) {
  transform::InversionConfig cfg;
  cfg.abs_tol = abs_tol;
  cfg.tail_exponent = order;
  return cfg;
}

namespace detail {

inline std::vector<double> invert_on(const transform::SymmetricInverter& inv, const std::vector<double>& xs) {
  std::vector<double> v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = inv.density(xs[i]);
  return v;
}

inline void require_sorted(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1])) throw GridError("density curve: xs must be strictly increasing");
}

}  // namespace detail

inline std::vector<double> uniform_grid(double xmin, double xmax, int n) {
  if (n < 2) throw GridError("uniform_grid: need at least 2 nodes");
  if (!(xmax > xmin)) throw GridError("uniform_grid: empty interval");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = xmin + (xmax - xmin) * i / (n - 1);
  return xs;
}

inline DensityMethod default_method(const ModelSpec& m) {
  switch (m.kind) {
    case ModelKind::McBrideBifractional:
    case ModelKind::HigherOrderMcBride: return DensityMethod::ClosedForm;
    case ModelKind::CaputoTime:
      return m.nu == 1.0 ? DensityMethod::ClosedForm : DensityMethod::FourierInversion;
    default: return DensityMethod::FourierInversion;
  }
}

// Tabulates the one-dimensional law of the model at time t.
inline DensityCurve density_curve(const ModelSpec& m, const std::vector<double>& xs, double t,
                                  std::optional<DensityMethod> method = std::nullopt,
                                  std::optional<transform::InversionConfig> inversion = std::nullopt) {
  m.validate();
  detail::require_sorted(xs);
  if (!(t > 0.0)) throw DomainError("density_curve: t must be positive");
  DensityCurve c;
  c.xs = xs;
  c.t = t;
  c.model = m;
  c.method = method.value_or(default_method(m));
  c.vals.resize(xs.size());

  switch (m.kind) {
    case ModelKind::McBrideBifractional:
    case ModelKind::HigherOrderMcBride: {
      const double a = m.kind == ModelKind::McBrideBifractional ? m.alpha : 2.0 / m.korder;
      if (c.method == DensityMethod::ClosedForm) {
        for (std::size_t i = 0; i < xs.size(); ++i) c.vals[i] = wright_density(a, m.hurst, xs[i], t);
      } else if (c.method == DensityMethod::FourierInversion) {
        const auto cfg = inversion.value_or(mcbride_inversion_config(a, m.hurst, t));
        const transform::SymmetricInverter inv([&](double b) { return cf_mcbride(a, m.hurst, b, t); }, cfg);
        c.vals = detail::invert_on(inv, xs);
      } else if (c.method == DensityMethod::MixtureQuadrature) {
        for (std::size_t i = 0; i < xs.size(); ++i) c.vals[i] = subordination_density(a, m.hurst, xs[i], t);
      } else {
        throw DomainError("density_curve: method not available for this model");
      }
      break;
    }
    case ModelKind::CaputoTime:
    case ModelKind::CaputoRiesz: {
      const double order = m.kind == ModelKind::CaputoTime ? 2.0 : m.alpha;
      if (c.method == DensityMethod::ClosedForm) {
        if (!(m.nu == 1.0 && order == 2.0)) throw DomainError("density_curve: no closed form for this model");
        const double var = std::pow(t, 2.0 * m.hurst);
        for (std::size_t i = 0; i < xs.size(); ++i) c.vals[i] = gaussian_density(xs[i], var);
      } else if (c.method == DensityMethod::MixtureQuadrature) {
        if (!(std::abs(m.nu - 0.75) < 1e-15 && std::abs(m.hurst - 0.25) < 1e-15 && order == 2.0))
          throw DomainError("density_curve: mixture form needs nu = 3/4, H = 1/4");
        for (std::size_t i = 0; i < xs.size(); ++i) c.vals[i] = bwt_density(xs[i], t);
      } else if (c.method == DensityMethod::FourierInversion) {
        auto cfg = inversion.value_or(caputo_inversion_config(order));
        const double scale = m.hurst * std::pow(t, m.nu + 2.0 * m.hurst - 1.0);
        const double bmax = std::pow(kCaputoInversionZMax / scale, 1.0 / order);
        cfg.max_cutoff = std::min(cfg.max_cutoff, bmax);
        cfg.cutoff = std::min(cfg.cutoff, cfg.max_cutoff);
        const CaputoCf cf(m.nu, m.hurst, t, cfg.max_cutoff, order);
        const transform::SymmetricInverter inv(cf, cfg);
        c.vals = detail::invert_on(inv, xs);
      } else {
        throw DomainError("density_curve: method not available for this model");
      }
      break;
    }
    case ModelKind::HigherOrderCaputo:
      throw DomainError("density_curve: the higher-order Caputo model has no probability density");
  }
  return c;
}

}  // namespace fracdiff::laws
