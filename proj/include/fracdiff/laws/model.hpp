#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fracdiff/error.hpp"

namespace fracdiff::laws {

enum class ModelKind { McBrideBifractional, CaputoTime, CaputoRiesz, HigherOrderMcBride, HigherOrderCaputo };

inline const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::McBrideBifractional: return "mcbride";
    case ModelKind::CaputoTime: return "caputo";
    case ModelKind::CaputoRiesz: return "caputo-riesz";
    case ModelKind::HigherOrderMcBride: return "higher-mcbride";
    case ModelKind::HigherOrderCaputo: return "higher-caputo";
  }
  return "?";
}

struct ModelSpec {
  ModelKind kind = ModelKind::McBrideBifractional;
  double alpha = 0.5;  // McBride power, or the Riesz space order
  double hurst = 0.5;
  double nu = 1.0;     // Caputo order
  int korder = 3;      // higher-order kinds
  int odd_sign = 1;    // c_k for odd k

  static ModelSpec mcbride(double alpha, double hurst) {
    return {ModelKind::McBrideBifractional, alpha, hurst, 1.0, 3, 1};
  }
  static ModelSpec caputo(double nu, double hurst) { return {ModelKind::CaputoTime, 2.0, hurst, nu, 3, 1}; }
  static ModelSpec caputo_riesz(double nu, double hurst, double order) {
    return {ModelKind::CaputoRiesz, order, hurst, nu, 3, 1};
  }
  static ModelSpec higher_mcbride(int k, double hurst) {
    return {ModelKind::HigherOrderMcBride, 2.0 / k, hurst, 1.0, k, 1};
  }
  static ModelSpec higher_caputo(int k, double nu, double hurst, int odd_sign = 1) {
    return {ModelKind::HigherOrderCaputo, 2.0, hurst, nu, k, odd_sign};
  }

  void validate() const {
    if (!(hurst > 0.0 && hurst < 1.0)) throw DomainError("ModelSpec: hurst must lie in (0,1)");
    switch (kind) {
      case ModelKind::McBrideBifractional:
        // alpha = 1 is the Gaussian endpoint
        if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("ModelSpec: McBride alpha must lie in (0,1]");
        break;
      case ModelKind::CaputoRiesz:
        if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("ModelSpec: Riesz order must lie in (0,2]");
        [[fallthrough]];
      case ModelKind::CaputoTime:
        if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("ModelSpec: nu must lie in (0,1]");
        break;
      case ModelKind::HigherOrderCaputo:
        if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("ModelSpec: nu must lie in (0,1]");
        if (odd_sign != 1 && odd_sign != -1) throw DomainError("ModelSpec: odd_sign must be +1 or -1");
        [[fallthrough]];
      case ModelKind::HigherOrderMcBride:
        if (korder < 3) throw DomainError("ModelSpec: k must be >= 3");
        break;
    }
  }

  // c_k of the higher-order equation
  double ck() const {
    if (korder % 2 == 0) return ((korder / 2 + 1) % 2 == 0) ? 1.0 : -1.0;
    return static_cast<double>(odd_sign);
  }
};

enum class DensityMethod { ClosedForm, FourierInversion, MixtureQuadrature, MonteCarlo };

inline const char* to_string(DensityMethod m) {
  switch (m) {
    case DensityMethod::ClosedForm: return "closed-form";
    case DensityMethod::FourierInversion: return "fourier-inversion";
    case DensityMethod::MixtureQuadrature: return "mixture-quadrature";
    case DensityMethod::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

struct DensityCurve {
  std::vector<double> xs;
  std::vector<double> vals;
  double t = 1.0;
  ModelSpec model;
  DensityMethod method = DensityMethod::ClosedForm;

  // trapezoid rule on the stored grid
  double integral() const {
    double s = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) s += 0.5 * (xs[i] - xs[i - 1]) * (vals[i] + vals[i - 1]);
    return s;
  }
  double min_value() const {
    double m = INFINITY;
    for (double v : vals) m = std::min(m, v);
    return m;
  }
};

struct LampertiParams {
  double alpha = 0.5;
  void validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("LampertiParams: alpha must lie in (0,1)");
  }
};

}  // namespace fracdiff::laws
