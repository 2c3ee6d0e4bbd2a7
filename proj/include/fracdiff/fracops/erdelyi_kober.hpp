#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "fracdiff/error.hpp"
#include "fracdiff/specfun/gamma.hpp"
#include "fracdiff/transform/quadrature.hpp"

namespace fracdiff::fracops {

struct Monomial {
  double coeff = 1.0;
  double exponent = 0.0;  // coeff * t^exponent

  double operator()(double t) const { return coeff * std::pow(t, exponent); }
};

using MonomialSeries = std::vector<Monomial>;

// I_m^{eta,alpha} f(t) = t^{-m(eta+alpha)} / Gamma(alpha) int_0^t (t^m - u^m)^{alpha-1} u^{m eta} f(u) d(u^m)
struct EKOperator {
  double m = 1.0;
  double eta = 0.0;
  double alpha = 0.0;

  void validate() const {
    if (!(m > 0.0)) throw DomainError("EKOperator: m must be positive");
    if (!std::isfinite(eta) || !std::isfinite(alpha)) throw DomainError("EKOperator: non-finite parameter");
  }
};

// (t^{a1} d/dt t^{a2})^alpha
struct McBrideOp {
  double a1 = 0.0;
  double a2 = 0.0;
  double alpha = 1.0;

  double mbar() const { return 1.0 - a1 - a2; }
  void validate() const {
    if (!(a1 + a2 < 1.0)) throw DomainError("McBrideOp: a1 + a2 must be < 1");
    if (!std::isfinite(alpha)) throw DomainError("McBrideOp: non-finite alpha");
  }
};

// Gamma-ratio action on t^gamma; exponent unchanged
inline Monomial ek_monomial(const EKOperator& op, const Monomial& p) {
  op.validate();
  if (op.alpha == 0.0) return p;
  const double a = op.eta + 1.0 + p.exponent / op.m;
  if (specfun::is_nonpositive_integer(a)) throw PoleError("ek_monomial: eta + 1 + gamma/m at a pole");
  return {p.coeff * specfun::gamma_ratio(a, a + op.alpha), p.exponent};
}

inline MonomialSeries ek_monomial(const EKOperator& op, const MonomialSeries& s) {
  MonomialSeries out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(ek_monomial(op, p));
  return out;
}

inline transform::QuadConfig default_ek_quad() {
  transform::QuadConfig c;
  c.abs_tol = 1e-300;
  c.rel_tol = 1e-13;
  c.max_levels = 10;
  return c;
}

// Numeric I_m^{eta,alpha} f(t), alpha > 0, after s = u^m:
//   t^{-m eta - m alpha} / Gamma(alpha) int_0^{t^m} (t^m - s)^{alpha-1} s^eta f(s^{1/m}) ds
template <class F>
transform::QuadResult ek_integral_numeric_detailed(const EKOperator& op, F&& f, double t,
                                                   const transform::QuadConfig& cfg = default_ek_quad()) {
  op.validate();
  if (!(op.alpha > 0.0)) throw DomainError("ek_integral_numeric: alpha must be positive");
  if (!(op.eta > -1.0)) throw DomainError("ek_integral_numeric: eta must exceed -1 for integrability at 0");
  if (!(t > 0.0)) throw DomainError("ek_integral_numeric: t must be positive");
  const double big_t = std::pow(t, op.m);
  const double inv_m = 1.0 / op.m;
  auto g = [&](double, double lo, double hi) -> double {
    return std::pow(hi, op.alpha - 1.0) * std::pow(lo, op.eta) * f(std::pow(lo, inv_m));
  };
  auto r = transform::integrate(g, 0.0, big_t, cfg);
  const double scale = std::pow(t, -op.m * (op.eta + op.alpha)) * specfun::rgamma(op.alpha);
  r.value *= scale;
  r.error *= std::abs(scale);
  return r;
}

template <class F>
double ek_integral_numeric(const EKOperator& op, F&& f, double t,
                           const transform::QuadConfig& cfg = default_ek_quad()) {
  return transform::require_converged(ek_integral_numeric_detailed(op, f, t, cfg), "ek_integral_numeric").value;
}

// alpha in (-1, 0]: (eta+alpha+1) I^{eta,alpha+1} f + (1/m) I^{eta,alpha+1} (t f')
template <class F, class DF>
double ek_apply_negative_order(const EKOperator& op, F&& f, DF&& df, double t,
                               const transform::QuadConfig& cfg = default_ek_quad()) {
  op.validate();
  if (!(op.alpha > -1.0 && op.alpha <= 0.0)) throw DomainError("ek_apply_negative_order: alpha must lie in (-1, 0]");
  if (op.alpha == 0.0) return f(t);
  const EKOperator up{op.m, op.eta, op.alpha + 1.0};
  const double a = ek_integral_numeric(up, f, t, cfg);
  const double b = ek_integral_numeric(up, [&](double u) { return u * df(u); }, t, cfg);
  return (op.eta + op.alpha + 1.0) * a + b / op.m;
}

inline Monomial mcbride_power_monomial(const McBrideOp& op, const Monomial& p) {
  op.validate();
  if (op.alpha == 0.0) return p;
  const double mb = op.mbar();
  const double a = (1.0 - op.a1 + p.exponent) / mb;
  if (specfun::is_nonpositive_integer(a)) throw PoleError("mcbride_power_monomial: Gamma argument at a pole");
  return {p.coeff * std::pow(mb, op.alpha) * specfun::gamma_ratio(a, a - op.alpha), p.exponent - op.alpha * mb};
}

inline MonomialSeries mcbride_power_monomial(const McBrideOp& op, const MonomialSeries& s) {
  MonomialSeries out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(mcbride_power_monomial(op, p));
  return out;
}

// Same action written as mbar^alpha t^{-alpha mbar} I_{mbar}^{a2/mbar, -alpha}
inline Monomial mcbride_power_via_ek(const McBrideOp& op, const Monomial& p) {
  op.validate();
  const double mb = op.mbar();
  const Monomial q = ek_monomial(EKOperator{mb, op.a2 / mb, -op.alpha}, p);
  return {q.coeff * std::pow(mb, op.alpha), q.exponent - op.alpha * mb};
}

// Fourier multiplier of the Riesz derivative
inline double riesz_symbol(double beta, double order) {
  if (!(order > 0.0 && order <= 2.0)) throw DomainError("riesz_symbol: order must lie in (0, 2]");
  return -std::pow(std::abs(beta), order);
}

}  // namespace fracdiff::fracops
