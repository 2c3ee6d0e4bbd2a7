#pragma once

// Density of a symmetric law from its (real, even) characteristic function:
//   u(x) = (1/pi) int_0^B cos(beta x) cf(beta) dbeta + tail,
// where the tail uses the asymptotic form sum_j C_j beta^{-p_j} for beta > B.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "fracdiff/error.hpp"
#include "fracdiff/transform/gauss_legendre.hpp"

namespace fracdiff::transform {

struct TailTerm {
  double coefficient = 0.0;
  double exponent = 2.0;
};

struct InversionConfig {
  double cutoff = 8.0;  // B, or the starting value when adaptive
  int nodes = 2048;     // sample intervals on [0, B] (rounded up to even)
  double tail_exponent = 2.0;
  double tail_coefficient = std::numeric_limits<double>::quiet_NaN();  // NaN: estimate from cf(B) B^p
  std::vector<TailTerm> extra_tail;  // further known asymptotic terms
  bool adaptive = true;
  double abs_tol = 1e-8;  // target on the density
  double max_cutoff = 256.0;

  void validate() const {
    if (!(cutoff > 0.0)) throw DomainError("InversionConfig: cutoff must be positive");
    if (nodes < 64) throw DomainError("InversionConfig: nodes must be >= 64");
    if (!(tail_exponent > 1.0)) throw DomainError("InversionConfig: insufficient decay (tail_exponent <= 1)");
    for (const auto& t : extra_tail)
      if (!(t.exponent > 1.0)) throw DomainError("InversionConfig: insufficient decay in extra tail term");
  }
};

namespace detail {

// int_a^inf cos(u) u^{-p} du, a > 0, p > 1
inline double cos_power_tail(double a, double p) {
  constexpr double kSwitch = 40.0;
  double s = 0.0;
  double start = a;
  if (a < kSwitch) {
    static const GaussLegendreRule rule = gauss_legendre(12);
    auto f = [p](double u) { return std::cos(u) * std::pow(u, -p); };
    // geometric panels while u^{-p} is steep, then unit panels
    double u = a;
    while (u < kSwitch) {
      const double v = std::min(kSwitch, u < 1.0 ? std::min(2.0 * u, 1.0) : u + 1.0);
      s += gauss_legendre_panel(rule, f, u, v);
      u = v;
    }
    start = kSwitch;
  }
  // int_A^inf e^{iu} u^{-p} du ~ i e^{iA} A^{-p} sum_k (p)_k (-i/A)^k
  std::complex<double> acc = 0.0, term = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= std::complex<double>(0.0, -(p + k - 1.0) / start);
    const double mag = std::abs(term);
    if (mag > prev) break;
    acc += term;
    prev = mag;
    if (mag < 1e-18) break;
  }
  const std::complex<double> lead = std::complex<double>(0.0, 1.0) * std::polar(std::pow(start, -p), start);
  return s + (lead * acc).real();
}

// int_B^inf cos(beta x) beta^{-p} dbeta
inline double tail_integral(double x, double b, double p) {
  const double ax = std::abs(x);
  if (ax * b < 1e-300) return std::pow(b, 1.0 - p) / (p - 1.0);
  return std::pow(ax, p - 1.0) * cos_power_tail(b * ax, p);
}

// Filon-Simpson weights
inline void filon_weights(double th, double& a, double& b, double& g) {
  if (std::abs(th) < 0.02) {
    const double t2 = th * th, t3 = t2 * th, t4 = t2 * t2, t5 = t4 * th, t6 = t4 * t2, t7 = t6 * th;
    a = 2.0 * t3 / 45.0 - 2.0 * t5 / 315.0 + 2.0 * t7 / 4725.0;
    b = 2.0 / 3.0 + 2.0 * t2 / 15.0 - 4.0 * t4 / 105.0 + 2.0 * t6 / 567.0;
    g = 4.0 / 3.0 - 2.0 * t2 / 15.0 + t4 / 210.0 - t6 / 11340.0;
    return;
  }
  const double s = std::sin(th), c = std::cos(th), t3 = th * th * th;
  a = (th * th + th * s * c - 2.0 * s * s) / t3;
  b = 2.0 * (th * (1.0 + c * c) - 2.0 * s * c) / t3;
  g = 4.0 * (s - th * c) / t3;
}

}  // namespace detail

// Samples the characteristic function once; density(x) can then be
// evaluated at any x. Immutable after construction.
class SymmetricInverter {
 public:
  template <class Cf>
  SymmetricInverter(Cf&& cf, const InversionConfig& cfg) : cfg_(cfg) {
    cfg.validate();
    double b = cfg.cutoff;
    if (cfg.adaptive) {
      while (true) {
        const double bound = tail_bound(cf, b);
        if (bound <= 0.1 * cfg.abs_tol || b >= cfg.max_cutoff) break;
        b = std::min(cfg.max_cutoff, 1.5 * b);
      }
    }
    cutoff_ = b;
    tail_bound_ = tail_bound(cf, b);
    tail_ = cfg.extra_tail;
    double c0 = cfg.tail_coefficient;
    if (std::isnan(c0)) c0 = estimate_coefficient(cf, b);
    tail_.insert(tail_.begin(), TailTerm{c0, cfg.tail_exponent});

    int n = cfg.nodes + (cfg.nodes & 1);
    // keep the sampling step no coarser than the requested resolution on [0, cutoff]
    const double h0 = cfg.cutoff / cfg.nodes;
    n = std::max(n, 2 * static_cast<int>(std::ceil(0.5 * b / h0)));
    h_ = b / n;
    samples_.resize(n + 1);
    for (int i = 0; i <= n; ++i) samples_[i] = cf(i * h_);
  }

  double cutoff() const { return cutoff_; }
  // estimated bound on the neglected part of the tail, in density units
  double tail_error() const { return tail_bound_ / std::numbers::pi; }
  double tail_coefficient() const { return tail_.front().coefficient; }
  int samples() const { return static_cast<int>(samples_.size()); }

  double density(double x) const {
    const int n = static_cast<int>(samples_.size()) - 1;
    const double th = x * h_;
    double a, b, g;
    detail::filon_weights(th, a, b, g);
    double ce = 0.0, co = 0.0;
    for (int i = 0; i <= n; i += 2) ce += samples_[i] * std::cos(x * i * h_);
    ce -= 0.5 * (samples_[0] + samples_[n] * std::cos(x * cutoff_));
    for (int i = 1; i < n; i += 2) co += samples_[i] * std::cos(x * i * h_);
    const double body = h_ * (a * samples_[n] * std::sin(x * cutoff_) + b * ce + g * co);
    double tail = 0.0;
    for (const auto& t : tail_)
      if (t.coefficient != 0.0) tail += t.coefficient * detail::tail_integral(x, cutoff_, t.exponent);
    return (body + tail) / std::numbers::pi;
  }

 private:
  template <class Cf>
  double estimate_coefficient(Cf& cf, double b) const {
    double v = cf(b);
    for (const auto& t : cfg_.extra_tail) v -= t.coefficient * std::pow(b, -t.exponent);
    return v * std::pow(b, cfg_.tail_exponent);
  }

  // bound on int_B^inf |cf - asymptotic form|
  template <class Cf>
  double tail_bound(Cf& cf, double b) const {
    const double p = cfg_.tail_exponent;
    auto model = [&](double c, double beta) {
      double v = c * std::pow(beta, -p);
      for (const auto& t : cfg_.extra_tail) v += t.coefficient * std::pow(beta, -t.exponent);
      return v;
    };
    double c = cfg_.tail_coefficient;
    if (std::isnan(c)) {
      // compare the coefficient estimated at B and at 2B/3
      const double c1 = estimate_coefficient(cf, b);
      const double c2 = estimate_coefficient(cf, b / 1.5);
      return 2.0 * std::abs(c1 - c2) * std::pow(b, 1.0 - p) / (p - 1.0);
    }
    const double resid = std::abs(cf(b) - model(c, b));
    return 2.0 * resid * b / (p - 1.0);
  }

  InversionConfig cfg_;
  double cutoff_ = 0.0;
  double tail_bound_ = 0.0;
  double h_ = 0.0;
  std::vector<double> samples_;
  std::vector<TailTerm> tail_;
};

template <class Cf>
double invert_cf_symmetric(Cf&& cf, double x, const InversionConfig& cfg = {}) {
  return SymmetricInverter(cf, cfg).density(x);
}

}  // namespace fracdiff::transform
