#pragma once

// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
// half lines, sinh-sinh on the real line. Integrands may take (x) or
// (x, gap_lo, gap_hi) where the gaps are exact distances to the interval
// ends (infinite for an infinite end), so endpoint singularities can be
// evaluated without cancellation.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include "fracdiff/error.hpp"

namespace fracdiff::transform {

struct QuadConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_levels = 8;
  std::vector<double> split_points;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadConfig: tolerances must be positive");
    if (max_levels < 3 || max_levels > 12) throw DomainError("QuadConfig: max_levels must lie in [3, 12]");
  }
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

inline QuadResult require_converged(const QuadResult& r, const std::string& what) {
  if (!r.converged)
    throw QuadratureError(what + ": tolerance not met (estimate " + std::to_string(r.value) + ", error " +
                              std::to_string(r.error) + ")",
                          r.value, r.error);
  return r;
}

namespace detail {

inline constexpr double kHalfPi = 0.5 * std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Node {
  double x, dlo, dhi, w;
  bool ok;
};

// tanh-sinh on [a, b]
struct TanhSinhMap {
  double a, b, h;
  static constexpr double tmax = 6.0;
  Node operator()(double tau) const {
    const double u = kHalfPi * std::sinh(tau);
    const double ch = std::cosh(u);
    const double w = h * kHalfPi * std::cosh(tau) / (ch * ch);
    const double d = h * std::exp(-std::abs(u)) / ch;  // distance to the nearer end
    if (!(d > 0.0) || !(w > 0.0)) return {0, 0, 0, 0, false};
    if (tau >= 0.0) return {b - d, 2.0 * h - d, d, w, true};
    return {a + d, d, 2.0 * h - d, w, true};
  }
};

// exp-sinh on [a, inf)
struct ExpSinhMap {
  double a;
  static constexpr double tmax = 6.7;
  Node operator()(double tau) const {
    const double u = kHalfPi * std::sinh(tau);
    const double e = std::exp(u);
    const double w = kHalfPi * std::cosh(tau) * e;
    if (!(e > 0.0) || !std::isfinite(w) || e > 1e300) return {0, 0, 0, 0, false};
    return {a + e, e, kInf, w, true};
  }
};

// sinh-sinh on (-inf, inf)
struct SinhSinhMap {
  static constexpr double tmax = 6.7;
  Node operator()(double tau) const {
    const double u = kHalfPi * std::sinh(tau);
    const double x = std::sinh(u);
    const double w = kHalfPi * std::cosh(tau) * std::cosh(u);
    if (!std::isfinite(w) || std::abs(x) > 1e300) return {0, 0, 0, 0, false};
    return {x, kInf, kInf, w, true};
  }
};

template <class G, class Map>
QuadResult de_engine(G& g, const Map& map, double atol, double rtol, int max_levels) {
  QuadResult res;
  const double tmax = Map::tmax;
  auto eval = [&](double tau) -> double {
    const Node n = map(tau);
    if (!n.ok) return 0.0;
    const double v = n.w * g(n.x, n.dlo, n.dhi);
    ++res.evaluations;
    return std::isfinite(v) ? v : 0.0;
  };

  // level 0 and 1 on the full window, keep the magnitudes for pruning
  std::vector<std::pair<double, double>> coarse;
  double sum = 0.0;
  const int k0 = static_cast<int>(std::floor(tmax));
  for (int k = -k0; k <= k0; ++k) {
    const double v = eval(k);
    coarse.emplace_back(k, v);
    sum += v;
  }
  double prev = sum;  // step 1
  double step = 1.0;
  for (int k = -k0; k < k0; ++k) {
    const double tau = k + 0.5;
    const double v = eval(tau);
    coarse.emplace_back(tau, v);
    sum += v;
  }
  step = 0.5;
  double est = sum * step;
  double err = std::abs(est - prev);

  // prune: keep the window where coarse contributions still matter
  const double thresh = 1e-4 * std::numeric_limits<double>::epsilon() * std::abs(est) + 1e-300;
  double lo = 0.0, hi = 0.0;
  for (const auto& [tau, v] : coarse) {
    if (std::abs(v) > thresh) {
      lo = std::min(lo, tau);
      hi = std::max(hi, tau);
    }
  }
  lo = std::max(-tmax, lo - 1.0);
  hi = std::min(tmax, hi + 1.0);

  for (int level = 2; level <= max_levels; ++level) {
    const double h = step * 0.5;
    double add = 0.0;
    const int kl = static_cast<int>(std::ceil((lo - h) / (2.0 * h)));
    const int kh = static_cast<int>(std::floor((hi - h) / (2.0 * h)));
    for (int k = kl; k <= kh; ++k) add += eval(h + 2.0 * h * k);
    sum += add;
    step = h;
    const double next = sum * step;
    err = std::abs(next - est);
    est = next;
    if (level >= 3 && err <= std::max(atol, rtol * std::abs(est))) {
      res.converged = true;
      break;
    }
  }
  res.value = est;
  res.error = err;
  return res;
}

template <class F>
auto as_gapped(F& f) {
  if constexpr (std::is_invocable_r_v<double, F&, double, double, double>) {
    return [&f](double x, double lo, double hi) -> double { return f(x, lo, hi); };
  } else {
    return [&f](double x, double, double) -> double { return f(x); };
  }
}

}  // namespace detail

// Integral of f over [a, b]; a may be -inf, b may be +inf.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadConfig& cfg = {}) {
  cfg.validate();
  if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate: NaN limit");
  if (a == b) return {0.0, 0.0, 0, true};
  if (a > b) {
    QuadResult r = integrate(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }
  auto g = detail::as_gapped(f);
  std::vector<double> cuts{a};
  for (double s : cfg.split_points)
    if (s > a && s < b) cuts.push_back(s);
  std::sort(cuts.begin() + 1, cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(b);

  const int pieces = static_cast<int>(cuts.size()) - 1;
  const double atol = cfg.abs_tol / pieces;
  QuadResult total;
  total.converged = true;
  for (int i = 0; i < pieces; ++i) {
    const double p = cuts[i], q = cuts[i + 1];
    QuadResult r;
    if (std::isinf(p) && std::isinf(q)) {
      auto gg = [&](double x, double, double) { return g(x, detail::kInf, detail::kInf); };
      r = detail::de_engine(gg, detail::SinhSinhMap{}, atol, cfg.rel_tol, cfg.max_levels);
    } else if (std::isinf(q)) {
      auto gg = [&](double x, double dp, double) {
        return g(x, p == a ? dp : x - a, detail::kInf);
      };
      r = detail::de_engine(gg, detail::ExpSinhMap{p}, atol, cfg.rel_tol, cfg.max_levels);
    } else if (std::isinf(p)) {
      // reflect x -> q - y
      auto gg = [&](double y, double dy, double) {
        const double x = q - y;
        return g(x, detail::kInf, q == b ? dy : b - x);
      };
      r = detail::de_engine(gg, detail::ExpSinhMap{0.0}, atol, cfg.rel_tol, cfg.max_levels);
    } else {
      auto gg = [&](double x, double dp, double dq) {
        return g(x, p == a ? dp : x - a, q == b ? dq : b - x);
      };
      r = detail::de_engine(gg, detail::TanhSinhMap{p, q, 0.5 * (q - p)}, atol, cfg.rel_tol, cfg.max_levels);
    }
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  if (!total.converged && total.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total.value)))
    total.converged = true;
  return total;
}

}  // namespace fracdiff::transform
