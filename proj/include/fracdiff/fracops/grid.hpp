#pragma once

// Fractional integrals and derivatives of uniformly sampled functions.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fracdiff/error.hpp"
#include "fracdiff/specfun/gamma.hpp"

namespace fracdiff::fracops {

struct GridFn {
  std::vector<double> ts;
  std::vector<double> vals;
  bool uniform = false;

  std::size_t size() const { return ts.size(); }
  double step() const { return ts.size() > 1 ? ts[1] - ts[0] : 0.0; }

  static bool spacing_is_uniform(const std::vector<double>& ts) {
    if (ts.size() < 2) return false;
    const double h = ts[1] - ts[0];
    for (std::size_t i = 1; i + 1 < ts.size(); ++i)
      if (std::abs((ts[i + 1] - ts[i]) - h) > 1e-12 * std::abs(h)) return false;
    return true;
  }

  // checks the invariants and sets the uniform flag
  static GridFn make(std::vector<double> ts, std::vector<double> vals) {
    if (ts.size() != vals.size()) throw GridError("GridFn: ts and vals differ in length");
    if (ts.size() < 3) throw GridError("GridFn: at least 3 nodes required");
    for (std::size_t i = 1; i < ts.size(); ++i)
      if (!(ts[i] > ts[i - 1])) throw GridError("GridFn: nodes must be strictly increasing");
    GridFn g{std::move(ts), std::move(vals), false};
    g.uniform = spacing_is_uniform(g.ts);
    return g;
  }

  // n intervals on [t0, t1], node i at t0 + i (t1 - t0) / n
  template <class F>
  static GridFn sample(F&& f, double t0, double t1, int n) {
    if (n < 2) throw GridError("GridFn::sample: need at least 2 intervals");
    std::vector<double> ts(n + 1), vs(n + 1);
    const double h = (t1 - t0) / n;
    for (int i = 0; i <= n; ++i) {
      ts[i] = t0 + i * h;
      vs[i] = f(ts[i]);
    }
    GridFn g{std::move(ts), std::move(vs), true};
    return g;
  }
};

namespace detail {

inline void require_uniform(const GridFn& f, std::size_t min_nodes, const char* who) {
  if (f.size() < min_nodes) throw GridError(std::string(who) + ": grid too small");
  if (f.ts.size() != f.vals.size()) throw GridError(std::string(who) + ": ts and vals differ in length");
  if (!f.uniform) throw GridError(std::string(who) + ": uniform grid required");
}

}  // namespace detail

// I^alpha f from ts[0], product trapezoidal rule (f linear between nodes,
// kernel integrated exactly). Second order for smooth f, exact for linear f.
inline GridFn rl_integral_grid(const GridFn& f, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("rl_integral_grid: alpha must be positive");
  detail::require_uniform(f, 3, "rl_integral_grid");
  const std::size_t n = f.size() - 1;
  const double h = f.step();
  std::vector<double> p(n + 2);
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::pow(static_cast<double>(k), alpha + 1.0);
  // w[k] multiplies f_{i-k} for 1 <= k <= i-1
  std::vector<double> w(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) w[k] = p[k + 1] - 2.0 * p[k] + p[k - 1];
  const double scale = std::pow(h, alpha) * specfun::rgamma(alpha + 2.0);
  GridFn out{f.ts, std::vector<double>(n + 1, 0.0), true};
  for (std::size_t i = 1; i <= n; ++i) {
    const double di = static_cast<double>(i);
    double s = (p[i - 1] - (di - alpha - 1.0) * std::pow(di, alpha)) * f.vals[0] + f.vals[i];
    for (std::size_t j = 1; j < i; ++j) s += w[i - j] * f.vals[j];
    out.vals[i] = scale * s;
  }
  return out;
}

// Caputo derivative of order nu in (0,1), L1 scheme. Values at ts[1..n].
inline GridFn caputo_derivative_grid(const GridFn& f, double nu) {
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("caputo_derivative_grid: nu must lie in (0,1)");
  detail::require_uniform(f, 4, "caputo_derivative_grid");
  const std::size_t n = f.size() - 1;
  const double h = f.step();
  std::vector<double> b(n);
  for (std::size_t j = 0; j < n; ++j)
    b[j] = std::pow(static_cast<double>(j + 1), 1.0 - nu) - std::pow(static_cast<double>(j), 1.0 - nu);
  std::vector<double> df(n);
  for (std::size_t i = 0; i < n; ++i) df[i] = f.vals[i + 1] - f.vals[i];
  const double scale = std::pow(h, -nu) * specfun::rgamma(2.0 - nu);
  GridFn out{std::vector<double>(f.ts.begin() + 1, f.ts.end()), std::vector<double>(n), true};
  for (std::size_t i = 1; i <= n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < i; ++j) s += b[j] * df[i - 1 - j];
    out.vals[i - 1] = scale * s;
  }
  return out;
}

// Riemann-Liouville derivative: centered difference of I^{1-alpha} f.
// Values at the interior nodes ts[1..n-1].
inline GridFn rl_derivative_grid(const GridFn& f, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("rl_derivative_grid: alpha must lie in (0,1)");
  detail::require_uniform(f, 5, "rl_derivative_grid");
  const GridFn g = rl_integral_grid(f, 1.0 - alpha);
  const std::size_t n = f.size() - 1;
  const double h2 = 2.0 * f.step();
  GridFn out{std::vector<double>(f.ts.begin() + 1, f.ts.end() - 1), std::vector<double>(n - 1), true};
  for (std::size_t i = 1; i < n; ++i) out.vals[i - 1] = (g.vals[i + 1] - g.vals[i - 1]) / h2;
  return out;
}

}  // namespace fracdiff::fracops
