#pragma once

#include <cmath>
#include <numbers>

namespace fracdiff::specfun {

inline constexpr double kAiryAsymptoticCut = 8.0;

namespace detail {

// Ai(0) and -Ai'(0)
inline constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
inline constexpr long double kAip0 = 0.258819403792806798405183560189203963L;

inline double airy_maclaurin(double xd) {
  const long double x = xd, x3 = x * x * x;
  long double f = 1.0L, g = x, tf = 1.0L, tg = x;
  long double cf = 0.0L, cg = 0.0L;  // Kahan compensation
  for (int k = 1; k < 200; ++k) {
    tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    long double y = tf - cf, t = f + y;
    cf = (t - f) - y;
    f = t;
    y = tg - cg;
    t = g + y;
    cg = (t - g) - y;
    g = t;
    if (std::fabs(tf) < 1e-22L * std::fabs(f) && std::fabs(tg) < 1e-22L * (std::fabs(g) + 1e-300L)) break;
  }
  return static_cast<double>(kAi0 * f - kAip0 * g);
}

// u_k = Gamma(3k+1/2) / (54^k k! Gamma(k+1/2))
inline double airy_u_ratio(int k) {
  return (3.0 * k - 0.5) * (3.0 * k - 1.5) * (3.0 * k - 2.5) / (54.0 * k * (k - 0.5));
}

inline double airy_asymptotic_positive(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double s = 1.0, u = 1.0, prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    u *= airy_u_ratio(k) / zeta;
    const double term = ((k & 1) ? -u : u);
    if (std::abs(term) > prev) break;
    s += term;
    prev = std::abs(term);
    if (prev < 1e-17) break;
  }
  return std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(x, 0.25)) * s;
}

inline double airy_asymptotic_negative(double x) {
  const double ax = -x;
  const double zeta = 2.0 / 3.0 * ax * std::sqrt(ax);
  // P = sum (-1)^k u_{2k} zeta^{-2k}, Q = sum (-1)^k u_{2k+1} zeta^{-2k-1}
  double p = 1.0, q = 0.0, u = 1.0, prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    u *= airy_u_ratio(k) / zeta;
    if (u > prev) break;
    prev = u;
    const int m = k / 2;
    const double sg = (m & 1) ? -1.0 : 1.0;
    if (k & 1) q += sg * u;
    else p += sg * u;
    if (u < 1e-17) break;
  }
  const double ph = zeta - 0.25 * std::numbers::pi;
  return (std::cos(ph) * p + std::sin(ph) * q) / (std::sqrt(std::numbers::pi) * std::pow(ax, 0.25));
}

}  // namespace detail

inline double airy_ai(double x) {
  if (std::isnan(x)) return x;
  if (x > kAiryAsymptoticCut) return detail::airy_asymptotic_positive(x);
  if (x < -kAiryAsymptoticCut) return detail::airy_asymptotic_negative(x);
  return detail::airy_maclaurin(x);
}

}  // namespace fracdiff::specfun
