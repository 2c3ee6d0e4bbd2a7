#pragma once

#include <cmath>

#include "fracdiff/error.hpp"
#include "fracdiff/specfun/gamma.hpp"

namespace fracdiff::laws {

// E X^{2m} = Gamma(2m+1) / (2^{alpha m} Gamma(alpha m + 1)) t^{2 H alpha m}
inline double even_moment_mcbride(double alpha, double hurst, int m, double t) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("even_moment_mcbride: alpha must lie in (0,1]");
  if (!(hurst > 0.0 && hurst < 1.0)) throw DomainError("even_moment_mcbride: hurst must lie in (0,1)");
  if (m < 0) throw DomainError("even_moment_mcbride: m must be non-negative");
  if (!(t >= 0.0)) throw DomainError("even_moment_mcbride: t must be non-negative");
  if (m == 0) return 1.0;
  const double am = alpha * m;
  return specfun::gamma_fn(2.0 * m + 1.0) / (std::pow(2.0, am) * specfun::gamma_fn(am + 1.0)) *
         std::pow(t, 2.0 * hurst * am);
}

inline double variance_mcbride(double alpha, double hurst, double t) {
  return even_moment_mcbride(alpha, hurst, 1, t);
}

}  // namespace fracdiff::laws
