#pragma once

#include <array>
#include <string_view>

#include "fracdiff/error.hpp"

namespace fracdiff::verify {

struct Tolerance {
  std::string_view key;
  double value;
  std::string_view meaning;
};

// Every threshold used by the verification harness. Echoed into each report.
inline constexpr std::array<Tolerance, 30> kTolerances{{
    {"frozen_value_rel", 1e-13, "special-function values against frozen high-precision references"},
    {"gaussian_reduction_abs", 1e-9, "sup |u_1 - N(0,t^2H)| on [-6,6]"},
    {"normalization_abs", 1e-6, "|int u dx - 1|"},
    {"variance_rel", 1e-5, "quadrature second moment against the closed-form variance"},
    {"subordination_abs", 1e-6, "max |mixture - closed form| on [-5,5]"},
    {"kernel_normalization_abs", 1e-9, "mixing kernels integrate to 1"},
    {"ek_rel", 1e-8, "numeric Erdelyi-Kober integral against the Gamma-ratio rule"},
    {"ek_semigroup_rel", 1e-14, "Gamma-ratio telescoping on monomials"},
    {"ode_order_min", 1.2, "empirical L1 convergence order (metric is the shortfall)"},
    {"ode_residual_rel", 1e-3, "relative residual at the finest grid"},
    {"reduction_nu1_rel", 1e-8, "Caputo CF at nu = 1 against the Gaussian CF"},
    {"reduction_half_rel", 1e-9, "Caputo CF at H = 1/2 against Mittag-Leffler"},
    {"reduction_stationary_rel", 1e-10, "stationary series against its closed form"},
    {"mixture_cf_abs", 1e-8, "Kilbas-Saigo CF against its mixture integral"},
    {"inversion_sup_abs", 1e-5, "Fourier inversion against an independent density"},
    {"inversion_mass_abs", 5e-5, "trapezoid mass of an inverted density"},
    {"ks_max", 5e-3, "Kolmogorov-Smirnov distance at n = 1e6"},
    {"empirical_cf_abs", 1e-2, "empirical CF against the analytic CF at n = 1e6"},
    {"lamperti_mixture_rel", 1e-6, "Lamperti mixture against direct Mittag-Leffler"},
    {"coefficient_identity_rel", 1e-12, "higher-order series coefficient identity"},
    {"airy_ratio_spread_rel", 1e-6, "spread of u_{2/3} / v over the grid"},
    {"binomial_exact", 0.0, "exact rational mismatch (0 or 1)"},
    {"binomial_asymptotic_abs", 1e-4, "|P{Bin(2j,1/2)=j} sqrt(pi j) - 1| at j = 1e4"},
    {"ggbm_equivalence_abs", 1e-9, "rescaled ggBm against the McBride density"},
    {"moment_rel", 1e-12, "algebraic moment identities"},
    {"mc_moment_rel", 2e-2, "Monte Carlo even moments"},
    {"mc_mean_rel", 1e-2, "Monte Carlo mean against quadrature"},
    {"mc_median_abs", 1.5e-2, "Monte Carlo median of log Lamperti (about 5 standard errors at n = 1e6)"},
    {"grid_operator_rel", 1e-3, "grid fractional operators on monomials at n = 2048"},
    {"gaussian_inversion_abs", 1e-8, "inversion of exp(-b^2/2) on [-6,6]"},
}};

constexpr double tol(std::string_view key) {
  for (const auto& t : kTolerances)
    if (t.key == key) return t.value;
  throw DomainError("unknown tolerance key");
}

}  // namespace fracdiff::verify
