#pragma once

// Verification cases. Each case returns report rows; rows tagged with an
// acceptance criterion number are also consumed by the acceptance binary.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "fracdiff/error.hpp"
#include "fracdiff/fracops.hpp"
#include "fracdiff/laws.hpp"
#include "fracdiff/mc.hpp"
#include "fracdiff/specfun.hpp"
#include "fracdiff/transform.hpp"
#include "fracdiff/verify/report.hpp"
#include "fracdiff/verify/tolerances.hpp"

namespace fracdiff::verify {

using Rows = std::vector<VerificationRow>;
using CheckFn = std::function<Rows(std::uint64_t seed)>;

struct Check {
  std::string suite;
  std::string name;
  int criterion;
  CheckFn fn;
};

inline constexpr std::size_t kMcSamples = 1000000;

namespace detail {

inline std::string fmt(const char* f, double a) {
  char b[64];
  std::snprintf(b, sizeof b, f, a);
  return b;
}
inline std::string fmt(const char* f, double a, double b2) {
  char b[96];
  std::snprintf(b, sizeof b, f, a, b2);
  return b;
}
inline std::string fmt(const char* f, double a, double b2, double c) {
  char b[128];
  std::snprintf(b, sizeof b, f, a, b2, c);
  return b;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

inline transform::QuadConfig moment_quad() {
  transform::QuadConfig c;
  c.abs_tol = 1e-13;
  c.rel_tol = 1e-10;
  c.max_levels = 10;
  return c;
}

struct Frozen {
  const char* id;
  double value;
  double reference;
};

}  // namespace detail

// ---------------------------------------------------------------- specfun

inline Rows check_frozen_specfun(std::uint64_t) {
  using namespace specfun;
  const detail::Frozen cases[] = {
      {"gamma.1.25", gamma_fn(1.25), 0.906402477055477078},
      {"wright.-0.5.0.5.-1", wright({-0.5, 0.5}, -1.0), 0.439391289467722397},
      {"ml.0.5.-1", mittag_leffler({0.5, 1.0}, -1.0), 0.427583576155807004},
      {"ml.0.4.-1", mittag_leffler({0.4, 1.0}, -1.0), 0.4420633596852235021},
      {"ml.0.5.-10", mittag_leffler({0.5, 1.0}, -10.0), 0.056140992743822585857},
      {"ml.0.8.-10", mittag_leffler({0.8, 1.0}, -10.0), 0.0249028197619765322},
      {"ml.0.9.-20", mittag_leffler({0.9, 1.0}, -20.0), 0.0057495078161091126},
      {"ml.0.9.-2", mittag_leffler({0.9, 1.0}, -2.0), 0.16352830001693004278},
      {"ml.0.75.-0.5", mittag_leffler({0.75, 1.0}, -0.5), 0.60379034509524675559},
      {"ml.0.25.-0.1", mittag_leffler({0.25, 1.0}, -0.1), 0.89996132989886404},
      {"ml.0.2.-10", mittag_leffler({0.2, 1.0}, -10.0), 0.07960784136843507719},
      {"ks.k1", KilbasSaigoSeries({0.75, 1.0 / 3.0, -2.0 / 3.0}, 1.0).coefficient(1), 1.955482134893847595},
      {"ks.cf.beta1", kilbas_saigo({0.75, 1.0 / 3.0, -2.0 / 3.0}, -0.25), 0.64283865179473293948},
      {"ks.cf.beta2.5", kilbas_saigo({0.75, 1.0 / 3.0, -2.0 / 3.0}, -1.5625), 0.17440986448945530681},
      {"ks.cf.beta5", kilbas_saigo({0.75, 1.0 / 3.0, -2.0 / 3.0}, -6.25), 0.044127800447544885533},
      {"airy.0", airy_ai(0.0), 0.355028053887817239},
      {"airy.1", airy_ai(1.0), 0.135292416312881416},
      {"airy.-1", airy_ai(-1.0), 0.535560883292352119},
      {"mwright.0.15.0.5", mwright(0.15, 0.5), 0.5823414073614082739602061},
      {"mwright.0.15.6", mwright(0.15, 6.0), 0.002837263330816077707150952},
      {"mwright.0.25.2", mwright(0.25, 2.0), 0.1612510834545858559050432},
      {"mwright.0.25.12", mwright(0.25, 12.0), 7.284317170210213599644924e-7},
      {"mwright.0.45.6", mwright(0.45, 6.0), 2.887379040120431277930663e-4},
      {"mwright.0.45.12", mwright(0.45, 12.0), 1.874889708906226586484681e-12},
  };
  Rows rows;
  for (const auto& c : cases)
    rows.push_back(make_row("specfun", std::string("frozen.") + c.id, detail::rel(c.value, c.reference),
                            tol("frozen_value_rel"),
                            "library", "frozen 20+ digit reference"));
  return rows;
}

// acceptance 6
inline Rows check_caputo_reductions(std::uint64_t) {
  Rows rows;
  for (double h : {0.25, 0.5, 0.75})
    for (double t : {0.5, 1.0, 2.0})
      for (double b : {0.5, 1.0, 2.0}) {
        const double lhs = laws::cf_caputo(1.0, h, b, t);
        const double rhs = std::exp(-0.5 * b * b * std::pow(t, 2.0 * h));
        rows.push_back(make_row("specfun", detail::fmt("reduction.nu1.H%.2f.t%.1f", h, t) + detail::fmt(".b%.1f", b),
                                detail::rel(lhs, rhs), tol("reduction_nu1_rel"), "Kilbas-Saigo series",
                                "exp(-b^2 t^2H / 2)", 6));
      }
  for (double nu : {0.25, 0.5, 0.75})
    for (double t : {0.5, 1.0, 2.0})
      for (double b : {0.5, 1.0, 2.0}) {
        const double lhs = laws::cf_caputo(nu, 0.5, b, t);
        const double rhs = specfun::mittag_leffler({nu, 1.0}, -0.5 * b * b * std::pow(t, nu));
        rows.push_back(make_row("specfun",
                                detail::fmt("reduction.H0.5.nu%.2f.t%.1f", nu, t) + detail::fmt(".b%.1f", b),
                                detail::rel(lhs, rhs), tol("reduction_half_rel"), "Kilbas-Saigo series",
                                "Mittag-Leffler E_nu(-b^2 t^nu / 2)", 6));
      }
  // stationary nu = 1 - 2H, inside the radius H b^2 Gamma(1-nu) < 1
  for (double h : {0.1, 0.25, 0.4}) {
    const double nu = 1.0 - 2.0 * h;
    const double bmax = std::sqrt(1.0 / (h * specfun::gamma_fn(1.0 - nu)));
    for (double f : {0.2, 0.5, 0.8}) {
      const double b = f * bmax;
      const double lhs = specfun::kilbas_saigo({nu, 0.0, -1.0}, -h * b * b);
      const double rhs = specfun::ks_stationary_closed_form(nu, h, b);
      rows.push_back(make_row("specfun", detail::fmt("reduction.stationary.H%.2f.r%.1f", h, f), detail::rel(lhs, rhs),
                              tol("reduction_stationary_rel"), "Kilbas-Saigo series E_{nu,0,-1}",
                              "1/(1 + H b^2 Gamma(1-nu))", 6));
    }
  }
  return rows;
}

// acceptance 11
inline Rows check_binomial(std::uint64_t) {
  Rows rows;
  for (int k = 1; k <= 20; ++k) {
    const auto b = laws::binomial_product_coeff(k);
    char id[48];
    std::snprintf(id, sizeof id, "binomial.k%02d", k);
    rows.push_back(make_row("specfun", id, b.central_exact_match ? 0.0 : 1.0, tol("binomial_exact"),
                            "Kilbas-Saigo E_{1/2,2,1} coefficient / pi^{k/2} = " + b.ks_rational,
                            "prod C(2j,j) 2^{-2j} = " + b.central_product, 11));
  }
  const double v = laws::central_binomial_scaled(10000);
  rows.push_back(make_row("specfun", "binomial.asymptotic.j10000", std::abs(v - 1.0), tol("binomial_asymptotic_abs"),
                          detail::fmt("P{Bin(2j,1/2)=j} sqrt(pi j) = %.10f", v), "1", 11));
  return rows;
}

// ---------------------------------------------------------------- operators

// acceptance 4
inline Rows check_ek_lattice(std::uint64_t) {
  Rows rows;
  const double t = 1.3;
  for (double m : {0.5, 1.0, 2.0})
    for (double eta : {-0.5, 0.0, 1.0})
      for (double a : {0.25, 0.5, 1.5})
        for (double g : {0.0, 0.5, 1.0, 2.5}) {
          const fracops::EKOperator op{m, eta, a};
          const double num = fracops::ek_integral_numeric(op, [g](double u) { return std::pow(u, g); }, t);
          const double sym = fracops::ek_monomial(op, fracops::Monomial{1.0, g})(t);
          rows.push_back(make_row("operators",
                                  detail::fmt("ek.m%.1f.eta%.1f", m, eta) + detail::fmt(".a%.2f.g%.1f", a, g),
                                  detail::rel(num, sym), tol("ek_rel"), "tanh-sinh quadrature in s = u^m",
                                  "Gamma-ratio monomial rule", 4));
        }
  return rows;
}

inline Rows check_operator_identities(std::uint64_t) {
  Rows rows;
  // negative order via one recursion step
  for (double a : {-0.3, -0.7}) {
    const fracops::EKOperator op{0.5, 0.3, a};
    const double num = fracops::ek_apply_negative_order(
        op, [](double u) { return std::pow(u, 1.5); }, [](double u) { return 1.5 * std::pow(u, 0.5); }, 2.0);
    const double sym = fracops::ek_monomial(op, fracops::Monomial{1.0, 1.5})(2.0);
    rows.push_back(make_row("operators", detail::fmt("ek.negative_order.a%.1f", a), detail::rel(num, sym),
                            tol("ek_rel"), "recursion into positive order + quadrature", "Gamma-ratio rule"));
  }
  // semigroup and inverse on monomials
  {
    const fracops::Monomial p{1.0, 0.7};
    const auto ab = fracops::ek_monomial({2.0, 0.1, 0.55}, fracops::ek_monomial({2.0, -0.2, 0.3}, p));
    const auto both = fracops::ek_monomial({2.0, -0.2, 0.85}, p);
    rows.push_back(make_row("operators", "ek.semigroup", detail::rel(ab.coeff, both.coeff), tol("ek_semigroup_rel"),
                            "I^{eta+a1,a2} I^{eta,a1}", "I^{eta,a1+a2}"));
    const auto inv = fracops::ek_monomial({2.0, 0.1, -0.3}, fracops::ek_monomial({2.0, -0.2, 0.3}, p));
    rows.push_back(make_row("operators", "ek.inverse", std::abs(inv.coeff - 1.0), tol("ek_semigroup_rel"),
                            "I^{eta+a,-a} I^{eta,a}", "identity"));
  }
  // grid operators on f = t
  {
    const auto f = fracops::GridFn::sample([](double s) { return s; }, 0.0, 1.0, 2048);
    const auto i = fracops::rl_integral_grid(f, 0.5);
    const auto d = fracops::caputo_derivative_grid(f, 0.5);
    double ei = 0.0, ed = 0.0;
    for (std::size_t k = 1; k < i.size(); ++k) {
      const double s = i.ts[k];
      ei = std::max(ei, detail::rel(i.vals[k], specfun::gamma_ratio(2.0, 2.5) * std::pow(s, 1.5)));
    }
    for (std::size_t k = 0; k < d.size(); ++k)
      ed = std::max(ed, detail::rel(d.vals[k], std::sqrt(d.ts[k]) * specfun::rgamma(1.5)));
    rows.push_back(make_row("operators", "grid.rl_integral.t.a0.5", ei, tol("grid_operator_rel"),
                            "product trapezoid, n = 2048", "Gamma(2)/Gamma(5/2) t^{3/2}"));
    rows.push_back(make_row("operators", "grid.caputo.t.nu0.5", ed, tol("grid_operator_rel"), "L1 scheme, n = 2048",
                            "t^{1/2}/Gamma(3/2)"));
  }
  return rows;
}

// acceptance 10
inline Rows check_higher_order(std::uint64_t) {
  Rows rows;
  const auto grid = laws::uniform_grid(0.1, 5.0, 50);
  for (int k : {3, 4, 5})
    for (double h : {0.25, 0.5, 0.75}) {
      const auto r = laws::higher_order_residual(laws::ModelSpec::higher_mcbride(k, h), 1.0, grid);
      rows.push_back(make_row("operators", detail::fmt("higher_order.k%.0f.H%.2f", k, h),
                              std::max(r.coefficient_mismatch, r.pointwise_mismatch), tol("coefficient_identity_rel"),
                              "t^{1-2H} d/dt of the u_{2/k} series", "(-1)^k H d^k/dx^k of the same series", 10));
    }
  // u_{2/3} against the Airy form on x > 0
  double lo = INFINITY, hi = -INFINITY, sum = 0.0;
  int n = 0;
  for (double h : {0.25, 0.5, 0.75})
    for (double t : {0.5, 1.0, 2.0})
      for (double x : laws::uniform_grid(0.1, 6.0, 60)) {
        // scale x with t so the Airy argument stays in the accurate range
        const double xs = x * std::pow(t, 2.0 * h / 3.0);
        const double r = laws::wright_density(2.0 / 3.0, h, xs, t) / laws::airy_solution(xs, t, h);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        sum += r;
        ++n;
      }
  const double mean = sum / n;
  rows.push_back(make_row("operators", "higher_order.airy_ratio", (hi - lo) / mean, tol("airy_ratio_spread_rel"),
                          detail::fmt("u_{2/3}/v measured constant %.15f", mean),
                          detail::fmt("3 * 2^{-2/3} = %.15f", 3.0 * std::pow(2.0, -2.0 / 3.0)), 10));
  return rows;
}

// ---------------------------------------------------------------- laws

// acceptance 1
inline Rows check_gaussian_reduction(std::uint64_t) {
  Rows rows;
  for (double h : {0.25, 0.5, 0.75})
    for (double t : {0.5, 1.0, 2.0}) {
      double sup = 0.0;
      const double var = std::pow(t, 2.0 * h);
      for (int i = -600; i <= 600; ++i) {
        const double x = 0.01 * i;
        sup = std::max(sup, std::abs(laws::wright_density(1.0, h, x, t) - laws::gaussian_density(x, var)));
      }
      rows.push_back(make_row("laws", detail::fmt("gaussian_reduction.H%.2f.t%.1f", h, t), sup,
                              tol("gaussian_reduction_abs"), "u_1 via M-Wright", "N(0, t^{2H}) density", 1));
    }
  return rows;
}

// acceptance 2
inline Rows check_normalization_variance(std::uint64_t) {
  Rows rows;
  for (double a : {0.3, 0.5, 0.7, 0.9})
    for (double h : {0.25, 0.5, 0.75})
      for (double t : {0.5, 1.0, 2.0}) {
        auto cfg = detail::moment_quad();
        const double s = std::pow(t, h * a);
        cfg.split_points = {s, 4.0 * s, 12.0 * s};
        const auto inf = std::numeric_limits<double>::infinity();
        const auto m0 = transform::integrate([&](double x) { return laws::wright_density(a, h, x, t); }, 0.0, inf, cfg);
        const auto m2 =
            transform::integrate([&](double x) { return x * x * laws::wright_density(a, h, x, t); }, 0.0, inf, cfg);
        const std::string id = detail::fmt("a%.1f.H%.2f.t%.1f", a, h, t);
        rows.push_back(make_row("laws", "normalization." + id, std::abs(2.0 * m0.value - 1.0), tol("normalization_abs"),
                                "2 int_0^inf u dx (exp-sinh)", "1", 2));
        rows.push_back(make_row("laws", "variance." + id, detail::rel(2.0 * m2.value, laws::variance_mcbride(a, h, t)),
                                tol("variance_rel"), "2 int_0^inf x^2 u dx", "t^{2H a}/(2^{a-1} Gamma(a+1))", 2));
      }
  return rows;
}

// acceptance 7, deterministic parts
inline Rows check_bwt_chain(std::uint64_t) {
  Rows rows;
  double sup = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double b = 0.1 * i;
    sup = std::max(sup, std::abs(laws::cf_caputo(0.75, 0.25, b, 1.0) - laws::cf_bwt_mixture(b, 1.0)));
  }
  rows.push_back(make_row("laws", "bwt.cf_vs_mixture", sup, tol("mixture_cf_abs"),
                          "E_{3/4,1/3,-2/3}(-b^2/4) series, b in [0,5]", "Gamma-mixture integral", 7));
  const auto xs = laws::uniform_grid(-5.0, 5.0, 101);
  const auto m = laws::ModelSpec::caputo(0.75, 0.25);
  const auto inv = laws::density_curve(m, xs, 1.0, laws::DensityMethod::FourierInversion);
  const auto mix = laws::density_curve(m, xs, 1.0, laws::DensityMethod::MixtureQuadrature);
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) d = std::max(d, std::abs(inv.vals[i] - mix.vals[i]));
  rows.push_back(make_row("laws", "bwt.inversion_vs_mixture", d, tol("inversion_sup_abs"),
                          "Filon inversion of the Kilbas-Saigo CF", "Gaussian mixture over W_1", 7));
  // mass of the inverted density on a wide grid
  const auto wide = laws::density_curve(m, laws::uniform_grid(-60.0, 60.0, 6001), 1.0);
  rows.push_back(make_row("laws", "bwt.inversion_mass", std::abs(wide.integral() - 1.0), tol("inversion_mass_abs"),
                          "trapezoid on [-60,60]", "1"));
  // W_t kernel normalization
  const auto kn = transform::integrate([](double z) { return laws::wt_kernel(z, 1.0); }, 0.0,
                                       std::numeric_limits<double>::infinity(), detail::moment_quad());
  rows.push_back(make_row("laws", "bwt.kernel_normalization", std::abs(kn.value - 1.0), tol("kernel_normalization_abs"),
                          "quadrature of the W_1 density", "1"));
  // CF of bwt_density equals the Caputo CF
  for (double b : {0.5, 1.0, 2.0}) {
    auto cfg = detail::moment_quad();
    cfg.split_points = {1.0, 4.0};
    const auto r = transform::integrate([b](double x) { return std::cos(b * x) * laws::bwt_density(x, 1.0); }, 0.0,
                                        std::numeric_limits<double>::infinity(), cfg);
    rows.push_back(make_row("laws", detail::fmt("bwt.fourier.b%.1f", b),
                            std::abs(2.0 * r.value - laws::cf_caputo(0.75, 0.25, b, 1.0)), 1e-6,
                            "cosine transform of bwt_density", "Kilbas-Saigo CF"));
  }
  return rows;
}

inline Rows check_laws_misc(std::uint64_t) {
  Rows rows;
  // McBride inversion against the closed form, and its mass
  {
    const auto xs = laws::uniform_grid(-5.0, 5.0, 101);
    const auto m = laws::ModelSpec::mcbride(0.5, 0.5);
    const auto inv = laws::density_curve(m, xs, 1.0, laws::DensityMethod::FourierInversion);
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) d = std::max(d, std::abs(inv.vals[i] - laws::wright_density(0.5, 0.5, xs[i], 1.0)));
    rows.push_back(make_row("laws", "mcbride.inversion_vs_closed_form", d, tol("inversion_sup_abs"),
                            "Filon inversion of E_{1/2}(-b^2/sqrt 2)", "M-Wright closed form"));
    const auto wide = laws::density_curve(m, laws::uniform_grid(-60.0, 60.0, 6001), 1.0,
                                          laws::DensityMethod::FourierInversion);
    rows.push_back(make_row("laws", "mcbride.inversion_mass", std::abs(wide.integral() - 1.0), tol("inversion_mass_abs"),
                            "trapezoid on [-60,60]", "1"));
  }
  // Gaussian pipeline check
  {
    transform::InversionConfig cfg;
    cfg.tail_coefficient = 0.0;
    cfg.abs_tol = 1e-10;
    const transform::SymmetricInverter g([](double b) { return std::exp(-0.5 * b * b); }, cfg);
    double d = 0.0;
    for (int i = -600; i <= 600; ++i) d = std::max(d, std::abs(g.density(0.01 * i) - laws::gaussian_density(0.01 * i, 1.0)));
    rows.push_back(make_row("laws", "inversion.gaussian", d, tol("gaussian_inversion_abs"), "Filon inversion",
                            "N(0,1) density"));
  }
  // ggBm rescaling equivalence
  {
    double d = 0.0;
    for (double a : {0.3, 0.7})
      for (double h : {0.25, 0.75})
        for (double x : {0.0, 0.4, 1.3, 3.0}) {
          const double c = std::pow(2.0, 0.5 * a);
          d = std::max(d, std::abs(laws::ggbm_density(a, 2.0 * h * a, c * x, 1.7) * c -
                                   laws::wright_density(a, h, x, 1.7)));
        }
    rows.push_back(make_row("laws", "ggbm.equivalence", d, tol("ggbm_equivalence_abs"),
                            "2^{a/2} P(2^{a/2} x, t) with (delta, gamma) = (a, 2Ha)", "u_a(x, t)"));
  }
  // moments
  rows.push_back(make_row("laws", "moments.variance_half_half",
                          detail::rel(laws::variance_mcbride(0.5, 0.5, 1.0), 2.0 * std::numbers::sqrt2 / std::sqrt(std::numbers::pi)),
                          tol("moment_rel"), "variance formula", "2 sqrt 2 / sqrt pi"));
  rows.push_back(make_row("laws", "moments.gaussian_fourth", detail::rel(laws::even_moment_mcbride(1.0, 0.5, 2, 1.0), 3.0),
                          tol("moment_rel"), "even moment m = 2, a = 1", "3"));
  // self-similarity
  {
    double d = 0.0;
    for (double x : {0.0, 0.5, 2.0}) {
      const double t = 2.5, s = std::pow(t, 0.5 * 0.6);
      d = std::max(d, detail::rel(laws::wright_density(0.6, 0.5, x, t), laws::wright_density(0.6, 0.5, x / s, 1.0) / s));
    }
    rows.push_back(make_row("laws", "wright.self_similarity", d, tol("moment_rel"), "u(x, t)",
                            "t^{-Ha} u(x t^{-Ha}, 1)"));
  }
  // Lamperti density normalization (r = e^u)
  {
    double d = 0.0;
    for (double a : {0.3, 0.5, 0.8}) {
      const laws::LampertiParams p{a};
      // r = e^u; the density in u is symmetric, so twice the half line
      const auto r2 = transform::integrate([&](double u) { return laws::lamperti_density(p, std::exp(u)) * std::exp(u); },
                                           0.0, std::numeric_limits<double>::infinity(), detail::moment_quad());
      const transform::QuadResult r{2.0 * r2.value};
      d = std::max(d, std::abs(r.value - 1.0));
    }
    rows.push_back(make_row("laws", "lamperti.normalization", d, tol("kernel_normalization_abs"),
                            "quadrature in log r", "1"));
  }
  return rows;
}

// ---------------------------------------------------------------- subordination

// acceptance 3
inline Rows check_subordination(std::uint64_t) {
  Rows rows;
  const auto xs = laws::uniform_grid(-5.0, 5.0, 101);
  for (double a : {0.25, 0.5})
    for (double h : {0.25, 0.5, 0.75}) {
      double d = 0.0;
      for (double x : xs) d = std::max(d, std::abs(laws::subordination_density(a, h, x, 1.0) - laws::wright_density(a, h, x, 1.0)));
      rows.push_back(make_row("subordination", detail::fmt("mixture.a%.2f.H%.2f", a, h), d, tol("subordination_abs"),
                              "u_{2a} mixed over the half-normal time", "u_a closed form", 3));
    }
  // kernel normalization in the original variable
  for (double h : {0.25, 0.5, 0.75}) {
    auto cfg = detail::moment_quad();
    cfg.split_points = {1.0};
    const auto r = transform::integrate([h](double z) { return laws::subordination_kernel(h, z, 1.3); }, 0.0,
                                        std::numeric_limits<double>::infinity(), cfg);
    rows.push_back(make_row("subordination", detail::fmt("kernel_normalization.H%.2f", h), std::abs(r.value - 1.0),
                            tol("kernel_normalization_abs"), "quadrature of the z-kernel", "1"));
  }
  return rows;
}

// acceptance 9, deterministic part
inline Rows check_lamperti_mixture(std::uint64_t) {
  Rows rows;
  for (double g : {0.4, 0.5, 0.8})
    for (double e : {0.5, 1.0})
      for (double th : {0.1, 1.0, 10.0}) {
        const double t = 1.0;
        const double lhs = transform::ml_lamperti_mixture(g, e, th, t);
        const double rhs = specfun::mittag_leffler({g * e, 1.0}, -th * std::pow(t, g * e));
        rows.push_back(make_row("subordination", detail::fmt("lamperti_mixture.g%.1f.e%.1f.th%.1f", g, e, th),
                                detail::rel(lhs, rhs), tol("lamperti_mixture_rel"), "Lamperti-weighted E_eta mixture",
                                "E_{g e}(-theta t^{g e})", 9));
      }
  return rows;
}

// ---------------------------------------------------------------- ode

struct OdeStudy {
  double nu, gamma;
  std::vector<double> residuals;  // n = 512, 2048, 8192
  double min_order;
};

inline OdeStudy ode_study(double nu, double g) {
  const specfun::KilbasSaigoSeries s({nu, 1.0 + g / nu, g / nu}, 1.0);
  OdeStudy st{nu, g, {}, INFINITY};
  for (int n : {512, 2048, 8192}) {
    const auto f = fracops::GridFn::sample([&](double t) { return s.evaluate(-std::pow(t, nu + g)).value; }, 0.0, 1.0, n);
    const auto d = fracops::caputo_derivative_grid(f, nu);
    double mx = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double t = d.ts[i];
      if (t < 0.25 - 1e-12) continue;
      const double rhs = -std::pow(t, g) * f.vals[i + 1];
      mx = std::max(mx, std::abs(d.vals[i] - rhs) / std::abs(rhs));
    }
    if (!st.residuals.empty()) st.min_order = std::min(st.min_order, std::log(st.residuals.back() / mx) / std::log(4.0));
    st.residuals.push_back(mx);
  }
  return st;
}

// acceptance 5
inline Rows check_ode(std::uint64_t) {
  Rows rows;
  for (auto [nu, g] : {std::pair{0.75, -0.5}, std::pair{0.5, 0.0}, std::pair{0.9, 0.8}}) {
    const auto st = ode_study(nu, g);
    const std::string id = detail::fmt("nu%.2f.g%.2f", nu, g);
    rows.push_back(make_row("ode", "l1_order." + id, tol("ode_order_min") - st.min_order, 0.0,
                            detail::fmt("min empirical order %.4f (residuals %.3e ... %.3e)", st.min_order,
                                        st.residuals.front(), st.residuals.back()),
                            detail::fmt("order >= 1.2 (theory 2 - nu = %.2f)", 2.0 - nu), 5));
    rows.push_back(make_row("ode", "residual_n8192." + id, st.residuals.back(), tol("ode_residual_rel"),
                            "L1 Caputo derivative of the Kilbas-Saigo solution on [0.25, 1]", "-t^g f(t)", 5));
  }
  return rows;
}

// ---------------------------------------------------------------- montecarlo

// acceptance 7, sampling part
inline Rows check_mc_bwt(std::uint64_t seed) {
  Rows rows;
  const auto b = mc::sample_B_of_Wt(1.0, kMcSamples, {seed, 701});
  const mc::TabulatedCdf cdf([](double x) { return laws::bwt_density(x, 1.0); });
  rows.push_back(make_row("montecarlo", "bwt.ks", mc::ks_distance(b, std::cref(cdf)), tol("ks_max"),
                          "B(W_1) samples, n = 1e6", "CDF of bwt_density", 7));
  const double e = mc::empirical_cf(b, 1.0).real();
  rows.push_back(make_row("montecarlo", "bwt.empirical_cf.b1", std::abs(e - laws::cf_caputo(0.75, 0.25, 1.0, 1.0)),
                          tol("empirical_cf_abs"), "empirical CF of B(W_1)", "Kilbas-Saigo CF"));
  // W_t mean against quadrature
  const auto w = mc::sample_Wt(1.0, kMcSamples, {seed, 702});
  const auto qm = transform::integrate([](double z) { return z * laws::wt_kernel(z, 1.0); }, 0.0,
                                       std::numeric_limits<double>::infinity(), detail::moment_quad());
  rows.push_back(make_row("montecarlo", "wt.mean", detail::rel(mc::sample_mean(w.values), qm.value),
                          tol("mc_mean_rel"), "sample mean of W_1", "quadrature mean"));
  // Y_a(frak W_t) against the Riesz-Caputo CF, and W_t = 2 frak W_t
  for (double a : {1.5, 2.0}) {
    const auto y = mc::sample_stable_of_Wt(a, 1.0, kMcSamples, {seed, 703});
    double d = 0.0;
    for (double be : {0.5, 1.0, 2.0})
      d = std::max(d, std::abs(mc::empirical_cf(y, be).real() - laws::cf_caputo_riesz(0.75, 0.25, a, be, 1.0)));
    rows.push_back(make_row("montecarlo", detail::fmt("frak_wt.stable_cf.order%.1f", a), d, tol("empirical_cf_abs"),
                            "empirical CF of Y_a(frak W_1)", "E_{3/4,1/3,-2/3}(-|b|^a/4)"));
  }
  return rows;
}

// acceptance 8
inline Rows check_mc_iterated_fbm(std::uint64_t seed) {
  Rows rows;
  std::uint64_t sid = 801;
  for (double h : {0.25, 0.5})
    for (double t : {1.0, 2.0}) {
      const auto b = mc::sample_iterated_fbm(h, t, kMcSamples, {seed, sid++});
      const mc::TabulatedCdf cdf([h, t](double x) { return laws::wright_density(0.5, h, x, t); });
      rows.push_back(make_row("montecarlo", detail::fmt("iterated_fbm.ks.H%.2f.t%.1f", h, t),
                              mc::ks_distance(b, std::cref(cdf)), tol("ks_max"), "B_H^1(|B_H^2(t)|^{1/2H}), n = 1e6",
                              "CDF of u_{1/2}", 8));
      for (int m : {1, 2})
        rows.push_back(make_row("montecarlo", detail::fmt("iterated_fbm.moment%.0f.H%.2f.t%.1f", m, h, t),
                                detail::rel(mc::sample_moment(b.values, 2 * m), laws::even_moment_mcbride(0.5, h, m, t)),
                                tol("mc_moment_rel"), "sample even moment", "closed-form even moment"));
    }
  return rows;
}

// acceptance 9, sampling part
inline Rows check_mc_lamperti(std::uint64_t seed) {
  Rows rows;
  const double t = 1.0;
  for (auto [nu, a] : {std::pair{0.5, 1.0}, std::pair{0.8, 1.5}}) {
    const auto y = mc::sample_stable_lamperti_time(mc::lamperti_time_single(nu, a, t), t, kMcSamples, {seed, 901});
    double d = 0.0;
    for (double be : {0.5, 1.0, 2.0})
      d = std::max(d, std::abs(mc::empirical_cf(y, be).real() -
                               specfun::mittag_leffler({nu, 1.0}, -std::pow(be, a) * std::pow(t, nu) / 2.0)));
    rows.push_back(make_row("montecarlo", detail::fmt("lamperti_time.nu%.1f.a%.1f", nu, a), d, tol("empirical_cf_abs"),
                            "empirical CF of Y_{a/nu}(2^{-1/nu} t W_nu)", "E_nu(-|b|^a t^nu / 2)", 9));
    // the printed time scale t/2^nu has CF E_nu(-|b|^a t^nu 2^{-nu^2})
    const auto p = mc::sample_stable_lamperti_time(mc::lamperti_time_printed(nu, a, t), t, kMcSamples, {seed, 902});
    double dp = 0.0;
    for (double be : {0.5, 1.0, 2.0})
      dp = std::max(dp, std::abs(mc::empirical_cf(p, be).real() -
                                 specfun::mittag_leffler({nu, 1.0}, -std::pow(be, a) * std::pow(t, nu) *
                                                                        std::pow(2.0, -nu * nu))));
    rows.push_back(make_row("montecarlo", detail::fmt("lamperti_time_printed_scale.nu%.1f.a%.1f", nu, a), dp,
                            tol("empirical_cf_abs"), "empirical CF of Y_{a/nu}((t/2^nu) W_nu)",
                            "E_nu(-|b|^a t^nu 2^{-nu^2})"));
  }
  // two routes to the same law: (gamma, eta) = (0.8, 0.5) against nu = 0.4
  {
    const double g = 0.8, e = 0.5, a = 0.8;
    const auto dbl = mc::sample_stable_lamperti_time(mc::lamperti_time_double(g, e, a, t), t, kMcSamples, {seed, 903});
    const auto sgl = mc::sample_stable_lamperti_time(mc::lamperti_time_single(g * e, a, t), t, kMcSamples, {seed, 904});
    double d = 0.0;
    for (double be : {0.5, 1.0, 2.0})
      d = std::max(d, std::abs(mc::empirical_cf(dbl, be).real() - mc::empirical_cf(sgl, be).real()));
    rows.push_back(make_row("montecarlo", "lamperti_time.double_vs_single", d, tol("empirical_cf_abs"),
                            "Y(c t W_eta W_gamma^{1/eta})", "Y(c t W_{gamma eta})"));
  }
  // Lamperti law itself
  {
    const auto l = mc::sample_lamperti(0.5, kMcSamples, {seed, 905});
    const laws::LampertiParams p{0.5};
    rows.push_back(make_row("montecarlo", "lamperti.ks.a0.5",
                            mc::ks_distance(l, [&](double r) { return laws::lamperti_cdf(p, r); }), tol("ks_max"),
                            "S1/S2 samples", "closed-form Lamperti CDF"));
    std::vector<double> logs(l.values.size());
    for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = std::log(l.values[i]);
    rows.push_back(make_row("montecarlo", "lamperti.log_median", std::abs(mc::quantile(logs, 0.5)),
                            tol("mc_median_abs"), "sample median of log W", "0"));
  }
  return rows;
}

// ---------------------------------------------------------------- registry

inline const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"specfun", "frozen values", 0, check_frozen_specfun},
      {"specfun", "Caputo CF reductions", 6, check_caputo_reductions},
      {"specfun", "binomial identity", 11, check_binomial},
      {"operators", "Erdelyi-Kober lattice", 4, check_ek_lattice},
      {"operators", "operator identities", 0, check_operator_identities},
      {"operators", "higher-order identity", 10, check_higher_order},
      {"laws", "Gaussian reduction", 1, check_gaussian_reduction},
      {"laws", "normalization and variance", 2, check_normalization_variance},
      {"laws", "B(W_t) chain", 7, check_bwt_chain},
      {"laws", "misc laws", 0, check_laws_misc},
      {"subordination", "subordination identity", 3, check_subordination},
      {"subordination", "Lamperti mixture", 9, check_lamperti_mixture},
      {"ode", "Kilbas-Saigo ODE", 5, check_ode},
      {"montecarlo", "B(W_t) sampling", 7, check_mc_bwt},
      {"montecarlo", "iterated fBm sampling", 8, check_mc_iterated_fbm},
      {"montecarlo", "Lamperti time change", 9, check_mc_lamperti},
  };
  return checks;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s = {"specfun", "operators", "laws", "subordination", "ode", "montecarlo"};
  return s;
}

// runs one check; an exception becomes a failed row carrying the message
inline Rows run_check(const Check& c, std::uint64_t seed, bool* numerical_failure = nullptr) {
  try {
    return c.fn(seed);
  } catch (const std::exception& e) {
    if (numerical_failure) *numerical_failure = true;
    return {make_row(c.suite, c.name + ".exception", std::numeric_limits<double>::quiet_NaN(), 0.0, e.what(),
                     "no exception", c.criterion)};
  }
}

inline VerificationReport run_suite(const std::string& suite, std::uint64_t seed, bool* numerical_failure = nullptr) {
  VerificationReport rep;
  for (const auto& c : all_checks())
    if (suite == "all" || c.suite == suite) rep.append(run_check(c, seed, numerical_failure));
  rep.sort();
  return rep;
}

struct CriterionInfo {
  int id;
  const char* title;
  double budget_seconds;
};

inline constexpr CriterionInfo kCriteria[] = {
    {1, "Gaussian reduction of u_1", 1.0},
    {2, "normalization and variance lattice", 30.0},
    {3, "subordination identity", 60.0},
    {4, "Erdelyi-Kober Gamma-ratio oracle", 10.0},
    {5, "Kilbas-Saigo ODE under L1 refinement", 60.0},
    {6, "Caputo CF reductions", 5.0},
    {7, "B(W_t) chain: CF mixture, inversion, Monte Carlo", 300.0},
    {8, "iterated fBm Monte Carlo", 120.0},
    {9, "Lamperti representations", 180.0},
    {10, "higher-order coefficient identity and Airy ratio", 10.0},
    {11, "binomial identity", 1.0},
};

}  // namespace fracdiff::verify
