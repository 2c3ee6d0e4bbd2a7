#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fracdiff/laws.hpp"
#include "fracdiff/specfun.hpp"
#include "fracdiff/transform.hpp"

using namespace fracdiff;
using namespace fracdiff::transform;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
constexpr double kInfty = std::numeric_limits<double>::infinity();
}  // namespace

TEST(Quadrature, GammaIntegral) {
  const auto r = integrate([](double w) { return std::exp(-w) * std::pow(w, -0.75); }, 0.0, kInfty);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(rel(r.value, specfun::gamma_fn(0.25)), 1e-10);
}

TEST(Quadrature, EndpointSingularity) {
  const auto r = integrate([](double s) { return 1.0 / std::sqrt(1.0 - s); }, 0.0, 1.0);
  // naive form: 1 - s loses digits next to the endpoint
  EXPECT_NEAR(r.value, 2.0, 1e-7);
  // gap form resolves the singular factor exactly near the endpoint
  const auto g = integrate([](double, double, double hi) { return 1.0 / std::sqrt(hi); }, 0.0, 1.0);
  EXPECT_NEAR(g.value, 2.0, 1e-13);
}

TEST(Quadrature, LampertiDensityNormalized) {
  QuadConfig c;
  c.split_points = {1.0};
  const laws::LampertiParams p{0.5};
  const auto r = integrate([&](double x) { return laws::lamperti_density(p, x); }, 0.0, kInfty, c);
  EXPECT_NEAR(r.value, 1.0, 1e-9);
}

TEST(Quadrature, WholeLineAndReversedLimits) {
  const auto r = integrate([](double x) { return std::exp(-x * x); }, -kInfty, kInfty);
  EXPECT_NEAR(r.value, std::sqrt(std::numbers::pi), 1e-13);
  const auto a = integrate([](double x) { return x * x; }, 0.0, 2.0);
  const auto b = integrate([](double x) { return x * x; }, 2.0, 0.0);
  EXPECT_NEAR(a.value, 8.0 / 3.0, 1e-14);
  EXPECT_EQ(a.value, -b.value);
}

TEST(Quadrature, RejectsBadConfig) {
  QuadConfig c;
  c.max_levels = 20;
  EXPECT_THROW(integrate([](double x) { return x; }, 0.0, 1.0, c), DomainError);
  EXPECT_THROW(integrate([](double x) { return x; }, NAN, 1.0), DomainError);
}

TEST(GaussLegendre, ExactForPolynomials) {
  const auto rule = gauss_legendre(8);
  double w = 0.0;
  for (double v : rule.weights) w += v;
  EXPECT_NEAR(w, 2.0, 4e-15);
  EXPECT_NEAR(gauss_legendre_panel(rule, [](double x) { return std::pow(x, 15); }, 0.0, 1.0), 1.0 / 16.0, 1e-15);
}

TEST(Inversion, GaussianPair) {
  InversionConfig cfg;
  cfg.tail_coefficient = 0.0;
  const auto g = [](double b) { return std::exp(-0.5 * b * b); };
  EXPECT_NEAR(invert_cf_symmetric(g, 0.0, cfg), 1.0 / std::sqrt(2.0 * std::numbers::pi), 1e-12);
  const SymmetricInverter inv(g, cfg);
  for (int i = -60; i <= 60; ++i) {
    const double x = 0.1 * i;
    EXPECT_NEAR(inv.density(x), std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi), 1e-8) << x;
  }
}

TEST(Inversion, InsufficientDecayRejected) {
  InversionConfig cfg;
  cfg.tail_exponent = 1.0;
  EXPECT_THROW(invert_cf_symmetric([](double b) { return 1.0 / (1.0 + std::abs(b)); }, 0.0, cfg), DomainError);
}

TEST(Inversion, CauchyViaKnownTail) {
  // cf = 1/(1+b^2) has density e^{-|x|}/2; the tail is b^{-2} - b^{-4} + ...
  InversionConfig cfg;
  cfg.tail_coefficient = 1.0;
  cfg.extra_tail = {{-1.0, 4.0}, {1.0, 6.0}};
  const SymmetricInverter inv([](double b) { return 1.0 / (1.0 + b * b); }, cfg);
  for (double x : {0.1, 0.5, 1.0, 3.0, 8.0}) EXPECT_NEAR(inv.density(x), 0.5 * std::exp(-x), 1e-8) << x;
}

TEST(Inversion, McBrideAgainstClosedForm) {
  const auto cfg = laws::mcbride_inversion_config(0.5, 0.5, 1.0);
  const SymmetricInverter inv([](double b) { return laws::cf_mcbride(0.5, 0.5, b, 1.0); }, cfg);
  double sup = 0.0;
  for (int i = -50; i <= 50; ++i) sup = std::max(sup, std::abs(inv.density(0.1 * i) - laws::wright_density(0.5, 0.5, 0.1 * i, 1.0)));
  EXPECT_LT(sup, 1e-5);
}

TEST(Inversion, CaputoAgainstMixture) {
  const auto c = laws::density_curve(laws::ModelSpec::caputo(0.75, 0.25), laws::uniform_grid(-5, 5, 41), 1.0,
                                     laws::DensityMethod::FourierInversion);
  for (std::size_t i = 0; i < c.xs.size(); ++i) EXPECT_NEAR(c.vals[i], laws::bwt_density(c.xs[i], 1.0), 1e-5);
}

// normalization audit over the test matrix of characteristic functions
TEST(Inversion, InvertedCurvesIntegrateToOne) {
  const auto xs = laws::uniform_grid(-60.0, 60.0, 6001);
  for (const auto& m : {laws::ModelSpec::mcbride(0.5, 0.5), laws::ModelSpec::mcbride(0.8, 0.3),
                        laws::ModelSpec::caputo(0.75, 0.25), laws::ModelSpec::caputo(0.6, 0.6)}) {
    const auto c = laws::density_curve(m, xs, 1.0, laws::DensityMethod::FourierInversion);
    EXPECT_NEAR(c.integral(), 1.0, 5e-5) << laws::to_string(m.kind) << ' ' << m.alpha << ' ' << m.nu;
  }
}

TEST(LampertiMixture, MatchesMittagLefflerOnLattice) {
  for (double g : {0.4, 0.5, 0.8})
    for (double e : {0.5, 1.0})
      for (double th : {0.1, 1.0, 10.0}) {
        const double t = 1.3;
        EXPECT_LT(rel(ml_lamperti_mixture(g, e, th, t), specfun::mittag_leffler({g * e, 1.0}, -th * std::pow(t, g * e))),
                  1e-7)
            << g << ' ' << e << ' ' << th;
      }
}

TEST(LampertiMixture, DegenerateCases) {
  EXPECT_EQ(ml_lamperti_mixture(0.5, 0.5, 0.0, 1.0), 1.0);
  EXPECT_NEAR(ml_lamperti_mixture(1.0, 0.7, 2.0, 1.5), specfun::mittag_leffler({0.7, 1.0}, -2.0 * std::pow(1.5, 0.7)), 1e-15);
  // eta = 1: exponential mixture over the Lamperti law
  EXPECT_LT(rel(ml_lamperti_mixture(0.6, 1.0, 1.0, 1.0), specfun::mittag_leffler({0.6, 1.0}, -1.0)), 1e-7);
}
