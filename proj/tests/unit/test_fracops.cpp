#include <cmath>

#include <gtest/gtest.h>

#include "fracdiff/fracops.hpp"
#include "fracdiff/specfun.hpp"

using namespace fracdiff;
using namespace fracdiff::fracops;
using specfun::gamma_fn;
using specfun::rgamma;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

GridFn sample(double (*f)(double), int n) { return GridFn::sample(f, 0.0, 1.0, n); }
}  // namespace

TEST(Grid, RejectsBadInput) {
  EXPECT_THROW(GridFn::make({0.0, 1.0}, {0.0, 1.0}), GridError);
  EXPECT_THROW(GridFn::make({0.0, 2.0, 1.0}, {0.0, 1.0, 2.0}), GridError);
  EXPECT_THROW(GridFn::make({0.0, 1.0, 2.0}, {0.0, 1.0}), GridError);
  const auto nonuniform = GridFn::make({0.0, 0.1, 0.5, 1.0}, {0, 0, 0, 0});
  EXPECT_FALSE(nonuniform.uniform);
  EXPECT_THROW(caputo_derivative_grid(nonuniform, 0.5), GridError);
}

TEST(Grid, IntegralOfOneIsT) {
  const auto f = sample([](double) { return 1.0; }, 256);
  const auto i = rl_integral_grid(f, 1.0);
  for (std::size_t k = 0; k < i.size(); ++k) EXPECT_NEAR(i.vals[k], i.ts[k], 1e-12);
}

TEST(Grid, ZeroIsFixed) {
  const auto f = sample([](double) { return 0.0; }, 128);
  for (double v : rl_integral_grid(f, 0.4).vals) EXPECT_EQ(v, 0.0);
  for (double v : caputo_derivative_grid(f, 0.4).vals) EXPECT_EQ(v, 0.0);
}

TEST(Grid, MonomialRules) {
  const auto f = sample([](double t) { return t; }, 2048);
  const auto i = rl_integral_grid(f, 0.5);
  for (std::size_t k = 1; k < i.size(); ++k)
    EXPECT_LT(rel(i.vals[k], gamma_fn(2.0) / gamma_fn(2.5) * std::pow(i.ts[k], 1.5)), 1e-3);
  const auto d = caputo_derivative_grid(f, 0.5);
  for (std::size_t k = 0; k < d.size(); ++k) EXPECT_LT(rel(d.vals[k], std::sqrt(d.ts[k]) / gamma_fn(1.5)), 1e-3);
}

TEST(Grid, CaputoKillsConstants) {
  const auto f = sample([](double) { return 3.0; }, 512);
  for (double v : caputo_derivative_grid(f, 0.3).vals) EXPECT_EQ(v, 0.0);
}

TEST(Grid, RiemannLiouvilleDerivativeOfConstantAndT) {
  const double a = 0.4;
  const auto c = rl_derivative_grid(sample([](double) { return 2.0; }, 4096), a);
  const auto l = rl_derivative_grid(sample([](double t) { return t; }, 4096), a);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double t = c.ts[k];
    if (t < 0.1) continue;
    EXPECT_LT(rel(c.vals[k], 2.0 * std::pow(t, -a) * rgamma(1.0 - a)), 1e-3) << t;
    EXPECT_LT(rel(l.vals[k], std::pow(t, 1.0 - a) * rgamma(2.0 - a)), 1e-3) << t;
  }
}

TEST(Grid, MittagLefflerEigenfunction) {
  const double nu = 0.6, lam = -1.0;
  double prev = INFINITY;
  for (int n : {1024, 4096}) {
    const auto f = GridFn::sample([&](double t) { return specfun::mittag_leffler({nu, 1.0}, lam * std::pow(t, nu)); }, 0.0, 1.0, n);
    const auto d = caputo_derivative_grid(f, nu);
    double mx = 0.0;
    // t^nu is not smooth at 0, so the first nodes carry an O(1) error; measure on [0.25, 1]
    for (std::size_t k = 0; k < d.size(); ++k)
      if (d.ts[k] >= 0.25) mx = std::max(mx, std::abs(d.vals[k] - lam * f.vals[k + 1]));
    EXPECT_LT(mx, prev);
    prev = mx;
  }
  EXPECT_LT(prev, 1e-2);
}

// Caputo = RL derivative minus the RL derivative of the initial value
TEST(Grid, CaputoRiemannLiouvilleRelation) {
  const double a = 0.5;
  for (auto f : {+[](double) { return 1.0; }, +[](double t) { return t; }, +[](double t) { return t * t; },
                 +[](double t) { return std::exp(t); }}) {
    const auto g = sample(f, 4096);
    const auto rl = rl_derivative_grid(g, a);
    const auto cap = caputo_derivative_grid(g, a);
    double mx = 0.0;
    for (std::size_t k = 0; k < rl.size(); ++k) {
      const double t = rl.ts[k];
      if (t < 0.1) continue;
      mx = std::max(mx, std::abs(cap.vals[k] - (rl.vals[k] - f(0.0) * std::pow(t, -a) * rgamma(1.0 - a))));
    }
    EXPECT_LT(mx, 2e-3);
  }
}

TEST(Grid, CaputoApproachesFirstDerivative) {
  const auto f = sample([](double t) { return std::sin(2.0 * t); }, 2048);
  const auto d = caputo_derivative_grid(f, 0.999);
  for (std::size_t k = 0; k < d.size(); k += 97) {
    const double t = d.ts[k];
    if (t < 0.05) continue;
    EXPECT_LT(std::abs(d.vals[k] - 2.0 * std::cos(2.0 * t)), 0.01 * 2.0) << t;
  }
}

TEST(ErdelyiKober, DocumentedExample) {
  const EKOperator op{1.0, 0.0, 0.5};
  const auto m = ek_monomial(op, Monomial{1.0, 1.0});
  EXPECT_NEAR(m.coeff, 0.7522527780636751, 1e-15);
  EXPECT_LT(rel(ek_integral_numeric(op, [](double u) { return u; }, 1.7), m(1.7)), 1e-8);
  EXPECT_EQ(ek_integral_numeric(op, [](double) { return 0.0; }, 1.7), 0.0);
}

TEST(ErdelyiKober, NumericMatchesGammaRatioOnLattice) {
  for (double m : {0.5, 1.0, 2.0})
    for (double eta : {-0.5, 0.0, 1.0})
      for (double a : {0.25, 0.5, 1.5})
        for (double g : {0.0, 0.5, 1.0, 2.5}) {
          const EKOperator op{m, eta, a};
          const double num = ek_integral_numeric(op, [g](double u) { return std::pow(u, g); }, 1.3);
          EXPECT_LT(rel(num, ek_monomial(op, Monomial{1.0, g})(1.3)), 1e-8) << m << ' ' << eta << ' ' << a << ' ' << g;
        }
}

TEST(ErdelyiKober, SemigroupIsExactOnMonomials) {
  for (double g : {0.0, 0.7, 3.0}) {
    const Monomial p{1.0, g};
    const auto two = ek_monomial({2.0, 0.3 + 0.4, 0.9}, ek_monomial({2.0, 0.3, 0.4}, p));
    const auto one = ek_monomial({2.0, 0.3, 1.3}, p);
    EXPECT_LT(rel(two.coeff, one.coeff), 1e-14);
  }
}

TEST(ErdelyiKober, OrderZeroIsIdentity) {
  const Monomial p{2.5, 1.25};
  const auto q = ek_monomial({1.5, 0.2, 0.0}, p);
  EXPECT_EQ(q.coeff, p.coeff);
  EXPECT_EQ(ek_apply_negative_order({1.0, 0.0, 0.0}, [](double) { return 4.0; }, [](double) { return 0.0; }, 0.7), 4.0);
}

TEST(ErdelyiKober, NegativeOrderOnWrightSeriesTerms) {
  // I_{2H}^{0,-a} t^{2aHk} = Gamma(ak+1)/Gamma(ak+1-a) t^{2aHk}
  for (double h : {0.25, 0.75})
    for (double a : {0.3, 0.6})
      for (int k : {1, 2, 5}) {
        const EKOperator op{2.0 * h, 0.0, -a};
        const double g = 2.0 * a * h * k;
        const double expect = gamma_fn(a * k + 1.0) / gamma_fn(a * k + 1.0 - a);
        EXPECT_LT(rel(ek_monomial(op, Monomial{1.0, g}).coeff, expect), 1e-14);
        const double num = ek_apply_negative_order(
            op, [g](double u) { return std::pow(u, g); }, [g](double u) { return g * std::pow(u, g - 1.0); }, 1.4);
        EXPECT_LT(rel(num, expect * std::pow(1.4, g)), 1e-8);
      }
}

TEST(McBride, PowerOnMonomials) {
  // (a1, a2) = (1 - 2H, 0): t^{2Hak} -> (2H)^a Gamma(ak+1)/Gamma(ak+1-a) t^{2Ha(k-1)}
  for (double h : {0.25, 0.5, 0.75})
    for (double a : {0.4, 0.8})
      for (int k : {1, 3}) {
        const McBrideOp op{1.0 - 2.0 * h, 0.0, a};
        const auto q = mcbride_power_monomial(op, Monomial{1.0, 2 * h * a * k});
        EXPECT_LT(rel(q.coeff, std::pow(2 * h, a) * gamma_fn(a * k + 1) / gamma_fn(a * k + 1 - a)), 1e-13);
        EXPECT_NEAR(q.exponent, 2 * h * a * (k - 1), 1e-15);
        const auto v = mcbride_power_via_ek(op, Monomial{1.0, 2 * h * a * k});
        EXPECT_LT(rel(v.coeff, q.coeff), 1e-13);
      }
  const auto d = mcbride_power_monomial({0.0, 0.0, 1.0}, Monomial{1.0, 2.0});
  EXPECT_NEAR(d.coeff, 2.0, 1e-14);
  EXPECT_NEAR(d.exponent, 1.0, 1e-15);
  // first order with a1: t^{a1} d/dt t^g = g t^{g - 1 + a1}
  const auto e = mcbride_power_monomial({0.3, 0.0, 1.0}, Monomial{1.0, 1.7});
  EXPECT_NEAR(e.coeff, 1.7, 1e-13);
  EXPECT_NEAR(e.exponent, 1.7 - 0.7, 1e-15);
  // derivative of a constant is zero
  EXPECT_EQ(mcbride_power_monomial({0.0, 0.0, 1.0}, Monomial{5.0, 0.0}).coeff, 0.0);
}

// Applying (t^{1-2H} d/dt)^a termwise to E_a(-b^2 t^{2Ha}/2^a) gives
// -H^a b^2 f + (2H)^a t^{-2Ha}/Gamma(1-a)
TEST(McBride, RegularizationIdentityTermwise) {
  for (double h : {0.3, 0.5, 0.7})
    for (double a : {0.35, 0.6}) {
      const double b = 1.3, c = -b * b / std::pow(2.0, a);
      const McBrideOp op{1.0 - 2.0 * h, 0.0, a};
      const int n = 40;
      MonomialSeries f;
      for (int k = 0; k < n; ++k) f.push_back({std::pow(c, k) * rgamma(a * k + 1.0), 2.0 * h * a * k});
      const auto df = mcbride_power_monomial(op, f);
      // df[k] sits at exponent 2Ha(k-1); compare with -H^a b^2 f[k-1] for k >= 1
      for (int k = 1; k < n; ++k) {
        const double expect = -std::pow(h, a) * b * b * f[k - 1].coeff;
        EXPECT_LT(std::abs(df[k].coeff - expect), 1e-13 * std::max(1.0, std::abs(expect))) << k;
        EXPECT_NEAR(df[k].exponent, f[k - 1].exponent, 1e-13);
      }
      // k = 0: the constant term leaves (2H)^a t^{-2Ha}/Gamma(1-a)
      EXPECT_LT(rel(df[0].coeff, std::pow(2 * h, a) * rgamma(1.0 - a)), 1e-14);
      EXPECT_NEAR(df[0].exponent, -2.0 * h * a, 1e-15);
    }
}

TEST(Riesz, Symbol) {
  EXPECT_EQ(riesz_symbol(0.0, 0.7), -0.0);
  EXPECT_DOUBLE_EQ(riesz_symbol(3.0, 2.0), -9.0);
  EXPECT_NEAR(riesz_symbol(2.0, 1.5), -2.8284271247461903, 1e-15);
  EXPECT_THROW(riesz_symbol(1.0, 2.5), DomainError);
}
