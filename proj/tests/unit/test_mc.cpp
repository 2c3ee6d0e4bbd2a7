#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fracdiff/laws.hpp"
#include "fracdiff/mc.hpp"
#include "fracdiff/specfun.hpp"

using namespace fracdiff;
using namespace fracdiff::mc;

namespace {
constexpr std::size_t kN = 1000000;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

// Random123 known-answer vectors for philox4x32-10
TEST(Philox, KnownAnswers) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}), (PhiloxCounter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
            (PhiloxCounter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (PhiloxCounter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Philox, UniformIsOpenInterval) {
  PhiloxEngine g({7, 3});
  for (int i = 0; i < 100000; ++i) {
    const double u = g.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Determinism, SameStreamSameBatchAnyThreadCount) {
  const RngStream s{123, 9};
  auto draw = [](PhiloxEngine& g) { return g.normal(); };
  const auto a = sample_batch(300000, s, "x", 0.0, draw, 1);
  const auto b = sample_batch(300000, s, "x", 0.0, draw, 4);
  EXPECT_EQ(a.values, b.values);
  const auto c = sample_batch(300000, RngStream{123, 10}, "x", 0.0, draw, 1);
  EXPECT_NE(a.values, c.values);
  EXPECT_EQ(sample_iterated_fbm(0.3, 1.0, 1000, s).values, sample_iterated_fbm(0.3, 1.0, 1000, s).values);
}

TEST(Determinism, DistinctStreamsAreUncorrelated) {
  const auto a = sample_fbm_marginal(0.5, 1.0, kN, {42, 1});
  const auto b = sample_fbm_marginal(0.5, 1.0, kN, {42, 2});
  double s = 0.0;
  for (std::size_t i = 0; i < kN; ++i) s += a.values[i] * b.values[i];
  EXPECT_LT(std::abs(s / kN), 5.0 / std::sqrt(double(kN)));
}

TEST(Stats, EmpiricalCfAndKsOnGaussian) {
  const auto b = sample_fbm_marginal(0.5, 1.0, kN, {42, 3});
  EXPECT_EQ(empirical_cf(b, 0.0), std::complex<double>(1.0, 0.0));
  EXPECT_NEAR(empirical_cf(b, 1.0).real(), std::exp(-0.5), 3.0 / std::sqrt(double(kN)));
  EXPECT_LT(ks_distance(b, normal_cdf), 1.63 / std::sqrt(double(kN)));
  EXPECT_THROW(sample_mean({}), DomainError);
}

TEST(Stats, TabulatedCdf) {
  const TabulatedCdf c([](double x) { return laws::gaussian_density(x, 1.0); });
  for (double x : {-3.0, -0.5, 0.0, 0.7, 2.5}) EXPECT_NEAR(c(x), normal_cdf(x), 1e-9);
  EXPECT_LT(c.tail_mass(), 1e-9);
}

TEST(Samplers, FbmMarginal) {
  for (double v : sample_fbm_marginal(0.3, 0.0, 100, {1, 1}).values) EXPECT_EQ(v, 0.0);
  EXPECT_NEAR(sample_variance(sample_fbm_marginal(0.5, 1.0, kN, {42, 4}).values), 1.0, 0.005);
  EXPECT_LT(rel(sample_variance(sample_fbm_marginal(0.75, 2.0, kN, {42, 5}).values), std::pow(2.0, 1.5)), 0.01);
}

TEST(Samplers, IteratedFbmMatchesWrightDensity) {
  for (double h : {0.3, 0.5}) {
    const auto b = sample_iterated_fbm(h, 1.5, kN, {42, 6});
    const TabulatedCdf cdf([h](double x) { return laws::wright_density(0.5, h, x, 1.5); });
    EXPECT_LT(ks_distance(b, std::cref(cdf)), 0.005);
    for (int m : {1, 2}) EXPECT_LT(rel(sample_moment(b.values, 2 * m), laws::even_moment_mcbride(0.5, h, m, 1.5)), 0.02);
  }
}

TEST(Samplers, SymmetricStable) {
  EXPECT_LT(rel(sample_variance(sample_symmetric_stable(2.0, kN, {42, 7}).values), 2.0), 0.01);
  const auto c = sample_symmetric_stable(1.0, kN, {42, 8});
  EXPECT_NEAR(quantile(c.values, 0.5), 0.0, 0.005);
  EXPECT_LT(rel(quantile(c.values, 0.75) - quantile(c.values, 0.25), 2.0), 0.02);
  EXPECT_LT(ks_distance(c, [](double x) { return 0.5 + std::atan(x) / std::numbers::pi; }), 0.005);
}

TEST(Samplers, OneSidedStableHalfIsLevy) {
  // Laplace transform exp(-sqrt(s)): Levy law with scale 1/2, CDF erfc(1/(2 sqrt x))
  const auto b = sample_one_sided_stable(0.5, kN, {42, 9});
  EXPECT_LT(ks_distance(b, [](double x) { return x > 0 ? std::erfc(0.5 / std::sqrt(x)) : 0.0; }), 0.005);
  double lt = 0.0;
  for (double v : b.values) lt += std::exp(-v);
  EXPECT_NEAR(lt / kN, std::exp(-1.0), 0.002);
}

TEST(Samplers, Lamperti) {
  const auto b = sample_lamperti(0.5, kN, {42, 10});
  std::size_t below = 0;
  for (double v : b.values) below += v <= 1.0;
  EXPECT_NEAR(double(below) / kN, 0.5, 0.002);
  for (double a : {0.3, 0.5, 0.8}) {
    const auto l = sample_lamperti(a, kN, {42, 11});
    EXPECT_LT(ks_distance(l, [a](double r) { return r > 0 ? laws::lamperti_cdf({a}, r) : 0.0; }), 0.005) << a;
  }
}

TEST(Samplers, QuarticSubordinators) {
  const double t = 2.0;
  const auto w = sample_Wt(t, kN, {42, 12});
  const auto mean = transform::integrate([t](double z) { return z * laws::wt_kernel(z, t); }, 0.0,
                                         std::numeric_limits<double>::infinity());
  EXPECT_LT(rel(sample_mean(w.values), mean.value), 0.01);
  // W_t = t^{1/4} W_1 in law
  const auto w1 = sample_Wt(1.0, kN, {42, 13});
  for (double q : {0.1, 0.5, 0.9}) EXPECT_LT(rel(quantile(w.values, q) / quantile(w1.values, q), std::pow(t, 0.25)), 0.01);
  // frak-W_t = W_t / 2 in law
  const auto f = sample_Wt(t, kN, {42, 14}, Subordinator::FrakWt);
  EXPECT_LT(rel(2.0 * quantile(f.values, 0.5), quantile(w.values, 0.5)), 0.01);
  const TabulatedCdf cdf([t](double z) { return 0.5 * laws::frak_wt_kernel(std::abs(z), t); });
  EXPECT_LT(ks_distance(f, [&](double z) { return 2.0 * cdf(z) - 1.0; }), 0.005);
}

TEST(Samplers, BrownianAtQuarticTime) {
  const auto b = sample_B_of_Wt(1.0, kN, {42, 15});
  const TabulatedCdf cdf([](double x) { return laws::bwt_density(x, 1.0); });
  EXPECT_LT(ks_distance(b, std::cref(cdf)), 0.005);
  EXPECT_NEAR(empirical_cf(b, 1.0).real(), laws::cf_caputo(0.75, 0.25, 1.0, 1.0), 0.01);
  // order 2 stable at time W is B(2W)
  const auto y = sample_stable_of_Wt(2.0, 1.0, kN, {42, 16}, Subordinator::Wt);
  const auto z = sample_B_of_Wt(2.0 * 2.0 * 2.0 * 2.0, kN, {42, 17});  // 2 W_1 has the law of W_16
  for (double be : {0.5, 1.0}) EXPECT_NEAR(empirical_cf(y, be).real(), empirical_cf(z, be).real(), 0.01);
}

TEST(Samplers, StableLampertiTimeCaputoModel) {
  for (auto [nu, a] : {std::pair{0.5, 1.0}, std::pair{0.7, 1.2}}) {
    const double t = 1.3;
    const auto y = sample_stable_lamperti_time(lamperti_time_single(nu, a, t), t, kN, {42, 18});
    for (double be : {0.5, 1.0, 2.0})
      EXPECT_NEAR(empirical_cf(y, be).real(), specfun::mittag_leffler({nu, 1.0}, -std::pow(be, a) * std::pow(t, nu) / 2), 0.01);
  }
  EXPECT_THROW(sample_stable_lamperti_time(lamperti_time_single(0.5, 1.5, 1.0), 1.0, 10, {}), DomainError);
}

TEST(Samplers, StableLampertiTimeDegenerateNuOne) {
  const auto y = sample_stable_lamperti_time(lamperti_time_single(1.0, 1.5, 2.0), 2.0, kN, {42, 19});
  for (double be : {0.5, 1.0}) EXPECT_NEAR(empirical_cf(y, be).real(), std::exp(-std::pow(be, 1.5) * 2.0 / 2), 0.01);
}

TEST(Samplers, StableLampertiTimeMcBrideModel) {
  const double a = 0.6, h = 0.3, sp = 1.0, t = 1.5;
  const auto y = sample_stable_lamperti_time(lamperti_time_mcbride(a, h, sp, t), t, kN, {42, 20});
  for (double be : {0.5, 1.0, 2.0}) {
    const double expect = specfun::mittag_leffler({a, 1.0}, -std::pow(be, sp) * std::pow(t, 2 * h * a) / std::pow(2.0, a));
    EXPECT_NEAR(empirical_cf(y, be).real(), expect, 0.01);
  }
  // alpha = 1 with space order 2 is fBm at time t
  const auto g = sample_stable_lamperti_time(lamperti_time_mcbride(1.0, h, 2.0, t), t, kN, {42, 21});
  for (double be : {0.5, 1.0}) EXPECT_NEAR(empirical_cf(g, be).real(), std::exp(-be * be * std::pow(t, 2 * h) / 2), 0.01);
  // composed order 2/alpha exceeds 2
  EXPECT_THROW(sample_stable_lamperti_time(lamperti_time_mcbride(0.8, h, 2.0, t), t, 10, {}), DomainError);
}

TEST(Samplers, DoubleLampertiMatchesSingle) {
  const double t = 1.0;
  const auto d = sample_stable_lamperti_time(lamperti_time_double(0.8, 0.5, 0.8, t), t, kN, {42, 22});
  for (double be : {0.5, 1.0, 2.0})
    EXPECT_NEAR(empirical_cf(d, be).real(), specfun::mittag_leffler({0.4, 1.0}, -std::pow(be, 0.8) * std::pow(t, 0.4) / 2), 0.01);
}

TEST(Samplers, RejectInvalidParameters) {
  EXPECT_THROW(sample_iterated_fbm(1.0, 1.0, 10, {}), DomainError);
  EXPECT_THROW(sample_one_sided_stable(1.0, 10, {}), DomainError);
  EXPECT_THROW(sample_symmetric_stable(2.5, 10, {}), DomainError);
  EXPECT_THROW(sample_Wt(-1.0, 10, {}), DomainError);
  EXPECT_THROW(sample_stable_of_Wt(0.0, 1.0, 10, {}), DomainError);
}
