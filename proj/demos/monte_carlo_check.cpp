// Samples B(W_t) and the iterated fBm and compares them with the analytic laws.
#include <cstdio>
#include <functional>

#include "fracdiff/laws.hpp"
#include "fracdiff/mc.hpp"

using namespace fracdiff;

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;
  const std::size_t n = 200000;

  const auto b = mc::sample_B_of_Wt(1.0, n, {seed, 1});
  const mc::TabulatedCdf bcdf([](double x) { return laws::bwt_density(x, 1.0); });
  std::printf("B(W_1):   KS=%.5f  cf(1) sample=%.5f exact=%.5f\n", mc::ks_distance(b, std::cref(bcdf)),
              mc::empirical_cf(b, 1.0).real(), laws::cf_caputo(0.75, 0.25, 1.0, 1.0));

  for (double h : {0.25, 0.5}) {
    const auto y = mc::sample_iterated_fbm(h, 2.0, n, {seed, 2});
    const mc::TabulatedCdf cdf([h](double x) { return laws::wright_density(0.5, h, x, 2.0); });
    std::printf("iterated fBm H=%.2f t=2: KS=%.5f  E X^2 sample=%.5f exact=%.5f\n", h, mc::ks_distance(y, std::cref(cdf)),
                mc::sample_moment(y.values, 2), laws::even_moment_mcbride(0.5, h, 1, 2.0));
  }
}
