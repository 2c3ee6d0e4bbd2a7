// McBride and Caputo densities on a small grid, next to the Gaussian with the same variance.
#include <cmath>
#include <cstdio>

#include "fracdiff/laws.hpp"

using namespace fracdiff;

int main() {
  const double t = 1.0;
  const auto xs = laws::uniform_grid(-4.0, 4.0, 17);
  const auto mcb = laws::density_curve(laws::ModelSpec::mcbride(0.5, 0.5), xs, t);
  const auto cap = laws::density_curve(laws::ModelSpec::caputo(0.75, 0.25), xs, t);
  const double var = laws::even_moment_mcbride(0.5, 0.5, 1, t);
  std::printf("%6s %14s %14s %14s\n", "x", "mcbride", "caputo", "gauss(same var)");
  for (std::size_t i = 0; i < xs.size(); ++i)
    std::printf("%6.2f %14.8f %14.8f %14.8f\n", xs[i], mcb.vals[i], cap.vals[i], laws::gaussian_density(xs[i], var));
  std::printf("mcbride variance at t=1: %.12g\n", var);
}
