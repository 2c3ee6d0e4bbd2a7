#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fracdiff/error.hpp"
#include "fracdiff/laws/model.hpp"
#include "fracdiff/specfun/gamma.hpp"
#include "fracdiff/specfun/kilbas_saigo.hpp"

namespace fracdiff::laws {

// Power series of u_{2/k}:
//   u = 2^{1/k - 1} t^{-2H/k} sum_n (-1)^n 2^{n/k} |x|^n / (n! Gamma(1 - (n+1)/k) t^{2Hn/k})
inline double higher_order_series_density(int k, double hurst, double x, double t, int* terms = nullptr) {
  if (k < 3) throw DomainError("higher_order_series_density: k must be >= 3");
  if (!(t > 0.0)) throw DomainError("higher_order_series_density: t must be positive");
  const double y = std::pow(2.0, 1.0 / k) * std::abs(x) / std::pow(t, 2.0 * hurst / k);
  double s = 0.0, big = 0.0;
  int n = 0, small = 0;
  for (; n < 4000; ++n) {
    int sg = 1;
    const double lg = specfun::log_abs_gamma(1.0 - (n + 1.0) / k, &sg);
    const double r = specfun::is_nonpositive_integer(1.0 - (n + 1.0) / k) ? 0.0 : 1.0;
    const double mag = (y > 0.0 ? n * std::log(y) : (n == 0 ? 0.0 : -INFINITY)) - specfun::log_abs_gamma(n + 1.0) - lg;
    const double term = r * ((n & 1) ? -1.0 : 1.0) * sg * std::exp(mag);
    s += term;
    big = std::max(big, std::abs(term));
    // bound ignoring the 1/Gamma factor's sign changes
    const double bound = std::exp((y > 0.0 ? n * std::log(y) : -INFINITY) - specfun::log_abs_gamma(n + 1.0) - lg);
    if (n > 2 && bound < 1e-14 * big) {
      if (++small >= 3) break;
    } else if (r != 0.0) {
      small = 0;
    }
  }
  if (n >= 4000) throw ConvergenceError("higher_order_series_density: truncation insufficient", s, big);
  if (terms) *terms = n + 1;
  return s * std::pow(2.0, 1.0 / k - 1.0) / std::pow(t, 2.0 * hurst / k);
}

struct HigherOrderResidual {
  double coefficient_mismatch = 0.0;  // max relative mismatch of series coefficients
  double pointwise_mismatch = 0.0;    // max relative gap of the two sides on the grid
  int terms = 0;
};

// Checks t^{1-2H} du/dt = (-1)^k H d^k u/dx^k for u_{2/k} term by term.
// Coefficient of x^n t^{-2H(n+1)/k - 2H} (common factor 2^{n/k}/n! dropped):
//   lhs_n = -(2H/k)(n+1)(-1)^n / Gamma(1 - (n+1)/k)
//   rhs_n = (-1)^k H (-1)^{n+k} 2 / Gamma(1 - (n+k+1)/k)
inline HigherOrderResidual higher_order_residual(const ModelSpec& m, double t, const std::vector<double>& xgrid) {
  if (m.kind != ModelKind::HigherOrderMcBride) throw DomainError("higher_order_residual: HigherOrderMcBride required");
  m.validate();
  if (!(t > 0.0)) throw DomainError("higher_order_residual: t must be positive");
  const int k = m.korder;
  const double h = m.hurst;
  double xmax = 0.0;
  for (double x : xgrid) {
    if (!(x > 0.0)) throw DomainError("higher_order_residual: grid must be positive");
    xmax = std::max(xmax, x);
  }
  const double y = std::pow(2.0, 1.0 / k) * xmax / std::pow(t, 2.0 * h / k);

  // truncation from the term bound at the largest x
  std::vector<double> lhs, rhs;
  double big = 0.0;
  int small = 0;
  for (int n = 0;; ++n) {
    if (n >= 4000) throw ConvergenceError("higher_order_residual: truncation insufficient", 0.0, big);
    const double sg = (n & 1) ? -1.0 : 1.0;
    const double a1 = 1.0 - (n + 1.0) / k;
    const double a2 = 1.0 - (n + k + 1.0) / k;
    const double l = -(2.0 * h / k) * (n + 1.0) * sg * specfun::rgamma(a1);
    const double kk = (k % 2) ? -1.0 : 1.0;
    const double r = kk * h * sg * kk * 2.0 * specfun::rgamma(a2);
    lhs.push_back(l);
    rhs.push_back(r);
    const double bound = std::exp(n * std::log(std::max(y, 1e-300)) - specfun::log_abs_gamma(n + 1.0) -
                                  specfun::log_abs_gamma(a1)) * (n + 1.0);
    big = std::max(big, bound);
    if (n > 2 && bound < 1e-14 * big) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }

  HigherOrderResidual res;
  res.terms = static_cast<int>(lhs.size());
  for (std::size_t n = 0; n < lhs.size(); ++n) {
    const double sc = std::max(std::abs(lhs[n]), std::abs(rhs[n]));
    if (sc == 0.0) continue;
    res.coefficient_mismatch = std::max(res.coefficient_mismatch, std::abs(lhs[n] - rhs[n]) / sc);
  }
  for (double x : xgrid) {
    const double yx = std::pow(2.0, 1.0 / k) * x / std::pow(t, 2.0 * h / k);
    double sl = 0.0, sr = 0.0, sa = 0.0;
    for (std::size_t n = 0; n < lhs.size(); ++n) {
      const double w = std::exp(n * std::log(yx) - specfun::log_abs_gamma(n + 1.0));
      sl += lhs[n] * w;
      sr += rhs[n] * w;
      sa += std::abs(lhs[n] * w);
    }
    if (sa > 0.0) res.pointwise_mismatch = std::max(res.pointwise_mismatch, std::abs(sl - sr) / sa);
  }
  return res;
}

// Kilbas-Saigo coefficients of E_{1/2,2,1} against products of central binomial probabilities.
struct BinomialCheck {
  int k = 0;
  std::string central_product;  // exact rational prod_{j=1}^k C(2j,j) 2^{-2j}
  std::string printed_product;  // exact rational prod_{j=1}^k C(2j,j) 2^{-j}
  double ks_coefficient = 0.0;  // from the Kilbas-Saigo series
  double central_value = 0.0;   // pi^{k/2} * central product
  double printed_value = 0.0;   // pi^{k/2} * printed product
  double central_rel_error = 0.0;
  double printed_rel_error = 0.0;
  std::string ks_rational;       // c_k / pi^{k/2} from half-integer Gamma recursions
  bool exact = true;            // false when k > 20 (floating products)
  bool central_exact_match = false;
  bool printed_exact_match = false;
};

inline BinomialCheck binomial_product_coeff(int k) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  if (k < 1) throw DomainError("binomial_product_coeff: k must be >= 1");
  BinomialCheck out;
  out.k = k;
  out.exact = k <= 20;
  const double pik = std::pow(std::numbers::pi, 0.5 * k);
  if (out.exact) {
    cpp_rational quarter = 1, half = 1;
    for (int j = 1; j <= k; ++j) {
      cpp_int c = 1;  // C(2j, j)
      for (int i = 1; i <= j; ++i) c = c * (j + i) / i;
      quarter *= cpp_rational(c, cpp_int(1) << (2 * j));
      half *= cpp_rational(c, cpp_int(1) << j);
    }
    // Gamma(j + 3/2) / sqrt(pi) = prod_{i<=j} (2i+1)/2, Gamma(j + 2) = (j+1)!
    cpp_rational ks = 1;
    for (int j = 0; j < k; ++j) {
      cpp_rational g = 1;
      for (int i = 0; i <= j; ++i) g *= cpp_rational(2 * i + 1, 2);
      for (int i = 2; i <= j + 1; ++i) g /= i;
      ks *= g;
    }
    out.ks_rational = ks.str();
    out.central_exact_match = ks == quarter;
    out.printed_exact_match = ks == half;
    out.central_product = quarter.str();
    out.printed_product = half.str();
    out.central_value = pik * static_cast<double>(quarter);
    out.printed_value = pik * static_cast<double>(half);
  } else {
    double lq = 0.0, lh = 0.0;
    for (int j = 1; j <= k; ++j) {
      const double lc = specfun::log_abs_gamma(2.0 * j + 1.0) - 2.0 * specfun::log_abs_gamma(j + 1.0);
      lq += lc - 2.0 * j * std::numbers::ln2;
      lh += lc - j * std::numbers::ln2;
    }
    out.central_value = pik * std::exp(lq);
    out.printed_value = pik * std::exp(lh);
  }
  const specfun::KilbasSaigoSeries ks({0.5, 2.0, 1.0}, 1.0);
  out.ks_coefficient = 1.0;
  for (int j = 0; j < k; ++j) out.ks_coefficient *= ks.ratio(j);
  out.central_rel_error = std::abs(out.central_value - out.ks_coefficient) / std::abs(out.ks_coefficient);
  out.printed_rel_error = std::abs(out.printed_value - out.ks_coefficient) / std::abs(out.ks_coefficient);
  return out;
}

// P{Binomial(2j, 1/2) = j} sqrt(pi j), tends to 1
inline double central_binomial_scaled(long j) {
  if (j < 1) throw DomainError("central_binomial_scaled: j must be >= 1");
  const double lp = specfun::log_abs_gamma(2.0 * j + 1.0) - 2.0 * specfun::log_abs_gamma(j + 1.0) - 2.0 * j * std::numbers::ln2;
  return std::exp(lp) * std::sqrt(std::numbers::pi * j);
}

}  // namespace fracdiff::laws
