#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "fracdiff/detail/bigfloat.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/specfun/gamma.hpp"
#include "fracdiff/specfun/series.hpp"

namespace fracdiff::specfun {

struct KilbasSaigoParams {
  double alpha = 1.0;
  double m = 1.0;
  double l = 0.0;

  // m = 0 is accepted: the series is then geometric.
  void validate() const {
    if (!(alpha > 0.0)) throw DomainError("KilbasSaigoParams: alpha must be positive");
    if (!(m >= 0.0)) throw DomainError("KilbasSaigoParams: m must be non-negative");
    if (!std::isfinite(l)) throw DomainError("KilbasSaigoParams: l must be finite");
  }
  // Gamma argument of the numerator of the j-th ratio
  double numerator_arg(int j) const { return alpha * (j * m + l) + 1.0; }
};

// E_{alpha,m,l}(z) = 1 + sum_k z^k prod_{j<k} Gamma(alpha(jm+l)+1) / Gamma(alpha(jm+l+1)+1)
//
// The coefficient table is built once for arguments up to |z| <= z_max and is
// read-only afterwards. When the series cancels too much for double precision
// an MPFR copy of the coefficients is kept as well.
class KilbasSaigoSeries {
 public:
  KilbasSaigoSeries(const KilbasSaigoParams& p, double z_max, const SeriesControl& ctl = {})
      : p_(p), z_max_(std::abs(z_max)), ctl_(ctl) {
    p.validate();
    ctl.validate();
    if (!std::isfinite(z_max_)) throw DomainError("kilbas_saigo: non-finite argument");
    build_double();
    const double lp = log_peak(z_max_);
    log2_peak_ = lp / std::numbers::ln2;
    const bool force = z_max_ > ctl_.extended_precision_threshold;
    if (force || !ctl_.double_is_enough(std::exp(lp))) build_extended();
  }

  const KilbasSaigoParams& params() const { return p_; }
  double z_max() const { return z_max_; }
  int size() const { return static_cast<int>(coef_.size()); }
  bool has_extended() const { return !big_.empty(); }
  bool terminates() const { return terminates_; }
  long precision_bits() const { return bits_; }

  // c_k, with c_0 = 1
  double coefficient(int k) const {
    if (k < 0) throw DomainError("kilbas_saigo: negative coefficient index");
    if (k >= size()) return 0.0;
    return coef_[k];
  }
  double log_abs_coefficient(int k) const { return k < size() ? logc_[k] : -kInf; }
  // the j-th factor Gamma(a_j)/Gamma(a_j + alpha)
  double ratio(int j) const { return gamma_ratio(p_.numerator_arg(j), p_.numerator_arg(j) + p_.alpha); }

  // natural log of the largest |c_k z^k|
  double log_peak(double r) const {
    const double lr = r > 0.0 ? std::log(r) : -kInf;
    double best = 0.0;  // c_0 = 1
    for (int k = 1; k < size(); ++k) best = std::max(best, logc_[k] + k * lr);
    return best;
  }

  SeriesValue evaluate(double z) const {
    check_range(std::abs(z));
    if (z == 0.0) return {1.0, 0.0, 1, false};
    const bool same_sign = z > 0.0 ? positive_ : false;
    const double peak = std::exp(log_peak(std::abs(z)));
    const bool force = std::abs(z) > ctl_.extended_precision_threshold;
    if (!force && (same_sign || ctl_.double_is_enough(peak))) return sum_double(z);
    require_extended();
    return sum_extended(z);
  }

  std::complex<double> evaluate(std::complex<double> z, double* abs_error = nullptr) const {
    check_range(std::abs(z));
    const double peak = std::exp(log_peak(std::abs(z)));
    const bool force = std::abs(z) > ctl_.extended_precision_threshold;
    if (!force && ctl_.double_is_enough(peak)) {
      double err = 0.0;
      const auto v = sum_double_complex(z, &err);
      if (abs_error) *abs_error = err;
      return v;
    }
    require_extended();
    return sum_extended_complex(z, abs_error);
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  void check_range(double r) const {
    if (r > z_max_ * (1.0 + 1e-12))
      throw DomainError("kilbas_saigo: argument outside the range of the precomputed table");
  }

  void require_extended() const {
    if (big_.empty())
      throw ConvergenceError("kilbas_saigo: extended precision table unavailable for this argument");
  }

  void check_pole(int j) const {
    const double a = p_.numerator_arg(j);
    if (a <= 0.0 && std::abs(a - std::round(a)) <= 1e-12 * std::max(1.0, std::abs(a)))
      throw PoleError("kilbas_saigo: alpha(jm+l) hits a negative integer");
  }

  void build_double() {
    coef_.assign(1, 1.0);
    logc_.assign(1, 0.0);
    const double lr = z_max_ > 0.0 ? std::log(z_max_) : -kInf;
    const double cut = std::log(ctl_.abs_tol) - 6.0;
    double c = 1.0, lc = 0.0;
    int sign = 1;
    int small = 0;
    double best = 0.0;
    if (p_.m == 0.0) {
      check_pole(0);
      const double r = ratio(0);
      if (std::abs(r) * z_max_ >= 1.0)
        throw DomainError("kilbas_saigo: argument outside the radius of convergence (m = 0)");
    }
    for (int j = 0; j + 1 < ctl_.max_terms; ++j) {
      check_pole(j);
      const double a = p_.numerator_arg(j), b = a + p_.alpha;
      if (is_nonpositive_integer(b)) {
        terminates_ = true;
        break;
      }
      int sa = 1, sb = 1;
      double lratio;
      if (a >= 20.0 && b >= 20.0) {
        lratio = log_gamma_ratio_large(a, b);
      } else {
        lratio = log_abs_gamma(a, &sa) - log_abs_gamma(b, &sb);
      }
      const int rs = sa * sb;
      if (rs < 0) positive_ = false;
      sign *= rs;
      lc += lratio;
      if (std::abs(c) > 1e-280 && std::abs(c) < 1e280) c *= ratio(j);
      else c = sign * std::exp(lc);
      coef_.push_back(c);
      logc_.push_back(lc);
      const int k = j + 1;
      const double lt = lc + k * lr;
      best = std::max(best, lt);
      if (lt < cut && lt < best - 6.0) {
        if (++small >= 4) break;
      } else {
        small = 0;
      }
      if (j + 2 >= ctl_.max_terms)
        throw ConvergenceError("kilbas_saigo: max_terms reached while tabulating coefficients");
    }
  }

  void build_extended() {
    using fracdiff::detail::BigFloat;
    bits_ = ctl_.bits_for(log2_peak_);
    if (bits_ > ctl_.max_bits) throw ConvergenceError("kilbas_saigo: required precision exceeds max_bits");
    const int n = size();
    big_.reserve(n);
    big_.emplace_back(1.0, bits_);
    BigFloat al(p_.alpha, bits_), a(bits_), b(bits_), ga(bits_), gb(bits_), c(1.0, bits_);
    for (int j = 0; j + 1 < n; ++j) {
      // a = alpha (j m + l) + 1 from the exact binary parameters
      a.set(p_.m);
      a *= static_cast<double>(j);
      a += p_.l;
      a *= al;
      a += 1.0;
      b.set(a);
      b += al;
      fracdiff::detail::big_gamma(ga, a);
      fracdiff::detail::big_gamma(gb, b);
      c *= ga;
      c /= gb;
      big_.push_back(c);
    }
  }

  SeriesValue sum_double(double z) const {
    KahanSum<double> acc;
    StoppingRule stop(ctl_);
    const double lz = std::log(std::abs(z));
    double zk = 1.0;
    int k = 0;
    for (; k < size(); ++k) {
      double term;
      if (k > 0) zk *= z;
      if (std::isfinite(zk) && std::abs(zk) > 1e-280 && coef_[k] != 0.0 && std::abs(coef_[k]) > 1e-280) {
        term = coef_[k] * zk;
      } else if (coef_[k] == 0.0) {
        term = 0.0;
      } else {
        const double s = (coef_[k] < 0.0 ? -1.0 : 1.0) * ((z < 0.0 && (k & 1)) ? -1.0 : 1.0);
        term = s * std::exp(logc_[k] + k * lz);
      }
      acc.add(term);
      if (stop.update(std::abs(term), std::abs(acc.sum()))) {
        ++k;
        break;
      }
    }
    return {acc.sum(), stop.tail() + 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_sum(), k, false};
  }

  std::complex<double> sum_double_complex(std::complex<double> z, double* err) const {
    KahanSum<double> re, im;
    StoppingRule stop(ctl_);
    std::complex<double> zk = 1.0;
    double absum = 0.0;
    for (int k = 0; k < size(); ++k) {
      if (k > 0) zk *= z;
      const std::complex<double> term = coef_[k] * zk;
      re.add(term.real());
      im.add(term.imag());
      absum += std::abs(term);
      if (stop.update(std::abs(term), std::abs(std::complex<double>(re.sum(), im.sum())))) break;
    }
    if (err) *err = stop.tail() + 4.0 * std::numeric_limits<double>::epsilon() * absum;
    return {re.sum(), im.sum()};
  }

  SeriesValue sum_extended(double z) const {
    using fracdiff::detail::BigFloat;
    BigFloat sum(bits_), zk(1.0, bits_), zz(z, bits_), term(bits_);
    StoppingRule stop(ctl_);
    int k = 0;
    for (; k < size(); ++k) {
      if (k > 0) zk *= zz;
      term.set(big_[k]);
      term *= zk;
      sum += term;
      if (stop.update(std::abs(term.to_double()), std::abs(sum.to_double()))) {
        ++k;
        break;
      }
    }
    const double round = std::ldexp(std::exp2(log2_peak_), -static_cast<int>(bits_) + 8) * k;
    return {sum.to_double(), stop.tail() + round, k, true};
  }

  std::complex<double> sum_extended_complex(std::complex<double> z, double* err) const {
    using fracdiff::detail::BigFloat;
    BigFloat sre(bits_), sim(bits_), zr(1.0, bits_), zi(bits_), ar(z.real(), bits_), ai(z.imag(), bits_);
    BigFloat t1(bits_), t2(bits_), nr(bits_), ni(bits_);
    StoppingRule stop(ctl_);
    int k = 0;
    for (; k < size(); ++k) {
      if (k > 0) {
        // (zr + i zi)(ar + i ai)
        nr.set(zr); nr *= ar; t1.set(zi); t1 *= ai; nr -= t1;
        ni.set(zr); ni *= ai; t2.set(zi); t2 *= ar; ni += t2;
        zr.set(nr);
        zi.set(ni);
      }
      t1.set(big_[k]); t1 *= zr;
      t2.set(big_[k]); t2 *= zi;
      sre += t1;
      sim += t2;
      const double mag = std::hypot(t1.to_double(), t2.to_double());
      if (stop.update(mag, std::hypot(sre.to_double(), sim.to_double()))) {
        ++k;
        break;
      }
    }
    if (err) *err = stop.tail() + std::ldexp(std::exp2(log2_peak_), -static_cast<int>(bits_) + 8) * k;
    return {sre.to_double(), sim.to_double()};
  }

  KilbasSaigoParams p_;
  double z_max_;
  SeriesControl ctl_;
  std::vector<double> coef_;
  std::vector<double> logc_;
  std::vector<fracdiff::detail::BigFloat> big_;
  bool positive_ = true;
  bool terminates_ = false;
  double log2_peak_ = 0.0;
  long bits_ = 0;
};

inline SeriesValue kilbas_saigo_series(const KilbasSaigoParams& p, double z, const SeriesControl& ctl = {}) {
  return KilbasSaigoSeries(p, std::abs(z), ctl).evaluate(z);
}

inline double kilbas_saigo(const KilbasSaigoParams& p, double z, const SeriesControl& ctl = {}) {
  return kilbas_saigo_series(p, z, ctl).value;
}

// Stationary case nu = 1 - 2H: E_{nu,0,-1}(-H beta^2) in closed form
inline double ks_stationary_closed_form(double nu, double hurst, double beta) {
  if (!(hurst > 0.0 && hurst < 0.5)) throw DomainError("ks_stationary_closed_form: H must lie in (0, 1/2)");
  if (std::abs(nu - (1.0 - 2.0 * hurst)) > 1e-12)
    throw DomainError("ks_stationary_closed_form: requires nu = 1 - 2H");
  const double q = hurst * beta * beta * gamma_fn(1.0 - nu);
  if (q >= 1.0) throw DomainError("ks_stationary_closed_form: H beta^2 Gamma(1-nu) must be < 1");
  return 1.0 / (1.0 + q);
}

}  // namespace fracdiff::specfun
