#pragma once

// Minimal owning wrapper around mpfr_t. Every value carries its own
// precision; nothing touches MPFR's global default precision, so
// concurrent use from several threads is fine.

#include <mpfr.h>

#include <utility>

namespace fracdiff::detail {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // base-2 exponent, e such that |v| in [2^(e-1), 2^e)
  long exponent() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(double x) { mpfr_mul_d(v_, v_, x, MPFR_RNDN); return *this; }
  BigFloat& operator+=(double x) { mpfr_add_d(v_, v_, x, MPFR_RNDN); return *this; }
  BigFloat& operator/=(double x) { mpfr_div_d(v_, v_, x, MPFR_RNDN); return *this; }

  void set(double x) { mpfr_set_d(v_, x, MPFR_RNDN); }
  void set(const BigFloat& o) { mpfr_set(v_, o.v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

inline BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
inline BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
inline BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
inline BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

// Gamma(x) at the precision of `out`.
inline void big_gamma(BigFloat& out, const BigFloat& x) { mpfr_gamma(out.get(), x.get(), MPFR_RNDN); }
inline void big_pow_ui(BigFloat& out, const BigFloat& x, unsigned long n) {
  mpfr_pow_ui(out.get(), x.get(), n, MPFR_RNDN);
}
inline BigFloat big_pi(mpfr_prec_t bits) {
  BigFloat p(bits);
  mpfr_const_pi(p.get(), MPFR_RNDN);
  return p;
}

// True when x is a non-positive integer.
inline bool big_is_nonpositive_integer(const BigFloat& x) {
  return mpfr_integer_p(x.get()) && mpfr_sgn(x.get()) <= 0;
}

}  // namespace fracdiff::detail
