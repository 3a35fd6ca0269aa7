#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "chordal/rational.hpp"

namespace chordal {

/// Arbitrary-precision binary float. Every value carries its own precision,
/// fixed at construction; each operation is correctly rounded at the
/// precision of its result (the max of the operand precisions unless stated
/// otherwise). Plain operators round to nearest.
class BigFloat {
 public:
  explicit BigFloat(int precision_bits = 53) {
    check_precision(precision_bits);
    mpfr_init2(v_, precision_bits);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
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

  static BigFloat from_long(long n, int prec) {
    BigFloat x(prec);
    mpfr_set_si(x.v_, n, MPFR_RNDN);
    return x;
  }
  static BigFloat from_double(double d, int prec) {
    BigFloat x(prec);
    mpfr_set_d(x.v_, d, MPFR_RNDN);
    return x;
  }
  static BigFloat from_rational(const ExactRational& q, int prec,
                                mpfr_rnd_t rnd = MPFR_RNDN) {
    BigFloat x(prec);
    mpfr_set_q(x.v_, q.raw().get_mpq_t(), rnd);
    return x;
  }
  static BigFloat from_string(std::string_view s, int prec,
                              mpfr_rnd_t rnd = MPFR_RNDN) {
    BigFloat x(prec);
    std::string t(s);
    if (mpfr_set_str(x.v_, t.c_str(), 10, rnd) != 0)
      throw std::invalid_argument("bad float literal: " + t);
    return x;
  }
  static BigFloat pi(int prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    BigFloat x(prec);
    mpfr_const_pi(x.v_, rnd);
    return x;
  }
  /// 2^k, exact.
  static BigFloat pow2(long k, int prec) {
    BigFloat x(prec);
    mpfr_set_ui_2exp(x.v_, 1, k, MPFR_RNDN);
    return x;
  }

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return is_zero() ? 0 : mpfr_sgn(v_); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  BigFloat operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, rnd);
    return r;
  }
  friend BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, rnd);
    return r;
  }
  friend BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, rnd);
    return r;
  }
  friend BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, rnd);
    return r;
  }

  BigFloat operator+(const BigFloat& o) const { return add(*this, o, MPFR_RNDN); }
  BigFloat operator-(const BigFloat& o) const { return sub(*this, o, MPFR_RNDN); }
  BigFloat operator*(const BigFloat& o) const { return mul(*this, o, MPFR_RNDN); }
  BigFloat operator/(const BigFloat& o) const { return div(*this, o, MPFR_RNDN); }
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  BigFloat sin(mpfr_rnd_t rnd = MPFR_RNDN) const { return map1(mpfr_sin, rnd); }
  BigFloat cos(mpfr_rnd_t rnd = MPFR_RNDN) const { return map1(mpfr_cos, rnd); }
  BigFloat log(mpfr_rnd_t rnd = MPFR_RNDN) const { return map1(mpfr_log, rnd); }
  BigFloat exp(mpfr_rnd_t rnd = MPFR_RNDN) const { return map1(mpfr_exp, rnd); }
  BigFloat sqrt(mpfr_rnd_t rnd = MPFR_RNDN) const { return map1(mpfr_sqrt, rnd); }
  BigFloat floor() const { return map1(mpfr_rint_floor, MPFR_RNDN); }

  BigFloat mul_2exp(long k) const {
    BigFloat r(precision());
    mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
    return r;
  }

  /// Same value re-rounded at a different precision.
  BigFloat round_to(int prec, mpfr_rnd_t rnd = MPFR_RNDN) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, rnd);
    return r;
  }

  int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator==(const BigFloat& o) const { return mpfr_equal_p(v_, o.v_) != 0; }
  bool operator<(const BigFloat& o) const { return mpfr_less_p(v_, o.v_) != 0; }
  bool operator<=(const BigFloat& o) const { return mpfr_lessequal_p(v_, o.v_) != 0; }
  bool operator>(const BigFloat& o) const { return mpfr_greater_p(v_, o.v_) != 0; }
  bool operator>=(const BigFloat& o) const { return mpfr_greaterequal_p(v_, o.v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const {
    BigFloat f = floor();
    if (!f.is_finite() || mpfr_fits_slong_p(f.v_, MPFR_RNDN) == 0)
      throw std::range_error("BigFloat: floor out of long range");
    return mpfr_get_si(f.v_, MPFR_RNDN);
  }

  /// log2(|x|) as a double; -inf for zero. Used only for convergence-slope
  /// diagnostics, never for value computation.
  double log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double d = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(d)) + static_cast<double>(e);
  }

  /// Scientific decimal with a full mantissa: enough digits that parsing
  /// the string back at the same precision recovers the value exactly.
  std::string to_sci_string() const {
    if (is_nan()) return "nan";
    int digits =
        static_cast<int>(std::ceil(precision() * 0.3010299956639812)) + 1;
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Re", digits, v_);
    std::string s(out ? out : "0");
    mpfr_free_str(out);
    return s;
  }

 private:
  static void check_precision(int bits) {
    if (bits < 24 || bits > (1 << 26))
      throw std::invalid_argument("BigFloat: precision below 24 bits or absurd");
  }
  static int join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
  }
  template <typename F>
  BigFloat map1(F f, mpfr_rnd_t rnd) const {
    BigFloat r(precision());
    f(r.v_, v_, rnd);
    return r;
  }

  mpfr_t v_;
};

inline BigFloat max(const BigFloat& a, const BigFloat& b) {
  return a >= b ? a : b;
}
inline BigFloat min(const BigFloat& a, const BigFloat& b) {
  return a <= b ? a : b;
}

}  // namespace chordal
