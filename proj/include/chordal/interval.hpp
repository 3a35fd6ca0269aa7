#pragma once

#include <stdexcept>

#include "chordal/bigfloat.hpp"

namespace chordal {

/// Closed interval [lo, hi] with outward rounding: every operation rounds
/// the lower endpoint down and the upper endpoint up, so the exact result
/// of the underlying real operation is always enclosed.
struct IntervalValue {
  BigFloat lo;
  BigFloat hi;

  explicit IntervalValue(int prec = 53) : lo(prec), hi(prec) {}
  IntervalValue(BigFloat l, BigFloat h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo <= hi)) throw std::invalid_argument("IntervalValue: lo > hi");
  }

  static IntervalValue point(const BigFloat& x) { return {x, x}; }
  static IntervalValue from_rational(const ExactRational& q, int prec) {
    return {BigFloat::from_rational(q, prec, MPFR_RNDD),
            BigFloat::from_rational(q, prec, MPFR_RNDU)};
  }
  static IntervalValue from_long(long n, int prec) {
    return point(BigFloat::from_long(n, prec));
  }
  static IntervalValue pi(int prec) {
    return {BigFloat::pi(prec, MPFR_RNDD), BigFloat::pi(prec, MPFR_RNDU)};
  }

  int precision() const { return std::max(lo.precision(), hi.precision()); }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool contains(const BigFloat& x) const { return lo <= x && x <= hi; }
  bool is_exact_zero() const { return lo.is_zero() && hi.is_zero(); }

  BigFloat width() const { return sub(hi, lo, MPFR_RNDU); }
  /// Upper bound on |x| over the interval.
  BigFloat mag() const { return chordal::max(lo.abs(), hi.abs()); }
  BigFloat midpoint() const {
    return mul(lo + hi, BigFloat::from_double(0.5, precision()), MPFR_RNDN);
  }

  IntervalValue operator-() const { return {-hi, -lo}; }
  IntervalValue operator+(const IntervalValue& o) const {
    return {add(lo, o.lo, MPFR_RNDD), add(hi, o.hi, MPFR_RNDU)};
  }
  IntervalValue operator-(const IntervalValue& o) const {
    return {sub(lo, o.hi, MPFR_RNDD), sub(hi, o.lo, MPFR_RNDU)};
  }
  IntervalValue operator*(const IntervalValue& o) const {
    // Min/max over the four endpoint products, each with directed rounding.
    BigFloat d1 = mul(lo, o.lo, MPFR_RNDD), d2 = mul(lo, o.hi, MPFR_RNDD);
    BigFloat d3 = mul(hi, o.lo, MPFR_RNDD), d4 = mul(hi, o.hi, MPFR_RNDD);
    BigFloat u1 = mul(lo, o.lo, MPFR_RNDU), u2 = mul(lo, o.hi, MPFR_RNDU);
    BigFloat u3 = mul(hi, o.lo, MPFR_RNDU), u4 = mul(hi, o.hi, MPFR_RNDU);
    return {chordal::min(chordal::min(d1, d2), chordal::min(d3, d4)),
            chordal::max(chordal::max(u1, u2), chordal::max(u3, u4))};
  }
  IntervalValue operator/(const IntervalValue& o) const {
    if (o.contains_zero())
      throw std::domain_error("IntervalValue: divisor interval contains zero");
    BigFloat d1 = div(lo, o.lo, MPFR_RNDD), d2 = div(lo, o.hi, MPFR_RNDD);
    BigFloat d3 = div(hi, o.lo, MPFR_RNDD), d4 = div(hi, o.hi, MPFR_RNDD);
    BigFloat u1 = div(lo, o.lo, MPFR_RNDU), u2 = div(lo, o.hi, MPFR_RNDU);
    BigFloat u3 = div(hi, o.lo, MPFR_RNDU), u4 = div(hi, o.hi, MPFR_RNDU);
    return {chordal::min(chordal::min(d1, d2), chordal::min(d3, d4)),
            chordal::max(chordal::max(u1, u2), chordal::max(u3, u4))};
  }

  IntervalValue reciprocal() const {
    if (contains_zero())
      throw std::domain_error("IntervalValue: reciprocal of interval with zero");
    // 1/x is monotone decreasing away from zero.
    BigFloat one = BigFloat::from_long(1, precision());
    return {div(one, hi, MPFR_RNDD), div(one, lo, MPFR_RNDU)};
  }

  IntervalValue sqrt() const {
    if (lo.sign() < 0)
      throw std::domain_error("IntervalValue: sqrt of negative interval");
    return {lo.sqrt(MPFR_RNDD), hi.sqrt(MPFR_RNDU)};
  }
};

/// Enclosure of sin over an interval contained in [0, pi] (up to rounding
/// slop at the ends). Handles the maximum at pi/2; monotone elsewhere.
inline IntervalValue interval_sin(const IntervalValue& x) {
  int p = x.precision();
  BigFloat half_pi_lo =
      mul(BigFloat::pi(p, MPFR_RNDD), BigFloat::from_double(0.5, p), MPFR_RNDD);
  BigFloat half_pi_hi =
      mul(BigFloat::pi(p, MPFR_RNDU), BigFloat::from_double(0.5, p), MPFR_RNDU);
  BigFloat s_lo_d = x.lo.sin(MPFR_RNDD), s_hi_d = x.hi.sin(MPFR_RNDD);
  BigFloat s_lo_u = x.lo.sin(MPFR_RNDU), s_hi_u = x.hi.sin(MPFR_RNDU);
  if (x.hi < half_pi_lo) return {s_lo_d, s_hi_u};  // increasing branch
  if (x.lo > half_pi_hi) return {s_hi_d, s_lo_u};  // decreasing branch
  return {chordal::min(s_lo_d, s_hi_d), BigFloat::from_long(1, p)};
}

}  // namespace chordal
