#pragma once

#include <stdexcept>

#include "chordal/bigfloat.hpp"
#include "chordal/interval.hpp"
#include "chordal/rational.hpp"

namespace chordal {

/// Exact, precision-independent description of an angle as
/// plain + pi_coeff * pi (radians). Regular polygons are exact rational
/// multiples of pi; decimal inputs are exact rationals; generated instances
/// may combine both. Numeric values are derived on demand at any precision,
/// which is what lets one configuration be re-evaluated along an
/// escalation schedule.
struct HalfAngle {
  ExactRational plain;
  ExactRational pi_coeff;

  HalfAngle() = default;
  HalfAngle(ExactRational p, ExactRational pc)
      : plain(std::move(p)), pi_coeff(std::move(pc)) {}
  static HalfAngle rational(ExactRational p) { return {std::move(p), 0}; }
  static HalfAngle pi_multiple(ExactRational c) { return {0, std::move(c)}; }

  bool is_plain() const { return pi_coeff.is_zero(); }
  bool identical_to(const HalfAngle& o) const {
    return plain == o.plain && pi_coeff == o.pi_coeff;
  }

  HalfAngle operator-(const HalfAngle& o) const {
    return {plain - o.plain, pi_coeff - o.pi_coeff};
  }
  HalfAngle operator+(const HalfAngle& o) const {
    return {plain + o.plain, pi_coeff + o.pi_coeff};
  }

  /// Rounded-to-nearest value at the given precision (computed with guard
  /// bits, then rounded once).
  BigFloat value_at(int prec) const {
    int pg = prec + 16;
    BigFloat v = BigFloat::from_rational(plain, pg);
    if (!pi_coeff.is_zero())
      v += BigFloat::pi(pg) * BigFloat::from_rational(pi_coeff, pg);
    return v.round_to(prec);
  }

  /// Rigorous enclosure at the given precision.
  IntervalValue enclosure_at(int prec) const {
    IntervalValue v = IntervalValue::from_rational(plain, prec);
    if (!pi_coeff.is_zero())
      v = v + IntervalValue::pi(prec) * IntervalValue::from_rational(pi_coeff, prec);
    return v;
  }

  /// Reduces into [0, pi): subtracts floor(value/pi) from the pi
  /// coefficient. The floor is certified by interval refinement, so the
  /// reduction is exact at the representation level.
  HalfAngle reduced_mod_pi() const {
    long k = floor_div_pi();
    return {plain, pi_coeff - ExactRational(k)};
  }

 private:
  long floor_div_pi() const {
    if (plain.is_zero()) {
      // value/pi = pi_coeff exactly
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), pi_coeff.numerator().get_mpz_t(),
                 pi_coeff.denominator().get_mpz_t());
      if (!q.fits_slong_p())
        throw std::range_error("angle reduction: coefficient out of range");
      return q.get_si();
    }
    // value/pi = plain/pi + pi_coeff; irrational, so some precision decides.
    for (int p = 128; p <= 1 << 14; p *= 2) {
      IntervalValue x = IntervalValue::from_rational(plain, p) /
                        IntervalValue::pi(p);
      x = x + IntervalValue::from_rational(pi_coeff, p);
      long k_lo = x.lo.to_long_floor();
      long k_hi = x.hi.to_long_floor();
      if (k_lo == k_hi) return k_lo;
    }
    throw std::invalid_argument(
        "angle reduction: value indistinguishable from a multiple of pi");
  }
};

}  // namespace chordal
