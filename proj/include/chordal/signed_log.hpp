#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "chordal/bigfloat.hpp"

namespace chordal {

/// A signed scalar stored as sign * exp(log_magnitude). Products of many
/// factors accumulate as log sums, so they neither underflow nor overflow.
/// Zero is an explicit sign-0 state; log_magnitude is meaningless there.
struct SignedLogValue {
  int sign = 0;  // -1, 0, +1
  BigFloat log_magnitude;

  explicit SignedLogValue(int prec = 53) : log_magnitude(prec) {}
  SignedLogValue(int s, BigFloat lm) : sign(s), log_magnitude(std::move(lm)) {}

  static SignedLogValue zero(int prec) { return SignedLogValue(prec); }
  static SignedLogValue from_value(const BigFloat& x) {
    if (x.is_zero()) return zero(x.precision());
    return {x.sign(), x.abs().log()};
  }

  bool is_zero() const { return sign == 0; }

  SignedLogValue operator*(const SignedLogValue& o) const {
    if (sign == 0 || o.sign == 0)
      return zero(std::max(log_magnitude.precision(),
                           o.log_magnitude.precision()));
    return {sign * o.sign, log_magnitude + o.log_magnitude};
  }
  SignedLogValue& operator*=(const SignedLogValue& o) {
    return *this = *this * o;
  }

  SignedLogValue reciprocal() const {
    if (sign == 0)
      throw std::domain_error("SignedLogValue: reciprocal of zero");
    return {sign, -log_magnitude};
  }

  /// sign * exp(log_magnitude) at the value's own precision.
  BigFloat value() const {
    if (sign == 0) return BigFloat(log_magnitude.precision());
    BigFloat m = log_magnitude.exp();
    return sign < 0 ? -m : m;
  }
};

/// Product of a factor list in log space. Any zero factor collapses the
/// result to the explicit zero state.
inline SignedLogValue signed_log_product(std::span<const BigFloat> factors) {
  if (factors.empty())
    throw std::invalid_argument("signed_log_product: empty factor list");
  int prec = 0;
  for (const BigFloat& f : factors) {
    if (!f.is_finite())
      throw std::invalid_argument("signed_log_product: non-finite factor");
    prec = std::max(prec, f.precision());
  }
  int sign = 1;
  BigFloat logsum(prec);
  for (const BigFloat& f : factors) {
    if (f.is_zero()) return SignedLogValue::zero(prec);
    sign *= f.sign();
    logsum += f.abs().log();
  }
  return {sign, logsum};
}

inline SignedLogValue signed_log_product(const std::vector<BigFloat>& factors) {
  return signed_log_product(std::span<const BigFloat>(factors));
}

}  // namespace chordal
