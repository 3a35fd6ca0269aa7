#pragma once

#include <stdexcept>
#include <string>

#include "chordal/rational.hpp"

namespace chordal {

/// Complex number with exact rational real and imaginary parts. Closed
/// under the four field operations, which makes identities on the unit
/// circle decidable by exact computation.
struct GaussianRational {
  ExactRational re;
  ExactRational im;

  GaussianRational() = default;
  GaussianRational(ExactRational r, ExactRational i)
      : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(long r) : re(r), im(0) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }

  /// |z|^2, exactly.
  ExactRational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    if (o.is_zero())
      throw std::domain_error("GaussianRational: division by zero");
    ExactRational n = o.norm();
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const GaussianRational& o) const {
    return re == o.re && im == o.im;
  }

  std::string to_string() const {
    return re.to_string() + (im.sign() < 0 ? " - " : " + ") +
           im.abs().to_string() + "i";
  }
};

/// Exact rational point on the unit circle: m -> ((1-m^2) + 2m*i)/(1+m^2).
/// The result has |z| = 1 exactly for every rational m.
inline GaussianRational rational_circle_point(const ExactRational& m) {
  ExactRational m2 = m * m;
  ExactRational d = ExactRational(1) + m2;
  return {(ExactRational(1) - m2) / d, (ExactRational(2) * m) / d};
}

}  // namespace chordal
