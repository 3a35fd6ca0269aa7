#pragma once

#include "chordal/bigfloat.hpp"

namespace chordal {

/// Complex number over BigFloat, rounded to nearest componentwise.
struct ComplexBigFloat {
  BigFloat re;
  BigFloat im;

  explicit ComplexBigFloat(int prec = 53) : re(prec), im(prec) {}
  ComplexBigFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexBigFloat one(int prec) {
    return {BigFloat::from_long(1, prec), BigFloat(prec)};
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ComplexBigFloat operator-() const { return {-re, -im}; }
  ComplexBigFloat operator+(const ComplexBigFloat& o) const {
    return {re + o.re, im + o.im};
  }
  ComplexBigFloat operator-(const ComplexBigFloat& o) const {
    return {re - o.re, im - o.im};
  }
  ComplexBigFloat operator*(const ComplexBigFloat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexBigFloat operator/(const ComplexBigFloat& o) const {
    BigFloat n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  ComplexBigFloat& operator+=(const ComplexBigFloat& o) {
    return *this = *this + o;
  }
  ComplexBigFloat& operator*=(const ComplexBigFloat& o) {
    return *this = *this * o;
  }

  bool operator==(const ComplexBigFloat& o) const {
    return re == o.re && im == o.im;
  }

  /// |z|^2.
  BigFloat norm() const { return re * re + im * im; }
  BigFloat magnitude() const { return norm().sqrt(); }
};

inline BigFloat magnitude(const ComplexBigFloat& z) { return z.magnitude(); }

}  // namespace chordal
