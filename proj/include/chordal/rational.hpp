#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chordal {

/// Exact rational number. Always held in lowest terms with a positive
/// denominator; zero is canonically 0/1. Arithmetic never rounds.
class ExactRational {
 public:
  ExactRational() : q_(0) {}
  ExactRational(long n) : q_(n) {}  // NOLINT: implicit by design
  ExactRational(long n, long d) : q_(n, d) { canonicalize_checked(); }
  explicit ExactRational(const mpz_class& n) : q_(n) {}
  ExactRational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
    canonicalize_checked();
  }
  explicit ExactRational(const mpq_class& q) : q_(q) { canonicalize_checked(); }

  /// Parses "n", "n/d", or a decimal string like "-0.125" or "2.5e-3",
  /// all converted exactly.
  static ExactRational parse(std::string_view text);

  const mpz_class numerator() const { return q_.get_num(); }
  const mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }
  ExactRational operator+(const ExactRational& o) const {
    return wrap(q_ + o.q_);
  }
  ExactRational operator-(const ExactRational& o) const {
    return wrap(q_ - o.q_);
  }
  ExactRational operator*(const ExactRational& o) const {
    return wrap(q_ * o.q_);
  }
  ExactRational operator/(const ExactRational& o) const {
    if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
    return wrap(q_ / o.q_);
  }
  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    *this = *this / o;
    return *this;
  }

  ExactRational reciprocal() const {
    if (is_zero()) throw std::domain_error("ExactRational: reciprocal of zero");
    return wrap(1 / q_);
  }

  ExactRational abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const ExactRational& o) const { return q_ == o.q_; }
  std::strong_ordering operator<=>(const ExactRational& o) const {
    int c = cmp(q_, o.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  /// "n/d" (or just "n" when the denominator is 1).
  std::string to_string() const { return q_.get_str(); }
  std::string numerator_string() const { return q_.get_num().get_str(); }
  std::string denominator_string() const { return q_.get_den().get_str(); }

  double to_double() const { return q_.get_d(); }

 private:
  static ExactRational wrap(mpq_class q) {
    ExactRational r;
    r.q_ = std::move(q);  // gmp arithmetic results are already canonical
    return r;
  }
  void canonicalize_checked() {
    if (sgn(q_.get_den()) == 0)
      throw std::domain_error("ExactRational: zero denominator");
    q_.canonicalize();
  }

  mpq_class q_;
};

inline ExactRational ExactRational::parse(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + s);
    return ExactRational(q);
  }
  // Decimal form: mantissa [.fraction] [e exponent], all exact.
  std::size_t epos = s.find_first_of("eE");
  long exp10 = 0;
  std::string mant = s;
  if (epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    mant = s.substr(0, epos);
  }
  std::size_t dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad decimal literal: " + s);
  mpz_class n;
  if (n.set_str(digits, 10) != 0)
    throw std::invalid_argument("bad decimal literal: " + s);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 < 0) return ExactRational(n, scale);
  return ExactRational(mpz_class(n * scale), mpz_class(1));
}

}  // namespace chordal
