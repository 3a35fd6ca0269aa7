#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordal/circle.hpp"
#include "chordal/context.hpp"
#include "chordal/errors.hpp"
#include "chordal/gaussian.hpp"
#include "chordal/interpolation.hpp"

namespace chordal {

namespace detail {

/// Reciprocals 1/R_i, each exponentiated once from log space.
inline std::vector<BigFloat> reciprocal_products(const ChordProducts& cp) {
  std::vector<BigFloat> inv;
  inv.reserve(cp.count());
  for (const auto& r : cp.products) {
    if (r.sign <= 0)
      throw DegenerateConfiguration("chord product is not positive");
    inv.push_back(r.reciprocal().value());
  }
  return inv;
}

/// Odd-position sum minus even-position sum (1-based) of the reciprocals.
inline BigFloat alternating_reciprocal_sum(const std::vector<BigFloat>& inv,
                                           int prec) {
  BigFloat acc(prec);
  for (std::size_t k = 0; k < inv.size(); ++k)
    acc += (k % 2 == 0) ? inv[k] : -inv[k];
  return acc;
}

inline BigFloat reciprocal_scale(const std::vector<BigFloat>& inv, int prec) {
  BigFloat acc(prec);
  for (const auto& x : inv) acc += x;
  return acc;
}

}  // namespace detail

/// McDougall residual for an even, circularly sorted configuration:
///   sum_{i odd} 1/R_i - sum_{i even} 1/R_i   (1-based positions).
/// Zero (up to rounding) exactly when the chord-product identity holds.
inline BigFloat mcdougall_residual(const ChordProducts& products) {
  if (products.count() < 2 || products.count() % 2 != 0)
    throw OddCount("mcdougall_residual: requires an even count >= 2 "
                   "(odd counts go through odd_circle_control)");
  auto inv = detail::reciprocal_products(products);
  return detail::alternating_reciprocal_sum(inv, products.precision_bits);
}

/// Sum of all 1/R_i: the natural scale against which the alternating sum
/// is judged.
inline BigFloat reciprocal_sum_scale(const ChordProducts& products) {
  auto inv = detail::reciprocal_products(products);
  return detail::reciprocal_scale(inv, products.precision_bits);
}

/// Negative control: the same alternating sum on an odd-count circle
/// configuration, where it is generically nonzero. Named separately so a
/// violated case can never masquerade as a verified identity.
inline BigFloat odd_circle_control(const CircleConfig& config, int prec) {
  if (config.count() < 3 || config.count() % 2 == 0)
    throw std::invalid_argument(
        "odd_circle_control: requires an odd count >= 3");
  auto inv = detail::reciprocal_products(chord_products(config, prec));
  return detail::alternating_reciprocal_sum(inv, prec);
}

/// Both sides of the two-route consistency identity for even counts:
///   lhs = i^(2n-1) * sum_i (-1)^i / R_i          (chord route)
///   rhs = (prod_j u_j) * sum_i u_i^(2n-2) / prod_{j != i} (u_j^2 - u_i^2)
/// For a valid configuration both are ~0 'and' they agree to rounding.
/// max_term records the largest term magnitude seen on either route, the
/// right scale for judging |lhs - rhs|.
struct JaneSides {
  ComplexBigFloat lhs;
  ComplexBigFloat rhs;
  BigFloat max_term;
};

inline JaneSides jane_sides(const CircleConfig& config, int prec) {
  const std::size_t n2 = config.count();
  if (n2 < 2 || n2 % 2 != 0)
    throw OddCount("jane_sides: requires an even count >= 2");

  // Chord route.
  auto inv = detail::reciprocal_products(chord_products(config, prec));
  BigFloat s(prec);
  BigFloat max_term(prec);
  for (std::size_t k = 0; k < inv.size(); ++k) {
    s += (k % 2 == 0) ? -inv[k] : inv[k];  // (-1)^i, i = k+1
    max_term = max(max_term, inv[k]);
  }
  // i^(2n-1) is +/- i; the lhs is purely imaginary.
  ComplexBigFloat lhs(prec);
  lhs.im = ((n2 - 1) % 4 == 1) ? s : -s;

  // Unit-parameter route.
  UnitParameters up = unit_parameters(config, prec);
  std::vector<ComplexBigFloat> z;
  z.reserve(n2);
  for (const auto& u : up.values) z.push_back(u * u);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = i + 1; j < n2; ++j)
      if (z[i] == z[j])
        throw DegenerateConfiguration("jane_sides: coincident squared "
                                      "unit parameters");

  ComplexBigFloat big_u = ComplexBigFloat::one(prec);
  for (const auto& u : up.values) big_u *= u;

  ComplexBigFloat sum(prec);
  for (std::size_t i = 0; i < n2; ++i) {
    ComplexBigFloat term = pow_scalar(up.values[i], n2 - 2);
    for (std::size_t j = 0; j < n2; ++j) {
      if (j == i) continue;
      term = term / (z[j] - z[i]);
    }
    sum += term;
    max_term = max(max_term, term.magnitude());
  }

  return {lhs, big_u * sum, max_term};
}

/// Exact evaluation of the unit-parameter route over Gaussian rationals,
/// with z_i = u_i^2 supplied directly (u_i itself never needs to exist):
///   sum_{i=1}^{2n} z_i^(n-1) / prod_{j != i} (z_j - z_i).
/// Must be exactly zero; the nonzero prod_j u_j prefactor is irrelevant to
/// vanishing and is omitted.
inline GaussianRational exact_jane_rhs(const std::vector<GaussianRational>& z,
                                       unsigned long n) {
  if (n < 1 || z.size() != 2 * n)
    throw std::invalid_argument("exact_jane_rhs: need exactly 2n values");
  detail::require_distinct(z);
  GaussianRational acc;
  for (std::size_t i = 0; i < z.size(); ++i) {
    GaussianRational term = pow_scalar(z[i], n - 1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      term = term / (z[j] - z[i]);
    }
    acc += term;
  }
  return acc;
}

/// Alternating reciprocal sum for points on a line, any count >= 2:
///   R_i = prod_{j != i} |x_j - x_i|,  result = sum_i (-1)^(i+1) / R_i.
/// Exactly zero over exact scalars, for even and odd counts alike.
template <typename S>
S collinear_residual_generic(const std::vector<S>& xs) {
  const std::size_t n = xs.size();
  S acc = scalar_traits<S>::zero(xs.front());
  const S one = scalar_traits<S>::one(xs.front());
  for (std::size_t i = 0; i < n; ++i) {
    S r = one;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // positions are sorted, so the absolute gap has a known orientation
      r = r * (j > i ? xs[j] - xs[i] : xs[i] - xs[j]);
    }
    S term = one / r;
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline ExactRational collinear_residual(const CollinearConfig& config) {
  return collinear_residual_generic(config.positions);
}

inline BigFloat collinear_residual_float(const CollinearConfig& config,
                                         int prec) {
  std::vector<BigFloat> xs;
  xs.reserve(config.count());
  for (const auto& q : config.positions)
    xs.push_back(BigFloat::from_rational(q, prec));
  return collinear_residual_generic(xs);
}

/// Exact circle configuration: rational m-parameters mapping to exact
/// rational points z = ((1-m^2) + 2mi)/(1+m^2) on the unit circle.
struct PythagoreanCircle {
  std::vector<ExactRational> m_params;

  std::size_t count() const { return m_params.size(); }

  static PythagoreanCircle from_params(std::vector<ExactRational> ms) {
    if (ms.size() < 2)
      throw std::invalid_argument("PythagoreanCircle: need at least 2 params");
    detail::require_distinct(ms);
    std::sort(ms.begin(), ms.end());
    return PythagoreanCircle{std::move(ms)};
  }

  std::vector<GaussianRational> circle_points() const {
    std::vector<GaussianRational> z;
    z.reserve(m_params.size());
    for (const auto& m : m_params) z.push_back(rational_circle_point(m));
    return z;
  }
};

}  // namespace chordal
