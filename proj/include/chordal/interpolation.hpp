#pragma once

#include <cstddef>
#include <vector>

#include "chordal/bigfloat.hpp"
#include "chordal/complex.hpp"
#include "chordal/errors.hpp"
#include "chordal/gaussian.hpp"
#include "chordal/rational.hpp"

namespace chordal {

/// Zero/one constants "like" an existing value. BigFloat-family scalars
/// carry a precision, so constants must be minted at a matching one.
template <typename S>
struct scalar_traits {
  static S zero(const S&) { return S(0); }
  static S one(const S&) { return S(1); }
};

template <>
struct scalar_traits<BigFloat> {
  static BigFloat zero(const BigFloat& like) { return BigFloat(like.precision()); }
  static BigFloat one(const BigFloat& like) {
    return BigFloat::from_long(1, like.precision());
  }
};

template <>
struct scalar_traits<ComplexBigFloat> {
  static ComplexBigFloat zero(const ComplexBigFloat& like) {
    return ComplexBigFloat(like.re.precision());
  }
  static ComplexBigFloat one(const ComplexBigFloat& like) {
    return ComplexBigFloat::one(like.re.precision());
  }
};

template <typename S>
S pow_scalar(const S& base, unsigned long e) {
  S result = scalar_traits<S>::one(base);
  S b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

namespace detail {

template <typename S>
void require_distinct(const std::vector<S>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j])
        throw DuplicateNode("nodes " + std::to_string(i) + " and " +
                            std::to_string(j) + " coincide");
}

}  // namespace detail

/// N pairwise-distinct nodes with the sampled values of some polynomial of
/// degree <= N-1.
template <typename S>
struct InterpolationProblem {
  std::vector<S> nodes;
  std::vector<S> values;

  static InterpolationProblem make(std::vector<S> nodes, std::vector<S> values) {
    if (nodes.empty() || nodes.size() != values.size())
      throw std::invalid_argument(
          "InterpolationProblem: need equal, nonempty node/value lists");
    detail::require_distinct(nodes);
    return InterpolationProblem{std::move(nodes), std::move(values)};
  }
};

/// Evaluates the interpolating polynomial at z:
///   sum_i [ prod_{k != i} (z - z_k)/(z_i - z_k) ] * P(z_i).
/// Exact over exact scalars; reproduces P(z_i) at every node.
template <typename S>
S lagrange_interpolate(const InterpolationProblem<S>& problem, const S& z) {
  const std::size_t n = problem.nodes.size();
  S acc = scalar_traits<S>::zero(z);
  for (std::size_t i = 0; i < n; ++i) {
    S w = problem.values[i];
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      w = w * ((z - problem.nodes[k]) / (problem.nodes[i] - problem.nodes[k]));
    }
    acc = acc + w;
  }
  return acc;
}

/// The coefficient-of-z^(N-1) identity behind the chord relations:
///   sum_i z_i^r / prod_{j != i} (z_i - z_j)
/// vanishes for 0 <= r <= N-2, equals 1 at r = N-1, and for r >= N gives
/// the complete homogeneous symmetric polynomial h_{r-N+1} of the nodes
/// (exercised by tests, not part of the contract).
template <typename S>
S power_sum_identity(const std::vector<S>& nodes, unsigned long r) {
  if (nodes.empty())
    throw std::invalid_argument("power_sum_identity: empty node list");
  detail::require_distinct(nodes);
  const std::size_t n = nodes.size();
  S acc = scalar_traits<S>::zero(nodes.front());
  for (std::size_t i = 0; i < n; ++i) {
    S term = pow_scalar(nodes[i], r);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      term = term / (nodes[i] - nodes[j]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace chordal
