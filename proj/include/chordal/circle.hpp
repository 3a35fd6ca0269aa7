#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordal/angle.hpp"
#include "chordal/complex.hpp"
#include "chordal/errors.hpp"
#include "chordal/interval.hpp"
#include "chordal/signed_log.hpp"

namespace chordal {

/// Points on a circle of the given radius, parameterized by half-angles:
/// point i is (radius*cos(2*t_i), radius*sin(2*t_i)) with t_i in [0, pi),
/// strictly ascending. Gaps t_j - t_i for i < j therefore lie in (0, pi)
/// and every chord 2*radius*sin(gap) is positive. Index parity (odd/even
/// position in this sorted order) is what the alternating identities use;
/// the pre-normalization labeling survives only in original_index.
struct CircleConfig {
  ExactRational radius;
  std::vector<HalfAngle> half_angles;
  std::vector<std::size_t> original_index;

  std::size_t count() const { return half_angles.size(); }
  bool even_count() const { return count() % 2 == 0; }

  BigFloat radius_at(int prec) const {
    return BigFloat::from_rational(radius, prec);
  }
  std::vector<BigFloat> angles_at(int prec) const {
    std::vector<BigFloat> v;
    v.reserve(count());
    for (const auto& a : half_angles) v.push_back(a.value_at(prec));
    return v;
  }
};

/// Sorted distinct positions on a line; the circle identities have a
/// counterpart here (the unbounded-radius case) that holds for every count.
struct CollinearConfig {
  std::vector<ExactRational> positions;

  std::size_t count() const { return positions.size(); }

  static CollinearConfig from_sorted(std::vector<ExactRational> xs) {
    if (xs.size() < 2)
      throw std::invalid_argument("CollinearConfig: need at least 2 positions");
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (!(xs[i - 1] < xs[i]))
        throw DegenerateConfiguration(
            "CollinearConfig: positions must be strictly increasing (index " +
            std::to_string(i) + ")");
    }
    return CollinearConfig{std::move(xs)};
  }
  static CollinearConfig from_unsorted(std::vector<ExactRational> xs) {
    std::sort(xs.begin(), xs.end());
    return from_sorted(std::move(xs));
  }
};

/// The per-point chord products R_i = prod_{j != i} d_{i,j}, kept in signed
/// log space, plus the conditioning data that governs how many significant
/// bits survive: the smallest chord and the smallest half-angle gap.
struct ChordProducts {
  std::vector<SignedLogValue> products;
  BigFloat min_chord;
  BigFloat min_gap;
  int precision_bits = 0;

  std::size_t count() const { return products.size(); }
};

/// Circular half-angle gaps: adjacent differences plus the wrap-around
/// gap pi - (t_last - t_first). Two points coincide geometrically exactly
/// when one of these vanishes.
inline BigFloat min_half_angle_gap(const CircleConfig& cfg, int prec) {
  const std::size_t n = cfg.count();
  if (n < 2) return BigFloat::pi(prec);
  BigFloat best = BigFloat::pi(prec);
  for (std::size_t i = 1; i < n; ++i) {
    BigFloat g = (cfg.half_angles[i] - cfg.half_angles[i - 1]).value_at(prec);
    best = min(best, g);
  }
  BigFloat span = (cfg.half_angles[n - 1] - cfg.half_angles[0]).value_at(prec);
  best = min(best, BigFloat::pi(prec) - span);
  return best;
}

/// Normalizes a raw angle list into a CircleConfig: reduce mod pi into
/// [0, pi), sort ascending, remember the permutation. Angles closer than
/// 2^(-p/2) (in the circular sense) are treated as coincident.
inline CircleConfig normalize_circle(const std::vector<HalfAngle>& raw,
                                     const ExactRational& radius,
                                     int equality_precision_bits = 64) {
  if (raw.empty())
    throw std::invalid_argument("normalize_circle: empty angle list");
  if (!(radius > ExactRational(0)))
    throw std::invalid_argument("normalize_circle: radius must be positive");
  const int p = equality_precision_bits;

  std::vector<HalfAngle> reduced;
  reduced.reserve(raw.size());
  for (const auto& a : raw) reduced.push_back(a.reduced_mod_pi());

  std::vector<BigFloat> values;
  values.reserve(reduced.size());
  for (const auto& a : reduced) values.push_back(a.value_at(p));

  std::vector<std::size_t> order(reduced.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });

  CircleConfig cfg;
  cfg.radius = radius;
  cfg.half_angles.reserve(reduced.size());
  for (std::size_t idx : order) cfg.half_angles.push_back(reduced[idx]);
  cfg.original_index = order;

  if (cfg.count() >= 2) {
    BigFloat threshold = BigFloat::pow2(-(p / 2), p);
    if (min_half_angle_gap(cfg, p) < threshold)
      throw DegenerateConfiguration(
          "normalize_circle: coincident points (half-angle gap below 2^-" +
          std::to_string(p / 2) + ")");
  }
  return cfg;
}

namespace detail {

inline void check_pair(const CircleConfig& cfg, std::size_t i, std::size_t j) {
  if (i >= cfg.count() || j >= cfg.count())
    throw std::out_of_range("chord index out of range");
  if (i == j) throw SamePoint("chord requires two distinct indices");
}

}  // namespace detail

/// Signed chord 2*radius*sin(t_j - t_i): positive when i precedes j in the
/// sorted order, and antisymmetric under swapping the indices.
inline BigFloat signed_chord(const CircleConfig& cfg, std::size_t i,
                             std::size_t j, int prec) {
  detail::check_pair(cfg, i, j);
  const int pg = prec + 16;
  BigFloat gap = (cfg.half_angles[j] - cfg.half_angles[i]).value_at(pg);
  BigFloat d = BigFloat::from_long(2, pg) * cfg.radius_at(pg) * gap.sin();
  return d.round_to(prec);
}

/// Distance between points i and j: 2*radius*sin(|t_j - t_i|) > 0.
inline BigFloat chord_distance(const CircleConfig& cfg, std::size_t i,
                               std::size_t j, int prec) {
  return signed_chord(cfg, std::min(i, j), std::max(i, j), prec);
}

/// Rigorous enclosure of the (unsigned) chord between i and j.
inline IntervalValue chord_distance_enclosure(const CircleConfig& cfg,
                                              std::size_t i, std::size_t j,
                                              int prec) {
  detail::check_pair(cfg, i, j);
  if (i > j) std::swap(i, j);
  IntervalValue gap = (cfg.half_angles[j] - cfg.half_angles[i]).enclosure_at(prec);
  IntervalValue two_r =
      IntervalValue::from_rational(cfg.radius * ExactRational(2), prec);
  return two_r * interval_sin(gap);
}

/// Unit-modulus parameters u_i = exp(i*t_i) = (cos t_i, sin t_i).
struct UnitParameters {
  std::vector<ComplexBigFloat> values;
  int precision_bits = 0;

  std::size_t count() const { return values.size(); }
};

inline UnitParameters unit_parameters(const CircleConfig& cfg, int prec) {
  UnitParameters up;
  up.precision_bits = prec;
  up.values.reserve(cfg.count());
  const int pg = prec + 16;
  for (const auto& a : cfg.half_angles) {
    BigFloat t = a.value_at(pg);
    up.values.emplace_back(t.cos().round_to(prec), t.sin().round_to(prec));
  }
  return up;
}

/// Chord products R_i = prod_{j != i} d_{i,j}, accumulated in log space.
inline ChordProducts chord_products(const CircleConfig& cfg, int prec) {
  const std::size_t n = cfg.count();
  if (n < 2)
    throw std::invalid_argument("chord_products: need at least 2 points");
  const int pg = prec + 16;

  std::vector<BigFloat> logsum(n, BigFloat(pg));
  BigFloat min_chord(pg);
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      BigFloat gap = (cfg.half_angles[j] - cfg.half_angles[i]).value_at(pg);
      BigFloat d = BigFloat::from_long(2, pg) * cfg.radius_at(pg) * gap.sin();
      if (!(d.sign() > 0))
        throw DegenerateConfiguration("chord_products: zero-length chord");
      if (first || d < min_chord) min_chord = d;
      first = false;
      BigFloat ld = d.log();
      logsum[i] += ld;
      logsum[j] += ld;
    }
  }

  ChordProducts cp;
  cp.precision_bits = prec;
  cp.products.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    cp.products.emplace_back(+1, logsum[i].round_to(prec));
  cp.min_chord = min_chord.round_to(prec);
  cp.min_gap = min_half_angle_gap(cfg, prec);
  return cp;
}

/// Enclosures of the chord products, for the interval backend. Interval
/// magnitudes never under- or overflow here, so the products are direct.
inline std::vector<IntervalValue> chord_products_enclosure(
    const CircleConfig& cfg, int prec) {
  const std::size_t n = cfg.count();
  if (n < 2)
    throw std::invalid_argument("chord_products: need at least 2 points");
  std::vector<IntervalValue> r(n, IntervalValue::from_long(1, prec));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IntervalValue d = chord_distance_enclosure(cfg, i, j, prec);
      if (d.lo.sign() <= 0)
        throw DegenerateConfiguration(
            "chord_products: chord enclosure touches zero");
      r[i] = r[i] * d;
      r[j] = r[j] * d;
    }
  }
  return r;
}

}  // namespace chordal
