#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordal/instance.hpp"

namespace chordal {

/// splitmix64: tiny, well-known, and identical on every platform, which is
/// all instance generation needs.
inline std::uint64_t splitmix64_mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }
  /// 53-bit dyadic fraction in [0, 1).
  ExactRational next_unit() {
    return ExactRational(static_cast<long>(next() >> 11),
                         1L << 53);
  }
  long next_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// Per-trial seed for sweeps: mix(mix(master) XOR (n << 32 | trial)).
/// Stated here so every row of a sweep is independently reproducible.
inline std::uint64_t derive_trial_seed(std::uint64_t master, unsigned n,
                                       unsigned trial) {
  std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | trial;
  return splitmix64_mix(splitmix64_mix(master) ^ key);
}

struct GenerateOptions {
  InstanceKind kind = InstanceKind::Circle;
  std::size_t n = 4;  // point count
  std::string distribution = "uniform";
  std::uint64_t seed = 0;
  ExactRational radius = ExactRational(1);
  ExactRational min_gap = ExactRational(0);          // uniform (circle)
  ExactRational cluster_gap = ExactRational(1, 1000); // clustered (circle)
  long m_limit = 30;     // pythagorean numerator/denominator bound
  long rational_limit = 100;  // rational-line numerator/denominator bound
};

namespace detail {

inline std::vector<ExactRational> distinct_units(SplitMix64& rng, std::size_t n) {
  std::set<std::uint64_t> seen;
  std::vector<ExactRational> out;
  while (out.size() < n) {
    std::uint64_t k = rng.next() >> 11;
    if (!seen.insert(k).second) continue;
    out.emplace_back(static_cast<long>(k), 1L << 53);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline InstanceFile gen_circle_uniform(const GenerateOptions& opt) {
  // t_i = i*d + u_(i) * (pi - n*d), which keeps every adjacent gap >= d
  // while staying uniform over the admissible region.
  const ExactRational d = opt.min_gap;
  const ExactRational nd = d * ExactRational(static_cast<long>(opt.n));
  if (d.sign() < 0 || !(nd < ExactRational(3)))
    throw std::invalid_argument("uniform: need 0 <= n*min_gap < 3");
  SplitMix64 rng(opt.seed);
  auto u = distinct_units(rng, opt.n);
  InstanceFile f;
  f.kind = InstanceKind::Circle;
  f.radius = opt.radius;
  for (std::size_t i = 0; i < opt.n; ++i) {
    ExactRational plain = d * ExactRational(static_cast<long>(i)) - u[i] * nd;
    f.half_angles.push_back({plain, u[i]});
  }
  return f;
}

inline InstanceFile gen_circle_regular(const GenerateOptions& opt) {
  InstanceFile f;
  f.kind = InstanceKind::Circle;
  f.radius = opt.radius;
  for (std::size_t i = 0; i < opt.n; ++i)
    f.half_angles.push_back(HalfAngle::pi_multiple(
        ExactRational(static_cast<long>(i), static_cast<long>(opt.n))));
  return f;
}

inline InstanceFile gen_circle_clustered(const GenerateOptions& opt) {
  const ExactRational d = opt.cluster_gap;
  if (!(d > ExactRational(0)) || !(d < ExactRational(1)))
    throw std::invalid_argument("clustered: need 0 < gap < 1");
  SplitMix64 rng(opt.seed);
  const std::size_t centers = (opt.n + 1) / 2;
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto c = distinct_units(rng, centers);
    InstanceFile f;
    f.kind = InstanceKind::Circle;
    f.radius = opt.radius;
    // center angle c*(pi - 2d); the cluster partner sits at +d
    for (std::size_t j = 0; j < centers && f.half_angles.size() < opt.n; ++j) {
      ExactRational shift = -(d * ExactRational(2)) * c[j];
      f.half_angles.push_back({shift, c[j]});
      if (f.half_angles.size() < opt.n)
        f.half_angles.push_back({shift + d, c[j]});
    }
    try {
      CircleConfig cfg = normalize_circle(f.half_angles, opt.radius, 128);
      BigFloat half_gap =
          BigFloat::from_rational(d, 128) * BigFloat::from_double(0.5, 128);
      if (min_half_angle_gap(cfg, 128) >= half_gap) {
        f.half_angles = cfg.half_angles;  // instance files carry sorted angles
        return f;
      }
    } catch (const DegenerateConfiguration&) {
      // clusters collided; redraw
    }
  }
  throw std::runtime_error("clustered: failed to place clusters, gap too large");
}

inline InstanceFile gen_circle_pythagorean(const GenerateOptions& opt) {
  if (opt.m_limit < 1)
    throw std::invalid_argument("pythagorean: m_limit must be >= 1");
  SplitMix64 rng(opt.seed);
  std::vector<ExactRational> ms;
  while (ms.size() < opt.n) {
    long num = rng.next_in(-opt.m_limit, opt.m_limit);
    long den = rng.next_in(1, opt.m_limit);
    ExactRational m(num, den);
    bool dup = false;
    for (const auto& x : ms) dup = dup || x == m;
    if (!dup) ms.push_back(m);
  }
  std::sort(ms.begin(), ms.end());
  InstanceFile f;
  f.kind = InstanceKind::Circle;
  f.radius = ExactRational(1);  // the exact route lives on the unit circle
  f.m_params = std::move(ms);
  return f;
}

inline InstanceFile gen_line(const GenerateOptions& opt, bool rational) {
  SplitMix64 rng(opt.seed);
  std::vector<ExactRational> xs;
  if (rational) {
    if (opt.rational_limit < 1)
      throw std::invalid_argument("rational-line: limit must be >= 1");
    while (xs.size() < opt.n) {
      long num = rng.next_in(-opt.rational_limit, opt.rational_limit);
      long den = rng.next_in(1, opt.rational_limit);
      ExactRational x(num, den);
      bool dup = false;
      for (const auto& y : xs) dup = dup || y == x;
      if (!dup) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
  } else {
    xs = distinct_units(rng, opt.n);
  }
  InstanceFile f;
  f.kind = InstanceKind::Line;
  f.positions = std::move(xs);
  return f;
}

}  // namespace detail

/// Deterministic instance generation: the same (kind, n, distribution,
/// seed, parameters) always yields the same instance file.
inline InstanceFile generate_instance(const GenerateOptions& opt) {
  if (opt.n < 2) throw std::invalid_argument("generate: n must be >= 2");
  if (!(opt.radius > ExactRational(0)))
    throw std::invalid_argument("generate: radius must be positive");

  InstanceFile f;
  const bool circle = opt.kind == InstanceKind::Circle;
  if (opt.distribution == "uniform" && circle)
    f = detail::gen_circle_uniform(opt);
  else if (opt.distribution == "regular" && circle)
    f = detail::gen_circle_regular(opt);
  else if (opt.distribution == "clustered" && circle)
    f = detail::gen_circle_clustered(opt);
  else if (opt.distribution == "pythagorean" && circle)
    f = detail::gen_circle_pythagorean(opt);
  else if (opt.distribution == "uniform-line" && !circle)
    f = detail::gen_line(opt, false);
  else if (opt.distribution == "rational-line" && !circle)
    f = detail::gen_line(opt, true);
  else
    throw std::invalid_argument("generate: distribution '" + opt.distribution +
                                "' is not valid for kind '" +
                                kind_name(opt.kind) + "'");

  f.generator.distribution = opt.distribution;
  f.generator.seed = opt.seed;
  f.generator.parameters["n"] = std::to_string(opt.n);
  if (circle) {
    f.generator.parameters["radius"] = opt.radius.to_string();
    if (opt.distribution == "uniform")
      f.generator.parameters["min_gap"] = opt.min_gap.to_string();
    if (opt.distribution == "clustered")
      f.generator.parameters["gap"] = opt.cluster_gap.to_string();
    if (opt.distribution == "pythagorean")
      f.generator.parameters["m_limit"] = std::to_string(opt.m_limit);
    if (!f.half_angles.empty()) {
      CircleConfig cfg = normalize_circle(f.half_angles, opt.radius, 128);
      f.generator.parameters["observed_min_gap"] =
          min_half_angle_gap(cfg, 128).to_sci_string();
    }
  } else if (opt.distribution == "rational-line") {
    f.generator.parameters["limit"] = std::to_string(opt.rational_limit);
  }
  return f;
}

}  // namespace chordal
