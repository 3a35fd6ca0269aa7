#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "chordal/circle.hpp"
#include "chordal/generate.hpp"

using namespace chordal;

namespace {

CircleConfig uniform_circle(std::uint64_t seed, std::size_t n,
                            ExactRational radius = ExactRational(1)) {
  GenerateOptions opt;
  opt.kind = InstanceKind::Circle;
  opt.n = n;
  opt.distribution = "uniform";
  opt.seed = seed;
  opt.min_gap = ExactRational(1, 50);
  opt.radius = radius;
  InstanceFile inst = generate_instance(opt);
  return normalize_circle(inst.half_angles, radius, 64);
}

bool rel_close(const BigFloat& a, const BigFloat& b, int bits) {
  if (b.is_zero()) return a.is_zero();
  return ((a - b) / b).abs() <= BigFloat::pow2(bits, 64);
}

}  // namespace

TEST_CASE("normalize sorts and records the permutation") {
  std::vector<HalfAngle> raw{HalfAngle::pi_multiple(ExactRational(1, 2)),
                             HalfAngle::rational(ExactRational(0))};
  CircleConfig cfg = normalize_circle(raw, ExactRational(1), 64);
  REQUIRE(cfg.count() == 2);
  CHECK(cfg.half_angles[0].identical_to(raw[1]));
  CHECK(cfg.half_angles[1].identical_to(raw[0]));
  CHECK(cfg.original_index == std::vector<std::size_t>{1, 0});
}

TEST_CASE("coincident angles are degenerate") {
  std::vector<HalfAngle> raw{HalfAngle::rational(ExactRational(0)),
                             HalfAngle::rational(ExactRational(0))};
  CHECK_THROWS_AS(normalize_circle(raw, ExactRational(1), 64),
                  DegenerateConfiguration);
}

TEST_CASE("angles are reduced mod pi") {
  // 0.3 + pi reduces to 0.3; paired with 0.1 the sorted order is {0.1, 0.3}
  std::vector<HalfAngle> raw{
      HalfAngle{ExactRational(3, 10), ExactRational(1)},
      HalfAngle::rational(ExactRational(1, 10))};
  CircleConfig cfg = normalize_circle(raw, ExactRational(1), 64);
  CHECK(cfg.half_angles[0].plain == ExactRational(1, 10));
  CHECK(cfg.half_angles[1].plain == ExactRational(3, 10));
  CHECK(cfg.half_angles[1].pi_coeff.is_zero());

  // negative angles wrap up into [0, pi)
  HalfAngle neg{ExactRational(-1, 10), ExactRational(0)};
  HalfAngle red = neg.reduced_mod_pi();
  CHECK(red.pi_coeff == ExactRational(1));
  CHECK(red.plain == ExactRational(-1, 10));
}

TEST_CASE("wrap-around gap triggers degeneracy") {
  // t = 0 and t = pi - 1e-12 are nearly the same point on the circle
  std::vector<HalfAngle> raw{
      HalfAngle::rational(ExactRational(0)),
      HalfAngle{ExactRational(-1, 1000000000000L), ExactRational(1)}};
  CHECK_THROWS_AS(normalize_circle(raw, ExactRational(1), 64),
                  DegenerateConfiguration);
}

TEST_CASE("chord distances match closed forms") {
  const int p = 113;
  std::vector<HalfAngle> raw{HalfAngle::rational(ExactRational(0)),
                             HalfAngle::pi_multiple(ExactRational(1, 4)),
                             HalfAngle::pi_multiple(ExactRational(1, 2))};
  CircleConfig cfg = normalize_circle(raw, ExactRational(1), p);

  BigFloat root2 = BigFloat::from_long(2, p).sqrt();
  CHECK(rel_close(chord_distance(cfg, 0, 1, p), root2, -p + 4));
  CHECK(rel_close(chord_distance(cfg, 0, 2, p), BigFloat::from_long(2, p),
                  -p + 4));

  // radius 3, gap pi/6: 2 * 3 * sin(pi/6) = 3
  std::vector<HalfAngle> raw2{HalfAngle::rational(ExactRational(0)),
                              HalfAngle::pi_multiple(ExactRational(1, 6))};
  CircleConfig cfg3 = normalize_circle(raw2, ExactRational(3), p);
  CHECK(rel_close(chord_distance(cfg3, 0, 1, p), BigFloat::from_long(3, p),
                  -p + 4));
}

TEST_CASE("signed chords are antisymmetric and index-checked") {
  const int p = 64;
  std::vector<HalfAngle> raw{HalfAngle::rational(ExactRational(0)),
                             HalfAngle::pi_multiple(ExactRational(1, 4))};
  CircleConfig cfg = normalize_circle(raw, ExactRational(1), p);
  BigFloat fwd = signed_chord(cfg, 0, 1, p);
  BigFloat bwd = signed_chord(cfg, 1, 0, p);
  CHECK(fwd.sign() > 0);
  CHECK(fwd == -bwd);
  CHECK(chord_distance(cfg, 0, 1, p) == chord_distance(cfg, 1, 0, p));
  CHECK(fwd == chord_distance(cfg, 1, 0, p));
  CHECK_THROWS_AS(signed_chord(cfg, 0, 0, p), SamePoint);
  CHECK_THROWS_AS(signed_chord(cfg, 0, 5, p), std::out_of_range);
}

TEST_CASE("signed chord products carry the alternating sign pattern") {
  // prod_{j != i} signed_chord(i, j) = (-1)^(i-1) * R_i on sorted configs
  const int p = 128;
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10}) {
    CircleConfig cfg = uniform_circle(1000 + n, n);
    ChordProducts cp = chord_products(cfg, p);
    for (std::size_t i = 0; i < n; ++i) {
      BigFloat prod = BigFloat::from_long(1, p);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        prod *= signed_chord(cfg, i, j, p);
      }
      int expected_sign = (i % 2 == 0) ? 1 : -1;  // i is 0-based here
      CHECK(prod.sign() == expected_sign);
      CHECK(rel_close(prod.abs(), cp.products[i].value(), -p + 8));
    }
  }
}

TEST_CASE("rotation leaves chords unchanged") {
  const int p = 113;
  // angles in [0, 1.5] so a +1/10 shift stays inside [0, pi): no wrap,
  // order preserved
  SplitMix64 rng(0x707aULL);
  std::vector<HalfAngle> raw;
  std::set<long> seen;
  while (raw.size() < 6) {
    long k = rng.next_in(0, 1500);
    if (!seen.insert(k).second) continue;
    raw.push_back(HalfAngle::rational(ExactRational(k, 1000)));
  }
  CircleConfig cfg = normalize_circle(raw, ExactRational(1), p);
  std::vector<HalfAngle> shifted;
  for (const auto& a : cfg.half_angles)
    shifted.push_back(a + HalfAngle::rational(ExactRational(1, 10)));
  CircleConfig cfg2 = normalize_circle(shifted, cfg.radius, p);
  for (std::size_t i = 0; i < cfg.count(); ++i) {
    for (std::size_t j = i + 1; j < cfg.count(); ++j) {
      // the shift cancels exactly in the gap, so chords agree bit for bit
      CHECK((cfg2.half_angles[j] - cfg2.half_angles[i])
                .identical_to(cfg.half_angles[j] - cfg.half_angles[i]));
      CHECK(chord_distance(cfg2, i, j, p) == chord_distance(cfg, i, j, p));
      CHECK(rel_close(chord_distance(cfg2, i, j, p),
                      chord_distance(cfg, i, j, p), -p + 4));
    }
  }
}

TEST_CASE("scaling the radius scales chords and products") {
  const int p = 113;
  CircleConfig unit = uniform_circle(123, 6);
  CircleConfig scaled = uniform_circle(123, 6, ExactRational(5, 2));
  BigFloat rho = BigFloat::from_rational(ExactRational(5, 2), p);

  CHECK(rel_close(chord_distance(scaled, 0, 3, p),
                  rho * chord_distance(unit, 0, 3, p), -p + 8));

  ChordProducts cp1 = chord_products(unit, p);
  ChordProducts cp2 = chord_products(scaled, p);
  // log R_i grows by (N-1) log(rho)
  BigFloat expected_shift = BigFloat::from_long(5, p) * rho.log();
  for (std::size_t i = 0; i < 6; ++i) {
    BigFloat shift = cp2.products[i].log_magnitude - cp1.products[i].log_magnitude;
    CHECK((shift - expected_shift).abs() <= BigFloat::pow2(-p + 10, p));
  }
}

TEST_CASE("square and hexagon chord products match the classics") {
  const int p = 64;
  GenerateOptions opt;
  opt.kind = InstanceKind::Circle;
  opt.distribution = "regular";
  opt.n = 4;
  CircleConfig square =
      normalize_circle(generate_instance(opt).half_angles, ExactRational(1), p);
  ChordProducts sq = chord_products(square, p);
  for (const auto& r : sq.products)
    CHECK((r.value() - BigFloat::from_long(4, p)).abs() <=
          BigFloat::pow2(-p + 4, p));

  opt.n = 6;
  CircleConfig hexagon =
      normalize_circle(generate_instance(opt).half_angles, ExactRational(1), p);
  ChordProducts hex = chord_products(hexagon, p);
  // brute-force oracle at high precision: prod_k 2 sin(k pi / 6)
  const int hp = 256;
  BigFloat oracle = BigFloat::from_long(1, hp);
  for (int k = 1; k <= 5; ++k) {
    BigFloat angle = BigFloat::pi(hp) * BigFloat::from_rational(
                                            ExactRational(k, 6), hp);
    oracle *= BigFloat::from_long(2, hp) * angle.sin();
  }
  CHECK((oracle - BigFloat::from_long(6, hp)).abs() <= BigFloat::pow2(-200, hp));
  for (const auto& r : hex.products)
    CHECK(rel_close(r.value(), BigFloat::from_long(6, p), -p + 6));
}

TEST_CASE("two points give equal products") {
  const int p = 64;
  CircleConfig cfg = uniform_circle(5, 2);
  ChordProducts cp = chord_products(cfg, p);
  BigFloat d = chord_distance(cfg, 0, 1, p);
  CHECK(rel_close(cp.products[0].value(), d, -p + 6));
  CHECK(rel_close(cp.products[1].value(), d, -p + 6));
}

TEST_CASE("four concyclic points satisfy the classical four-point relation") {
  // d13 * d24 = d12 * d34 + d14 * d23 for points in circular order
  const int p = 113;
  for (std::uint64_t seed : {11u, 22u, 33u, 44u}) {
    CircleConfig cfg = uniform_circle(seed, 4);
    BigFloat d12 = chord_distance(cfg, 0, 1, p), d34 = chord_distance(cfg, 2, 3, p);
    BigFloat d14 = chord_distance(cfg, 0, 3, p), d23 = chord_distance(cfg, 1, 2, p);
    BigFloat d13 = chord_distance(cfg, 0, 2, p), d24 = chord_distance(cfg, 1, 3, p);
    CHECK(rel_close(d13 * d24, d12 * d34 + d14 * d23, -p + 8));
  }
}

TEST_CASE("unit parameters have unit modulus and reproduce chords") {
  const int p = 113;
  CircleConfig cfg = uniform_circle(77, 8);
  UnitParameters up = unit_parameters(cfg, p);
  REQUIRE(up.count() == 8);

  for (const auto& u : up.values)
    CHECK((u.magnitude() - BigFloat::from_long(1, p)).abs() <=
          BigFloat::pow2(-p + 4, p));

  // d_{i,j} = |u_j^2 - u_i^2| / |u_i u_j| on the unit circle
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      ComplexBigFloat num = up.values[j] * up.values[j] -
                            up.values[i] * up.values[i];
      ComplexBigFloat den = up.values[i] * up.values[j];
      BigFloat via_u = num.magnitude() / den.magnitude();
      CHECK(rel_close(via_u, chord_distance(cfg, i, j, p), -p + 8));
    }
  }

  // endpoints: t = 0 -> u = 1; t = pi/2 -> u = i
  std::vector<HalfAngle> raw{HalfAngle::rational(ExactRational(0)),
                             HalfAngle::pi_multiple(ExactRational(1, 2))};
  UnitParameters ends =
      unit_parameters(normalize_circle(raw, ExactRational(1), p), p);
  CHECK((ends.values[0].re - BigFloat::from_long(1, p)).abs() <=
        BigFloat::pow2(-p + 4, p));
  CHECK(ends.values[0].im.abs() <= BigFloat::pow2(-p + 4, p));
  CHECK(ends.values[1].re.abs() <= BigFloat::pow2(-p + 4, p));
  CHECK((ends.values[1].im - BigFloat::from_long(1, p)).abs() <=
        BigFloat::pow2(-p + 4, p));
}

TEST_CASE("min gap accounts for the wrap-around") {
  const int p = 64;
  std::vector<HalfAngle> raw{HalfAngle::rational(ExactRational(1, 100)),
                             HalfAngle::rational(ExactRational(313, 100))};
  CircleConfig cfg = normalize_circle(raw, ExactRational(1), p);
  // adjacent gap is 3.12, but the circular gap is pi - 3.12 ~ 0.0216
  BigFloat mg = min_half_angle_gap(cfg, p);
  CHECK(mg < BigFloat::from_string("0.025", p));
  CHECK(mg > BigFloat::from_string("0.02", p));
}
