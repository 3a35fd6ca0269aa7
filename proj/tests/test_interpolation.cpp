#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "chordal/gaussian.hpp"
#include "chordal/generate.hpp"
#include "chordal/interpolation.hpp"

using namespace chordal;

namespace {

ExactRational random_rational(SplitMix64& rng, long limit = 50) {
  return ExactRational(rng.next_in(-limit, limit), rng.next_in(1, limit));
}

std::vector<ExactRational> distinct_rationals(SplitMix64& rng, std::size_t n,
                                              long limit = 60) {
  std::vector<ExactRational> out;
  while (out.size() < n) {
    ExactRational x = random_rational(rng, limit);
    bool dup = false;
    for (const auto& y : out) dup = dup || y == x;
    if (!dup) out.push_back(x);
  }
  return out;
}

ExactRational horner(const std::vector<ExactRational>& coeffs,
                     const ExactRational& z) {
  ExactRational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

}  // namespace

TEST_CASE("interpolation reproduces simple polynomials") {
  // line 1 + 2z through (0,1), (1,3); value at 2 is 5
  auto line = InterpolationProblem<ExactRational>::make(
      {ExactRational(0), ExactRational(1)}, {ExactRational(1), ExactRational(3)});
  CHECK(lagrange_interpolate(line, ExactRational(2)) == ExactRational(5));

  // constants interpolate to themselves anywhere
  auto konst = InterpolationProblem<ExactRational>::make(
      {ExactRational(2), ExactRational(5), ExactRational(-7)},
      {ExactRational(9, 4), ExactRational(9, 4), ExactRational(9, 4)});
  CHECK(lagrange_interpolate(konst, ExactRational(1234, 7)) ==
        ExactRational(9, 4));

  // parabola z^2 through (0,0), (1,1), (2,4); value at 3 is 9
  auto parab = InterpolationProblem<ExactRational>::make(
      {ExactRational(0), ExactRational(1), ExactRational(2)},
      {ExactRational(0), ExactRational(1), ExactRational(4)});
  CHECK(lagrange_interpolate(parab, ExactRational(3)) == ExactRational(9));
}

TEST_CASE("duplicate nodes are rejected") {
  CHECK_THROWS_AS(InterpolationProblem<ExactRational>::make(
                      {ExactRational(1), ExactRational(1)},
                      {ExactRational(0), ExactRational(0)}),
                  DuplicateNode);
  std::vector<ExactRational> nodes{ExactRational(2), ExactRational(2)};
  CHECK_THROWS_AS(power_sum_identity(nodes, 0), DuplicateNode);
  CHECK_THROWS_AS(power_sum_identity(std::vector<ExactRational>{}, 0),
                  std::invalid_argument);
}

TEST_CASE("interpolation is exact for random rational polynomials") {
  SplitMix64 rng(0xace1ULL);
  for (std::size_t n = 1; n <= 10; ++n) {
    std::vector<ExactRational> coeffs;
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(random_rational(rng));
    std::vector<ExactRational> nodes = distinct_rationals(rng, n);
    std::vector<ExactRational> values;
    for (const auto& z : nodes) values.push_back(horner(coeffs, z));
    auto prob = InterpolationProblem<ExactRational>::make(nodes, values);
    for (int q = 0; q < 20; ++q) {
      ExactRational z = random_rational(rng, 200);
      CHECK(lagrange_interpolate(prob, z) == horner(coeffs, z));
    }
    // and it reproduces the data at the nodes themselves
    CHECK(lagrange_interpolate(prob, prob.nodes.front()) == values.front());
  }
}

TEST_CASE("power sums vanish below the top degree") {
  std::vector<ExactRational> n123{ExactRational(1), ExactRational(2),
                                  ExactRational(3)};
  CHECK(power_sum_identity(n123, 0) == ExactRational(0));  // 1/2 - 1 + 1/2
  CHECK(power_sum_identity(n123, 1) == ExactRational(0));
  CHECK(power_sum_identity(n123, 2) == ExactRational(1));  // 1/2 - 4 + 9/2

  std::vector<ExactRational> n01{ExactRational(0), ExactRational(1)};
  CHECK(power_sum_identity(n01, 0) == ExactRational(0));  // -1 + 1
  CHECK(power_sum_identity(n01, 1) == ExactRational(1));

  std::vector<ExactRational> single{ExactRational(7, 3)};
  CHECK(power_sum_identity(single, 0) == ExactRational(1));  // N = 1, r = N-1
}

TEST_CASE("power sums at and above N give symmetric functions") {
  SplitMix64 rng(0x4242ULL);
  std::vector<ExactRational> nodes = distinct_rationals(rng, 8);

  // r = N: complete homogeneous of degree 1, i.e. the plain sum
  ExactRational e1;
  for (const auto& z : nodes) e1 += z;
  CHECK(power_sum_identity(nodes, 8) == e1);

  // r = N+1: h_2 = sum_{i <= j} z_i z_j
  ExactRational h2;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i; j < nodes.size(); ++j) h2 += nodes[i] * nodes[j];
  CHECK(power_sum_identity(nodes, 9) == h2);
}

TEST_CASE("power sums work over gaussian rationals") {
  SplitMix64 rng(0x3141ULL);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<GaussianRational> nodes;
    while (nodes.size() < 5) {
      GaussianRational z{random_rational(rng, 20), random_rational(rng, 20)};
      bool dup = false;
      for (const auto& y : nodes) dup = dup || y == z;
      if (!dup) nodes.push_back(z);
    }
    for (unsigned long r = 0; r + 2 <= nodes.size(); ++r)
      CHECK(power_sum_identity(nodes, r) == GaussianRational(0));
    CHECK(power_sum_identity(nodes, nodes.size() - 1) == GaussianRational(1));
  }
}

TEST_CASE("boundary sweep over small node counts") {
  SplitMix64 rng(0x8888ULL);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<ExactRational> nodes = distinct_rationals(rng, n);
      for (unsigned long r = 0; r < n; ++r) {
        ExactRational v = power_sum_identity(nodes, r);
        if (r + 2 <= n)
          CHECK(v == ExactRational(0));
        else
          CHECK(v == ExactRational(1));
      }
    }
  }
}
