#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "chordal/generate.hpp"
#include "chordal/instance.hpp"
#include "chordal/report.hpp"
#include "chordal/verify.hpp"

using namespace chordal;

namespace {

GenerateOptions circle_opts(const std::string& dist, std::size_t n,
                            std::uint64_t seed) {
  GenerateOptions opt;
  opt.kind = InstanceKind::Circle;
  opt.n = n;
  opt.distribution = dist;
  opt.seed = seed;
  return opt;
}

}  // namespace

TEST_CASE("generate-serialize-parse-serialize is byte-identical") {
  for (const char* dist : {"uniform", "regular", "clustered", "pythagorean"}) {
    InstanceFile a = generate_instance(circle_opts(dist, 6, 99));
    std::string s1 = a.serialize();
    InstanceFile b = InstanceFile::parse(s1);
    CHECK(b.serialize() == s1);
  }
  GenerateOptions line = circle_opts("rational-line", 5, 7);
  line.kind = InstanceKind::Line;
  InstanceFile a = generate_instance(line);
  CHECK(InstanceFile::parse(a.serialize()).serialize() == a.serialize());
}

TEST_CASE("generation is deterministic per seed") {
  InstanceFile a = generate_instance(circle_opts("uniform", 8, 123));
  InstanceFile b = generate_instance(circle_opts("uniform", 8, 123));
  InstanceFile c = generate_instance(circle_opts("uniform", 8, 124));
  CHECK(a.serialize() == b.serialize());
  CHECK(a.serialize() != c.serialize());
  CHECK(instance_digest(a) == instance_digest(b));
  CHECK(instance_digest(a) != instance_digest(c));
}

TEST_CASE("regular four-point instance is the exact quarter grid") {
  InstanceFile f = generate_instance(circle_opts("regular", 4, 0));
  REQUIRE(f.half_angles.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(f.half_angles[i].plain.is_zero());
    CHECK(f.half_angles[i].pi_coeff == ExactRational(i, 4));
  }
}

TEST_CASE("line generators produce sorted distinct rationals") {
  GenerateOptions opt = circle_opts("rational-line", 7, 42);
  opt.kind = InstanceKind::Line;
  InstanceFile f = generate_instance(opt);
  REQUIRE(f.positions.size() == 7);
  for (std::size_t i = 1; i < 7; ++i) CHECK(f.positions[i - 1] < f.positions[i]);
  CHECK_NOTHROW(f.to_line());
}

TEST_CASE("invalid generator combinations are usage errors") {
  GenerateOptions opt = circle_opts("pythagorean", 4, 1);
  opt.kind = InstanceKind::Line;
  CHECK_THROWS_AS(generate_instance(opt), std::invalid_argument);
  opt = circle_opts("uniform-line", 4, 1);  // still kind=circle
  CHECK_THROWS_AS(generate_instance(opt), std::invalid_argument);
  opt = circle_opts("uniform", 1, 1);
  CHECK_THROWS_AS(generate_instance(opt), std::invalid_argument);
}

TEST_CASE("angles parse from decimal strings, rationals, and pi multiples") {
  InstanceFile f = InstanceFile::parse(R"({
    "kind": "circle",
    "radius": "2.5",
    "center": {"x": "3", "y": "-1/2"},
    "half_angles": [
      "0.3",
      {"num": "1", "den": "10"},
      {"pi_num": "1", "pi_den": "4"},
      {"num": "-1", "den": "5", "pi_num": "1", "pi_den": "2"}
    ]
  })");
  CHECK(f.radius == ExactRational(5, 2));
  CHECK(f.center_x == ExactRational(3));
  CHECK(f.center_y == ExactRational(-1, 2));
  CHECK(InstanceFile::parse(f.serialize()).serialize() == f.serialize());
  REQUIRE(f.half_angles.size() == 4);
  CHECK(f.half_angles[0].plain == ExactRational(3, 10));
  CHECK(f.half_angles[1].plain == ExactRational(1, 10));
  CHECK(f.half_angles[2].pi_coeff == ExactRational(1, 4));
  CHECK(f.half_angles[3].plain == ExactRational(-1, 5));
  CHECK(f.half_angles[3].pi_coeff == ExactRational(1, 2));
  CHECK_NOTHROW(f.to_circle(64));
}

TEST_CASE("parse errors carry a position or a field path") {
  try {
    InstanceFile::parse("{ not json");
    FAIL("expected a parse error");
  } catch (const nlohmann::json::parse_error& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }

  CHECK_THROWS_WITH(InstanceFile::parse(R"({"kind": "sphere"})"),
                    Catch::Matchers::ContainsSubstring("circle"));
  CHECK_THROWS_WITH(
      InstanceFile::parse(
          R"({"kind": "circle", "half_angles": [{"num": "x", "den": "1"}]})"),
      Catch::Matchers::ContainsSubstring("half_angles[0]"));
  CHECK_THROWS_WITH(
      InstanceFile::parse(R"({"kind": "circle", "radius": "0",
                              "half_angles": ["0.1", "0.2"]})"),
      Catch::Matchers::ContainsSubstring("radius"));
  // JSON floats are rejected: exactness requires strings or num/den
  CHECK_THROWS_AS(
      InstanceFile::parse(R"({"kind": "circle", "half_angles": [0.25]})"),
      std::invalid_argument);
}

TEST_CASE("pythagorean instances round-trip and detect duplicates") {
  InstanceFile f = generate_instance(circle_opts("pythagorean", 6, 11));
  REQUIRE(f.is_pythagorean());
  REQUIRE(f.m_params.size() == 6);
  CHECK_NOTHROW(f.to_pythagorean());

  InstanceFile dup = InstanceFile::parse(R"({
    "kind": "circle",
    "m_params": ["1/2", "1/2", "3"]
  })");
  CHECK_THROWS_AS(dup.to_pythagorean(), DuplicateNode);
}

TEST_CASE("trial seeds are a stated pure function") {
  CHECK(derive_trial_seed(1, 4, 0) == derive_trial_seed(1, 4, 0));
  CHECK(derive_trial_seed(1, 4, 0) != derive_trial_seed(1, 4, 1));
  CHECK(derive_trial_seed(1, 4, 0) != derive_trial_seed(1, 6, 0));
  CHECK(derive_trial_seed(1, 4, 0) != derive_trial_seed(2, 4, 0));
  CHECK(derive_trial_seed(1, 4, 0) ==
        splitmix64_mix(splitmix64_mix(1) ^ ((4ULL << 32) | 0)));
}

TEST_CASE("reports are self-consistent across backends") {
  GenerateOptions opt = circle_opts("regular", 4, 0);
  InstanceFile square = generate_instance(opt);

  auto check_roundtrip = [&](const ResidualReport& rr) {
    ReportFile rep;
    rep.instance_digest = "0000000000000000";
    rep.result = rr;
    nlohmann::json j = nlohmann::json::parse(rep.serialize());
    CHECK(verdict_name(recompute_report_verdict(j)) ==
          j.at("verdict").get<std::string>());
  };

  CircleConfig sq = square.to_circle(64);
  check_roundtrip(verify_identity(sq, NumericContext::bigfloat(64), true));
  check_roundtrip(verify_identity(sq, NumericContext::bigfloat(64), false));
  check_roundtrip(verify_identity(sq, NumericContext::interval(64), true));

  InstanceFile tri = generate_instance(circle_opts("regular", 3, 0));
  CircleConfig tric = tri.to_circle(64);
  check_roundtrip(verify_identity(tric, NumericContext::bigfloat(64), true));
  check_roundtrip(verify_identity(tric, NumericContext::interval(64), false));

  // a case that really escalates: tight clusters keep the first rungs noisy
  GenerateOptions copt = circle_opts("clustered", 6, 8);
  copt.cluster_gap = ExactRational(1, 100000);
  CircleConfig clus = generate_instance(copt).to_circle(64);
  check_roundtrip(verify_identity(clus, NumericContext::bigfloat(24), true));

  CollinearConfig line = CollinearConfig::from_sorted(
      {ExactRational(0), ExactRational(1), ExactRational(7, 2)});
  check_roundtrip(verify_identity(line, NumericContext::exact()));
  check_roundtrip(verify_identity(line, NumericContext::bigfloat(64), true));

  InstanceFile pyth = generate_instance(circle_opts("pythagorean", 4, 5));
  check_roundtrip(
      verify_identity(pyth.to_pythagorean(), NumericContext::gaussian()));
}

TEST_CASE("report json carries the trace and condition block") {
  InstanceFile square = generate_instance(circle_opts("regular", 4, 0));
  ResidualReport rr =
      verify_identity(square.to_circle(64), NumericContext::bigfloat(64), true);
  ReportFile rep;
  rep.instance_digest = instance_digest(square);
  rep.result = rr;
  rep.wall_ms = 1.5;
  nlohmann::json j = rep.to_json();
  CHECK(j.at("format") == "chordal-report-v1");
  CHECK(j.at("backend") == "bigfloat");
  CHECK(j.at("residual_convention") == "odd-minus-even");
  CHECK(j.at("trace").size() == rr.trace.size());
  CHECK(j.at("condition").contains("min_gap"));
  CHECK(j.at("condition").contains("min_chord"));
  CHECK(j.at("condition").contains("max_inv_product"));

  // trace rows round-trip losslessly at the recorded precision
  for (std::size_t k = 0; k < rr.trace.size(); ++k) {
    const auto& row = j.at("trace").at(k);
    BigFloat back = BigFloat::from_string(
        row.at("residual").get<std::string>(), rr.trace[k].precision_bits);
    CHECK(back == rr.trace[k].residual);
  }
}
