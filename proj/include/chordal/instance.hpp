#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chordal/angle.hpp"
#include "chordal/circle.hpp"
#include "chordal/identities.hpp"
#include "chordal/rational.hpp"

namespace chordal {

enum class InstanceKind { Circle, Line };

inline std::string kind_name(InstanceKind k) {
  return k == InstanceKind::Circle ? "circle" : "line";
}

struct GeneratorInfo {
  std::string distribution = "manual";
  std::uint64_t seed = 0;
  std::map<std::string, std::string> parameters;
};

namespace detail {

using nlohmann::json;

inline json rational_to_json(const ExactRational& q) {
  return json{{"num", q.numerator_string()}, {"den", q.denominator_string()}};
}

inline ExactRational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return ExactRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return ExactRational(j.get<long>());
    if (j.is_object()) {
      std::string num = j.at("num").is_string() ? j.at("num").get<std::string>()
                                                : j.at("num").dump();
      std::string den = j.contains("den")
                            ? (j.at("den").is_string()
                                   ? j.at("den").get<std::string>()
                                   : j.at("den").dump())
                            : "1";
      return ExactRational::parse(num) / ExactRational::parse(den);
    }
  } catch (const std::exception& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
  throw std::invalid_argument(where +
                              ": expected a decimal string, an integer, or "
                              "an object with num/den");
}

inline json angle_to_json(const HalfAngle& a) {
  json j;
  if (!a.plain.is_zero() || a.pi_coeff.is_zero()) {
    j["num"] = a.plain.numerator_string();
    j["den"] = a.plain.denominator_string();
  }
  if (!a.pi_coeff.is_zero()) {
    j["pi_num"] = a.pi_coeff.numerator_string();
    j["pi_den"] = a.pi_coeff.denominator_string();
  }
  return j;
}

inline HalfAngle angle_from_json(const json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer())
    return HalfAngle::rational(rational_from_json(j, where));
  if (!j.is_object())
    throw std::invalid_argument(where + ": expected an angle object or string");
  ExactRational plain, pi_coeff;
  if (j.contains("num")) {
    json part{{"num", j.at("num")}};
    if (j.contains("den")) part["den"] = j.at("den");
    plain = rational_from_json(part, where);
  }
  if (j.contains("pi_num")) {
    json part{{"num", j.at("pi_num")}};
    if (j.contains("pi_den")) part["den"] = j.at("pi_den");
    pi_coeff = rational_from_json(part, where + ".pi");
  }
  if (!j.contains("num") && !j.contains("pi_num"))
    throw std::invalid_argument(where + ": angle needs num/den or pi_num/pi_den");
  return {plain, pi_coeff};
}

}  // namespace detail

/// On-disk description of one configuration, exact and backend-independent.
/// Circle instances carry either half-angles (decimal-rational and/or
/// rational multiples of pi) or exact m-parameters; line instances carry
/// sorted rational positions.
struct InstanceFile {
  InstanceKind kind = InstanceKind::Circle;
  ExactRational radius = ExactRational(1);
  // Optional circle center. Chords are translation-invariant, so the math
  // runs on the centered circle; the field exists to make that reduction
  // explicit for instances stated in world coordinates.
  ExactRational center_x = ExactRational(0);
  ExactRational center_y = ExactRational(0);
  std::vector<HalfAngle> half_angles;
  std::vector<ExactRational> m_params;
  std::vector<ExactRational> positions;
  GeneratorInfo generator;

  bool is_pythagorean() const { return !m_params.empty(); }

  CircleConfig to_circle(int equality_precision_bits) const {
    if (kind != InstanceKind::Circle || half_angles.empty())
      throw std::invalid_argument("instance does not carry circle angles");
    return normalize_circle(half_angles, radius, equality_precision_bits);
  }
  PythagoreanCircle to_pythagorean() const {
    if (kind != InstanceKind::Circle || m_params.empty())
      throw std::invalid_argument("instance does not carry m-parameters");
    return PythagoreanCircle::from_params(m_params);
  }
  CollinearConfig to_line() const {
    if (kind != InstanceKind::Line)
      throw std::invalid_argument("instance is not a line configuration");
    return CollinearConfig::from_unsorted(positions);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["format"] = "chordal-instance-v1";
    j["kind"] = kind_name(kind);
    if (kind == InstanceKind::Circle) {
      j["radius"] = detail::rational_to_json(radius);
      if (!center_x.is_zero() || !center_y.is_zero())
        j["center"] = nlohmann::json{{"x", detail::rational_to_json(center_x)},
                                     {"y", detail::rational_to_json(center_y)}};
      if (!m_params.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : m_params) arr.push_back(detail::rational_to_json(m));
        j["m_params"] = arr;
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& a : half_angles) arr.push_back(detail::angle_to_json(a));
        j["half_angles"] = arr;
      }
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& x : positions) arr.push_back(detail::rational_to_json(x));
      j["positions"] = arr;
    }
    nlohmann::json gen;
    gen["distribution"] = generator.distribution;
    gen["seed"] = generator.seed;
    gen["parameters"] = generator.parameters;
    j["generator"] = gen;
    return j;
  }

  /// Canonical serialization; generate -> serialize -> parse -> serialize
  /// is byte-identical.
  std::string serialize() const { return to_json().dump(2) + "\n"; }

  static InstanceFile from_json(const nlohmann::json& j) {
    InstanceFile f;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "circle")
      f.kind = InstanceKind::Circle;
    else if (kind == "line")
      f.kind = InstanceKind::Line;
    else
      throw std::invalid_argument("kind: expected \"circle\" or \"line\"");

    if (f.kind == InstanceKind::Circle) {
      if (j.contains("radius"))
        f.radius = detail::rational_from_json(j.at("radius"), "radius");
      if (!(f.radius > ExactRational(0)))
        throw std::invalid_argument("radius: must be positive");
      if (j.contains("center")) {
        f.center_x = detail::rational_from_json(j.at("center").at("x"),
                                                "center.x");
        f.center_y = detail::rational_from_json(j.at("center").at("y"),
                                                "center.y");
      }
      if (j.contains("m_params")) {
        std::size_t i = 0;
        for (const auto& e : j.at("m_params"))
          f.m_params.push_back(detail::rational_from_json(
              e, "m_params[" + std::to_string(i++) + "]"));
      } else if (j.contains("half_angles")) {
        std::size_t i = 0;
        for (const auto& e : j.at("half_angles"))
          f.half_angles.push_back(detail::angle_from_json(
              e, "half_angles[" + std::to_string(i++) + "]"));
      } else {
        throw std::invalid_argument(
            "circle instance needs half_angles or m_params");
      }
    } else {
      if (!j.contains("positions"))
        throw std::invalid_argument("line instance needs positions");
      std::size_t i = 0;
      for (const auto& e : j.at("positions"))
        f.positions.push_back(detail::rational_from_json(
            e, "positions[" + std::to_string(i++) + "]"));
    }
    if (j.contains("generator")) {
      const auto& g = j.at("generator");
      if (g.contains("distribution"))
        f.generator.distribution = g.at("distribution").get<std::string>();
      if (g.contains("seed"))
        f.generator.seed = g.at("seed").get<std::uint64_t>();
      if (g.contains("parameters"))
        f.generator.parameters =
            g.at("parameters").get<std::map<std::string, std::string>>();
    }
    return f;
  }

  /// Parses instance JSON; malformed input fails with a byte-position
  /// annotated message, semantic problems with a field-path message.
  static InstanceFile parse(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);  // throws with position
    return from_json(j);
  }

  static InstanceFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << serialize();
  }
};

/// FNV-1a 64-bit digest of the canonical instance bytes; stable across
/// runs and platforms.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string instance_digest(const InstanceFile& f) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(f.serialize())));
  return buf;
}

}  // namespace chordal
